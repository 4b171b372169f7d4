#include "zzc/stratline.hpp"

#include <algorithm>

#include "zzc/error.hpp"

namespace zzc {

StratumId StratumId::parse(std::string_view text) {
  const Rational twice = parse_rational(text) * 2;
  if (!is_integer(twice)) {
    throw Error(ErrorCode::ParseError, "'" + std::string(text) + "' is not a half-integer");
  }
  return StratumId(static_cast<std::int64_t>(boost::multiprecision::numerator(twice)));
}

std::string StratumId::to_string() const { return zzc::to_string(value()); }

StratifiedLine StratifiedLine::from_points(std::vector<Rational> coords) {
  if (coords.empty()) {
    throw Error(ErrorCode::InvalidInput, "a stratified line needs at least one point");
  }
  std::sort(coords.begin(), coords.end());
  if (auto dup = std::adjacent_find(coords.begin(), coords.end()); dup != coords.end()) {
    throw Error(ErrorCode::DuplicatePoint, "duplicate point " + to_string(*dup));
  }
  StratifiedLine line;
  line.coords_ = std::move(coords);
  return line;
}

StratifiedLine StratifiedLine::integers(std::size_t n) {
  StratifiedLine line;
  for (std::size_t i = 1; i <= n; ++i) line.coords_.emplace_back(static_cast<long long>(i));
  return line;
}

void StratifiedLine::require(StratumId s) const {
  if (!contains(s)) {
    throw Error(ErrorCode::InvalidStratum,
                "stratum " + s.to_string() + " is not on a line with " +
                    std::to_string(num_vertices()) + " vertices");
  }
}

std::vector<StratumId> StratifiedLine::strata() const {
  std::vector<StratumId> out;
  out.reserve(num_strata());
  for (std::size_t pos = 0; pos < num_strata(); ++pos) out.push_back(StratumId::at_position(pos));
  return out;
}

const Rational& StratifiedLine::coord(StratumId vertex) const {
  require(vertex);
  if (!vertex.is_vertex()) {
    throw Error(ErrorCode::NotAVertex, "stratum " + vertex.to_string() + " is an edge");
  }
  return coords_[static_cast<std::size_t>(vertex.index() - 1)];
}

StratumId StratifiedLine::locate(const Rational& x) const {
  const auto it = std::lower_bound(coords_.begin(), coords_.end(), x);
  const auto j = static_cast<std::int64_t>(it - coords_.begin());
  if (it != coords_.end() && *it == x) return StratumId::vertex(j + 1);
  return StratumId::edge(j);
}

std::vector<StratumId> StratifiedLine::incidences(StratumId edge) const {
  require(edge);
  if (!edge.is_edge()) {
    throw Error(ErrorCode::NotAnEdge, "stratum " + edge.to_string() + " is a vertex");
  }
  std::vector<StratumId> out;
  if (edge != first()) out.push_back(edge.prev());
  if (edge != last()) out.push_back(edge.next());
  return out;
}

ZZPoset zz_poset(const StratifiedLine& line) {
  ZZPoset poset;
  poset.objects = line.strata();
  for (auto s : poset.objects) {
    if (!s.is_edge()) continue;
    for (auto v : line.incidences(s)) poset.relations.emplace_back(s, v);
  }
  return poset;
}

StratifiedLineMap identity_map(const StratifiedLine& line) {
  return {line, line, line.strata()};
}

bool validate_stratified(const StratifiedLineMap& m) {
  if (m.assignment.size() != m.source.num_strata()) return false;
  std::vector<std::size_t> hits(m.target.num_strata(), 0);
  for (std::size_t pos = 0; pos < m.assignment.size(); ++pos) {
    const StratumId t = m.assignment[pos];
    if (!m.target.contains(t)) return false;
    if (pos > 0) {
      const StratumId before = m.assignment[pos - 1];
      if (t < before || t.twice() > before.twice() + 1) return false;
    }
    ++hits[t.position()];
    if (t.is_edge() && !StratumId::at_position(pos).is_edge()) return false;
  }
  for (std::size_t tpos = 0; tpos < hits.size(); ++tpos) {
    if (hits[tpos] == 0) return false;
    if (StratumId::at_position(tpos).is_edge() && hits[tpos] != 1) return false;
  }
  return true;
}

StratifiedLineMap compose(const StratifiedLineMap& second, const StratifiedLineMap& first) {
  if (!(first.target == second.source)) {
    throw Error(ErrorCode::LineMismatch, "composed maps do not share a middle line");
  }
  StratifiedLineMap out{first.source, second.target, {}};
  out.assignment.reserve(first.assignment.size());
  for (auto s : first.assignment) out.assignment.push_back(second(s));
  return out;
}

StratifiedLineMap collapse_map(const StratifiedLine& index_line, const std::vector<Rational>& values,
                               const std::vector<std::size_t>& block_of) {
  const std::size_t n = index_line.num_vertices();
  if (n == 0 || block_of.size() != n) {
    throw Error(ErrorCode::NonMonotoneBlocks, "need one block per index vertex");
  }
  StratifiedLine target = StratifiedLine::from_points(values);
  if (!std::is_sorted(values.begin(), values.end())) {
    throw Error(ErrorCode::InvalidInput, "monotone values must be increasing");
  }
  const std::size_t p = values.size();
  if (block_of.front() != 1 || block_of.back() != p) {
    throw Error(ErrorCode::NonMonotoneBlocks, "blocks must start at 1 and end at p");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (block_of[i] < block_of[i - 1] || block_of[i] > block_of[i - 1] + 1) {
      throw Error(ErrorCode::NonMonotoneBlocks,
                  "block sequence must be weakly increasing without gaps");
    }
  }

  StratifiedLineMap out{index_line, std::move(target), {}};
  out.assignment.reserve(index_line.num_strata());
  out.assignment.push_back(StratumId::edge(0));
  for (std::size_t i = 1; i <= n; ++i) {
    const auto block = static_cast<std::int64_t>(block_of[i - 1]);
    out.assignment.push_back(StratumId::vertex(block));
    if (i == n) {
      out.assignment.push_back(StratumId::edge(static_cast<std::int64_t>(p)));
    } else if (block_of[i] == block_of[i - 1]) {
      out.assignment.push_back(StratumId::vertex(block));
    } else {
      out.assignment.push_back(StratumId::edge(block));
    }
  }
  return out;
}

}  // namespace zzc
