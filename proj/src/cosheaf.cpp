#include "zzc/cosheaf.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zzc/error.hpp"

namespace zzc {

namespace {

StratifiedLine line_from_coords(std::vector<Rational> coords) {
  if (coords.empty()) return StratifiedLine();
  return StratifiedLine::from_points(std::move(coords));
}

void require_vertex(const StratifiedLine& line, StratumId v) {
  line.require(v);
  if (!v.is_vertex()) throw Error(ErrorCode::NotAVertex, "stratum " + v.to_string() + " is an edge");
}

void require_edge(const StratifiedLine& line, StratumId e) {
  line.require(e);
  if (!e.is_edge()) throw Error(ErrorCode::NotAnEdge, "stratum " + e.to_string() + " is a vertex");
}

}  // namespace

// ---------------------------------------------------------------------------
// ZZModule

ZZModule::ZZModule(StratifiedLine line, std::vector<std::size_t> dims, FieldSpec field)
    : line_(std::move(line)), field_(field), dims_(std::move(dims)) {
  require_valid_field(field_);
  if (dims_.size() != line_.num_strata()) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(line_.num_strata()) +
                                              " stratum dimensions, got " +
                                              std::to_string(dims_.size()));
  }
  maps_.assign(2 * (line_.num_vertices() + 1), Mat());
  for (auto e : line_.strata()) {
    if (!e.is_edge()) continue;
    for (auto v : line_.incidences(e)) {
      maps_[incidence_slot(e, v)] = Mat(dim(v), dim(e), field_);
    }
  }
}

std::size_t ZZModule::dim(StratumId s) const {
  line_.require(s);
  return dims_[s.position()];
}

std::size_t ZZModule::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

std::size_t ZZModule::incidence_slot(StratumId edge, StratumId vertex) const {
  require_edge(line_, edge);
  line_.require(vertex);
  const auto j = static_cast<std::size_t>(edge.index());
  if (vertex == edge.prev()) return 2 * j;
  if (vertex == edge.next()) return 2 * j + 1;
  throw Error(ErrorCode::InvalidStratum,
              "vertex " + vertex.to_string() + " is not incident to edge " + edge.to_string());
}

const Mat& ZZModule::map(StratumId edge, StratumId vertex) const {
  return maps_[incidence_slot(edge, vertex)];
}

void ZZModule::set_map(StratumId edge, StratumId vertex, Mat m) {
  const std::size_t slot = incidence_slot(edge, vertex);
  if (m.rows() != dim(vertex) || m.cols() != dim(edge)) {
    throw Error(ErrorCode::ShapeMismatch,
                "map " + edge.to_string() + " -> " + vertex.to_string() + " must be " +
                    std::to_string(dim(vertex)) + "x" + std::to_string(dim(edge)));
  }
  if (m.field() != field_) throw Error(ErrorCode::InvalidField, "map over a different field");
  maps_[slot] = std::move(m);
}

QuiverDiagram segment_diagram(const ZZModule& m, StratumId a, StratumId b) {
  m.line().require(a);
  m.line().require(b);
  if (b < a) throw Error(ErrorCode::InvalidInput, "segment end precedes its start");
  QuiverDiagram d;
  d.field = m.field();
  for (auto s = a; s <= b; s = s.next()) d.nodes.push_back(m.dim(s));
  for (auto e = a; e <= b; e = e.next()) {
    if (!e.is_edge()) continue;
    for (auto v : m.line().incidences(e)) {
      if (v < a || v > b) continue;
      d.arrows.push_back({static_cast<std::size_t>(e.twice() - a.twice()),
                          static_cast<std::size_t>(v.twice() - a.twice()), m.map(e, v)});
    }
  }
  return d;
}

// ---------------------------------------------------------------------------
// Constructions

void validate(const PosetRep& p) {
  require_valid_field(p.field);
  const std::size_t k = p.vertex_coords.size();
  if (k == 0) throw Error(ErrorCode::InvalidInput, "a poset representation needs a point");
  for (std::size_t t = 1; t < k; ++t) {
    if (p.vertex_coords[t] == p.vertex_coords[t - 1]) {
      throw Error(ErrorCode::DuplicatePoint, "duplicate point " + to_string(p.vertex_coords[t]));
    }
    if (p.vertex_coords[t] < p.vertex_coords[t - 1]) {
      throw Error(ErrorCode::InvalidInput, "poset points must be increasing");
    }
  }
  if (p.dims.size() != k || p.directions.size() != k - 1 || p.arrows.size() != k - 1) {
    throw Error(ErrorCode::ShapeMismatch, "poset representation sizes disagree");
  }
  for (std::size_t t = 0; t + 1 < k; ++t) {
    const bool right = p.directions[t] == Direction::Right;
    const std::size_t lo = right ? t : t + 1;
    const std::size_t hi = right ? t + 1 : t;
    const Mat& a = p.arrows[t];
    if (a.rows() != p.dims[hi] || a.cols() != p.dims[lo] || a.field() != p.field) {
      throw Error(ErrorCode::ShapeMismatch, "arrow " + std::to_string(t) + " has the wrong shape");
    }
  }
}

ZZModule propagate(const PosetRep& p) {
  validate(p);
  const std::size_t k = p.vertex_coords.size();
  std::vector<std::size_t> dims;
  dims.reserve(2 * k + 1);
  dims.push_back(p.dims.front());
  for (std::size_t t = 0; t < k; ++t) {
    dims.push_back(p.dims[t]);
    if (t + 1 < k) {
      dims.push_back(p.directions[t] == Direction::Right ? p.dims[t] : p.dims[t + 1]);
    }
  }
  dims.push_back(p.dims.back());

  ZZModule m(StratifiedLine::from_points(p.vertex_coords), std::move(dims), p.field);
  const auto kk = static_cast<std::int64_t>(k);
  m.set_map(StratumId::edge(0), StratumId::vertex(1), Mat::identity(p.dims.front(), p.field));
  m.set_map(StratumId::edge(kk), StratumId::vertex(kk), Mat::identity(p.dims.back(), p.field));
  for (std::size_t t = 0; t + 1 < k; ++t) {
    const auto e = StratumId::edge(static_cast<std::int64_t>(t) + 1);
    const bool right = p.directions[t] == Direction::Right;
    const StratumId lo = right ? e.prev() : e.next();
    const StratumId hi = right ? e.next() : e.prev();
    m.set_map(e, lo, Mat::identity(m.dim(e), p.field));
    m.set_map(e, hi, p.arrows[t]);
  }
  return m;
}

ZZModule filtration_module(const Filtration& f, const FiltrationHomology& h) {
  const std::size_t p = f.steps();
  if (p == 0) return ZZModule(StratifiedLine(), {0}, h.field());
  PosetRep rep;
  rep.field = h.field();
  rep.vertex_coords = f.values();
  for (std::size_t j = 1; j <= p; ++j) {
    rep.dims.push_back(h.dim(j));
    if (j < p) {
      rep.directions.push_back(Direction::Right);
      rep.arrows.push_back(h.induced_map(j, j + 1));
    }
  }
  return propagate(rep);
}

ZZModule filtration_module(const Filtration& f, int n, FieldSpec field) {
  return filtration_module(f, FiltrationHomology(f, n, field));
}

ZZModule augmented_module(const Filtration& f, int n, FieldSpec field) {
  const FiltrationHomology h(f, n, field);
  ZZModule m = filtration_module(f, h);
  for (std::size_t j = 1; j <= f.steps(); ++j) {
    const std::size_t a = h.aug_rank(j);
    if (a == 0) continue;
    m = direct_sum(m, skyscraper(m.line(), StratumId::vertex(static_cast<std::int64_t>(j)), a, field));
  }
  return m;
}

ZZModule skyscraper(const StratifiedLine& line, StratumId vertex, std::size_t d, FieldSpec field) {
  require_vertex(line, vertex);
  std::vector<std::size_t> dims(line.num_strata(), 0);
  dims[vertex.position()] = d;
  return ZZModule(line, std::move(dims), field);
}

ZZModule direct_sum(const ZZModule& a, const ZZModule& b) {
  if (!(a.line() == b.line())) throw Error(ErrorCode::LineMismatch, "summands live on different lines");
  if (a.field() != b.field()) throw Error(ErrorCode::InvalidField, "summands use different fields");
  std::vector<std::size_t> dims(a.dims().size());
  for (std::size_t i = 0; i < dims.size(); ++i) dims[i] = a.dims()[i] + b.dims()[i];
  ZZModule out(a.line(), std::move(dims), a.field());
  for (auto e : a.line().strata()) {
    if (!e.is_edge()) continue;
    for (auto v : a.line().incidences(e)) out.set_map(e, v, block_diagonal(a.map(e, v), b.map(e, v)));
  }
  return out;
}

std::size_t costalk(const ZZModule& m, StratumId s) { return m.dim(s); }

std::size_t costalk(const ZZModule& m, const Rational& x) { return m.dim(m.line().locate(x)); }

// ---------------------------------------------------------------------------
// Pushforward and local surgery

ZZModule pushforward(const ZZModule& m, const StratifiedLineMap& map) {
  if (!(map.source == m.line())) {
    throw Error(ErrorCode::InvalidMap, "map source is not the module's line");
  }
  if (!validate_stratified(map)) throw Error(ErrorCode::InvalidMap, "map is not stratified");
  const StratifiedLine& target = map.target;

  // Target edges have exactly one source edge above them.
  std::vector<StratumId> edge_preimage(target.num_strata());
  for (auto s : m.line().strata()) {
    const StratumId t = map(s);
    if (t.is_edge()) edge_preimage[t.position()] = s;
  }

  std::vector<std::size_t> dims(target.num_strata());
  std::vector<Colimit> colimits(target.num_strata());
  for (auto t : target.strata()) {
    if (t.is_edge()) {
      dims[t.position()] = m.dim(edge_preimage[t.position()]);
      continue;
    }
    const StratumId a = edge_preimage[t.prev().position()];
    const StratumId b = edge_preimage[t.next().position()];
    colimits[t.position()] = diagram_colimit(segment_diagram(m, a, b));
    dims[t.position()] = colimits[t.position()].dim;
  }

  ZZModule out(target, std::move(dims), m.field());
  for (auto v : target.strata()) {
    if (!v.is_vertex()) continue;
    const auto& proj = colimits[v.position()].projections;
    out.set_map(v.prev(), v, proj.front());
    out.set_map(v.next(), v, proj.back());
  }
  return out;
}

VertexSequence ses_at_vertex(const ZZModule& m, StratumId vertex) {
  require_vertex(m.line(), vertex);
  std::vector<std::size_t> dims = m.dims();
  dims[vertex.position()] = 0;
  ZZModule off(m.line(), std::move(dims), m.field());
  for (auto e : m.line().strata()) {
    if (!e.is_edge()) continue;
    for (auto v : m.line().incidences(e)) {
      if (v != vertex) off.set_map(e, v, m.map(e, v));
    }
  }
  return {std::move(off), skyscraper(m.line(), vertex, m.dim(vertex), m.field())};
}

ZZModule subdivide(const ZZModule& m, StratumId edge, const Rational& x) {
  require_edge(m.line(), edge);
  if (m.line().locate(x) != edge) {
    throw Error(ErrorCode::PointNotInEdge,
                to_string(x) + " does not lie inside edge " + edge.to_string());
  }
  std::vector<Rational> coords = m.line().vertex_coords();
  coords.insert(std::upper_bound(coords.begin(), coords.end(), x), x);
  const auto shift = [&](StratumId s) { return s < edge ? s : StratumId::from_twice(s.twice() + 2); };

  const StratumId left = edge;
  const StratumId mid = edge.next();
  const StratumId right = mid.next();
  std::vector<std::size_t> dims;
  dims.reserve(m.dims().size() + 2);
  for (auto s : m.line().strata()) {
    dims.push_back(m.dim(s));
    if (s == edge) {
      dims.push_back(m.dim(s));
      dims.push_back(m.dim(s));
    }
  }

  ZZModule out(StratifiedLine::from_points(std::move(coords)), std::move(dims), m.field());
  for (auto e : m.line().strata()) {
    if (!e.is_edge() || e == edge) continue;
    for (auto v : m.line().incidences(e)) out.set_map(shift(e), shift(v), m.map(e, v));
  }
  const Mat id = Mat::identity(m.dim(edge), m.field());
  for (auto v : m.line().incidences(edge)) {
    if (v < edge) {
      out.set_map(left, v, m.map(edge, v));
    } else {
      out.set_map(right, shift(v), m.map(edge, v));
    }
  }
  out.set_map(left, mid, id);
  out.set_map(right, mid, id);
  return out;
}

namespace {

bool contractible(const ZZModule& m, StratumId v) {
  return is_invertible(m.map(v.prev(), v)) && is_invertible(m.map(v.next(), v));
}

// Merges vertex v with its two edges into a single edge identified with the
// left one.
ZZModule contract(const ZZModule& m, StratumId v) {
  const StratumId left = v.prev();
  const StratumId right = v.next();
  std::vector<Rational> coords = m.line().vertex_coords();
  coords.erase(coords.begin() + (v.index() - 1));
  const auto shift = [&](StratumId s) { return s < v ? s : StratumId::from_twice(s.twice() - 2); };

  std::vector<std::size_t> dims;
  dims.reserve(m.dims().size() - 2);
  for (auto s : m.line().strata()) {
    if (s != v && s != right) dims.push_back(m.dim(s));
  }

  ZZModule out(line_from_coords(std::move(coords)), std::move(dims), m.field());
  for (auto e : m.line().strata()) {
    if (!e.is_edge() || e == left || e == right) continue;
    for (auto u : m.line().incidences(e)) out.set_map(shift(e), shift(u), m.map(e, u));
  }
  for (auto u : m.line().incidences(left)) {
    if (u != v) out.set_map(left, u, m.map(left, u));
  }
  for (auto u : m.line().incidences(right)) {
    if (u == v) continue;
    const Mat through = m.map(right, u) * inverse(m.map(right, v)) * m.map(left, v);
    out.set_map(left, shift(u), through);
  }
  return out;
}

}  // namespace

ZZModule weak_normal_form(const ZZModule& m) {
  ZZModule cur = m;
  for (;;) {
    bool changed = false;
    for (std::size_t j = 1; j <= cur.line().num_vertices(); ++j) {
      const auto v = StratumId::vertex(static_cast<std::int64_t>(j));
      if (contractible(cur, v)) {
        cur = contract(cur, v);
        changed = true;
        break;
      }
    }
    if (!changed) return cur;
  }
}

GradedZZModule graded_filtration_module(const Filtration& f, int max_degree, FieldSpec field) {
  GradedZZModule g;
  for (int n = 0; n <= max_degree; ++n) g.components.emplace(n, filtration_module(f, n, field));
  return g;
}

}  // namespace zzc
