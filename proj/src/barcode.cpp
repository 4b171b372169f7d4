#include "zzc/barcode.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zzc/error.hpp"

namespace zzc {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// Groups elements (stratum position, element) into components and reads each
// off as an interval. Returns false when a component is not an interval.
bool components_to_bars(const std::vector<std::size_t>& offsets, DisjointSets& sets,
                        std::map<Interval, std::size_t>& bars) {
  std::map<std::size_t, std::vector<std::size_t>> positions;
  for (std::size_t pos = 0; pos + 1 < offsets.size(); ++pos) {
    for (std::size_t node = offsets[pos]; node < offsets[pos + 1]; ++node) {
      positions[sets.find(node)].push_back(pos);
    }
  }
  for (auto& [root, ps] : positions) {
    std::sort(ps.begin(), ps.end());
    for (std::size_t i = 1; i < ps.size(); ++i) {
      if (ps[i] != ps[i - 1] + 1) return false;
    }
    ++bars[{StratumId::at_position(ps.front()), StratumId::at_position(ps.back())}];
  }
  return true;
}

bool is_partial_permutation(const Mat& m) {
  std::vector<int> row_hits(m.rows(), 0), col_hits(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.at(r, c) == 0) continue;
      if (++row_hits[r] > 1 || ++col_hits[c] > 1) return false;
    }
  }
  return true;
}

struct GlElement {
  Mat basis;
  Mat inverse;
};

std::vector<GlElement> general_linear_f2(std::size_t d) {
  const FieldSpec f2{2};
  std::vector<GlElement> out;
  const std::size_t cells = d * d;
  for (std::uint32_t bits = 0; bits < (1u << cells); ++bits) {
    Mat g(d, d, f2);
    for (std::size_t i = 0; i < cells; ++i) {
      if ((bits >> i) & 1u) g.set(i / d, i % d, Rational(1));
    }
    if (is_invertible(g)) out.push_back({g, inverse(g)});
  }
  return out;
}

class BruteForce {
 public:
  explicit BruteForce(const ZZModule& m) : m_(m), strata_(m.line().strata()) {
    for (std::size_t d = 0; d <= 3; ++d) groups_.push_back(general_linear_f2(d));
    choice_.resize(strata_.size());
  }

  bool search(std::size_t pos) {
    if (pos == strata_.size()) return true;
    for (const auto& g : groups_[m_.dim(strata_[pos])]) {
      choice_[pos] = &g;
      if (pos > 0 && !is_partial_permutation(link(pos))) continue;
      if (search(pos + 1)) return true;
    }
    return false;
  }

  // The map between positions pos - 1 and pos in the chosen bases.
  Mat link(std::size_t pos) const {
    const StratumId a = strata_[pos - 1];
    const StratumId b = strata_[pos];
    if (a.is_edge()) return choice_[pos]->inverse * m_.map(a, b) * choice_[pos - 1]->basis;
    return choice_[pos - 1]->inverse * m_.map(b, a) * choice_[pos]->basis;
  }

  Barcode trace() const {
    std::vector<std::size_t> offsets{0};
    for (auto s : strata_) offsets.push_back(offsets.back() + m_.dim(s));
    DisjointSets sets(offsets.back());
    for (std::size_t pos = 1; pos < strata_.size(); ++pos) {
      const Mat t = link(pos);
      const bool edge_first = strata_[pos - 1].is_edge();
      const std::size_t vertex_off = edge_first ? offsets[pos] : offsets[pos - 1];
      const std::size_t edge_off = edge_first ? offsets[pos - 1] : offsets[pos];
      for (std::size_t r = 0; r < t.rows(); ++r) {
        for (std::size_t c = 0; c < t.cols(); ++c) {
          if (t.at(r, c) != 0) sets.unite(vertex_off + r, edge_off + c);
        }
      }
    }
    Barcode out{m_.line(), {}};
    if (!components_to_bars(offsets, sets, out.bars)) {
      throw Error(ErrorCode::NoIntervalDecomposition, "traced component is not an interval");
    }
    return out;
  }

 private:
  const ZZModule& m_;
  std::vector<StratumId> strata_;
  std::vector<std::vector<GlElement>> groups_;
  std::vector<const GlElement*> choice_;
};

}  // namespace

std::size_t Barcode::total() const {
  std::size_t n = 0;
  for (const auto& [iv, mult] : bars) n += mult;
  return n;
}

std::size_t rank_invariant(const ZZModule& m, StratumId a, StratumId b) {
  return lim_to_colim_rank(segment_diagram(m, a, b));
}

Barcode decompose(const ZZModule& m) {
  const std::size_t n = m.line().num_strata();
  // r[a][b] for a <= b; zero for anything off the line.
  std::vector<std::vector<std::int64_t>> r(n + 1, std::vector<std::int64_t>(n + 1, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const auto profile = zigzag_rank_profile(
        segment_diagram(m, StratumId::at_position(a), m.line().last()));
    for (std::size_t b = a; b < n; ++b) r[a + 1][b] = static_cast<std::int64_t>(profile[b - a]);
  }
  // Row index is shifted by one so that a - 1/2 at the left end reads row 0.
  Barcode out{m.line(), {}};
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      const std::int64_t mult = r[a + 1][b] - r[a][b] - r[a + 1][b + 1] + r[a][b + 1];
      if (mult < 0) throw Error(ErrorCode::InvalidInput, "rank invariant is not a zig-zag invariant");
      if (mult > 0) {
        out.bars[{StratumId::at_position(a), StratumId::at_position(b)}] =
            static_cast<std::size_t>(mult);
      }
    }
  }
  return out;
}

Barcode brute_force_decompose(const ZZModule& m) {
  if (m.field() != FieldSpec{2}) {
    throw Error(ErrorCode::InvalidField, "brute-force decomposition enumerates F_2 only");
  }
  if (m.total_dim() > 10) throw Error(ErrorCode::TooLarge, "total dimension exceeds 10");
  for (auto d : m.dims()) {
    if (d > 3) throw Error(ErrorCode::TooLarge, "a stratum dimension exceeds 3");
  }
  BruteForce search(m);
  if (!search.search(0)) {
    throw Error(ErrorCode::NoIntervalDecomposition, "no basis splits the module into intervals");
  }
  return search.trace();
}

bool is_isomorphic(const ZZModule& a, const ZZModule& b) {
  if (!(a.line() == b.line())) throw Error(ErrorCode::LineMismatch, "modules live on different lines");
  return decompose(a) == decompose(b);
}

// ---------------------------------------------------------------------------
// Diagrams

Endpoint Endpoint::parse(std::string_view text) {
  if (text == "-inf") return neg_inf();
  if (text == "inf" || text == "+inf") return pos_inf();
  return of(StratumId::parse(text));
}

std::string Endpoint::to_string() const {
  if (twice == kNegInf) return "-inf";
  if (twice == kPosInf) return "inf";
  return stratum().to_string();
}

Diagram diagram(const Barcode& b) {
  Diagram out;
  for (const auto& [iv, mult] : b.bars) {
    const Endpoint birth = iv.lo == b.line.first() ? Endpoint::neg_inf() : Endpoint::of(iv.lo);
    const Endpoint death = iv.hi == b.line.last() ? Endpoint::pos_inf() : Endpoint::of(iv.hi);
    out[{birth, death}] += mult;
  }
  return out;
}

Diagram diagram_union(const Diagram& a, const Diagram& b) {
  Diagram out = a;
  for (const auto& [pt, mult] : b) out[pt] += mult;
  return out;
}

VirtualDiagram delta_hom(const ZZModule& pos, const ZZModule& neg) {
  if (!(pos.line() == neg.line())) throw Error(ErrorCode::LineMismatch, "modules live on different lines");
  VirtualDiagram out;
  for (const auto& [pt, mult] : diagram(decompose(pos))) out[pt] += static_cast<std::int64_t>(mult);
  for (const auto& [pt, mult] : diagram(decompose(neg))) out[pt] -= static_cast<std::int64_t>(mult);
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// ---------------------------------------------------------------------------
// K_0

K0Class operator+(const K0Class& a, const K0Class& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw Error(ErrorCode::ShapeMismatch, "K0 classes of different lines");
  K0Class out = a;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return out;
}

K0Class operator-(const K0Class& a, const K0Class& b) {
  if (a.coeffs.size() != b.coeffs.size()) throw Error(ErrorCode::ShapeMismatch, "K0 classes of different lines");
  K0Class out = a;
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] -= b.coeffs[i];
  return out;
}

K0Class k0_class(const ZZModule& m) {
  K0Class out;
  out.coeffs.assign(m.dims().begin(), m.dims().end());
  return out;
}

K0Class k0_of_barcode(const Barcode& b) {
  K0Class out{std::vector<std::int64_t>(b.line.num_strata(), 0)};
  for (const auto& [iv, mult] : b.bars) {
    for (auto pos = iv.lo.position(); pos <= iv.hi.position(); ++pos) {
      out.coeffs[pos] += static_cast<std::int64_t>(mult);
    }
  }
  return out;
}

namespace {

const StratifiedLine* common_line(const GradedZZModule& g) {
  const StratifiedLine* line = nullptr;
  for (const auto& [n, m] : g.components) {
    if (line != nullptr && !(*line == m.line())) {
      throw Error(ErrorCode::LineMismatch, "graded components live on different lines");
    }
    line = &m.line();
  }
  return line;
}

}  // namespace

K0Class euler_curve(const GradedZZModule& g) {
  const StratifiedLine* line = common_line(g);
  if (line == nullptr) return {};
  K0Class out{std::vector<std::int64_t>(line->num_strata(), 0)};
  for (const auto& [n, m] : g.components) {
    const std::int64_t sign = n % 2 == 0 ? 1 : -1;
    for (std::size_t pos = 0; pos < out.coeffs.size(); ++pos) {
      out.coeffs[pos] += sign * static_cast<std::int64_t>(m.dims()[pos]);
    }
  }
  return out;
}

K0Class euler_class(const GradedZZModule& g) {
  const StratifiedLine* line = common_line(g);
  if (line == nullptr) return {};
  K0Class out{std::vector<std::int64_t>(line->num_strata(), 0)};
  for (const auto& [n, m] : g.components) {
    out = n % 2 == 0 ? out + k0_class(m) : out - k0_class(m);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Set-valued modules

SetZZModule::SetZZModule(StratifiedLine line, std::vector<std::vector<std::string>> labels)
    : line_(std::move(line)), labels_(std::move(labels)) {
  if (labels_.size() != line_.num_strata()) {
    throw Error(ErrorCode::ShapeMismatch, "need one set per stratum");
  }
  for (const auto& set : labels_) {
    std::set<std::string> seen(set.begin(), set.end());
    if (seen.size() != set.size()) throw Error(ErrorCode::InvalidInput, "repeated element label");
  }
}

void SetZZModule::set_map(StratumId edge, StratumId vertex, std::vector<std::size_t> image) {
  const auto inc = line_.incidences(edge);
  if (std::find(inc.begin(), inc.end(), vertex) == inc.end()) {
    throw Error(ErrorCode::InvalidStratum,
                "vertex " + vertex.to_string() + " is not incident to edge " + edge.to_string());
  }
  if (image.size() != size(edge)) {
    throw Error(ErrorCode::InvalidMap, "map from edge " + edge.to_string() + " is not total");
  }
  for (auto i : image) {
    if (i >= size(vertex)) throw Error(ErrorCode::InvalidMap, "map leaves the vertex set");
  }
  maps_[{edge, vertex}] = std::move(image);
}

const std::vector<std::size_t>& SetZZModule::map(StratumId edge, StratumId vertex) const {
  static const std::vector<std::size_t> kEmpty;
  const auto it = maps_.find({edge, vertex});
  return it == maps_.end() ? kEmpty : it->second;
}

void SetZZModule::validate() const {
  for (auto e : line_.strata()) {
    if (!e.is_edge()) continue;
    for (auto v : line_.incidences(e)) {
      const auto& image = map(e, v);
      if (image.size() != size(e)) {
        throw Error(ErrorCode::InvalidMap, "map " + e.to_string() + " -> " + v.to_string() + " is not total");
      }
      std::set<std::size_t> seen(image.begin(), image.end());
      if (seen.size() != image.size()) {
        throw Error(ErrorCode::NonInjectiveMap,
                    "map " + e.to_string() + " -> " + v.to_string() + " is not injective");
      }
    }
  }
}

Barcode set_decompose(const SetZZModule& s) {
  s.validate();
  std::vector<std::size_t> offsets{0};
  for (auto t : s.line().strata()) offsets.push_back(offsets.back() + s.size(t));
  DisjointSets sets(offsets.back());
  for (auto e : s.line().strata()) {
    if (!e.is_edge()) continue;
    for (auto v : s.line().incidences(e)) {
      const auto& image = s.map(e, v);
      for (std::size_t i = 0; i < image.size(); ++i) {
        sets.unite(offsets[e.position()] + i, offsets[v.position()] + image[i]);
      }
    }
  }
  Barcode out{s.line(), {}};
  if (!components_to_bars(offsets, sets, out.bars)) {
    throw Error(ErrorCode::NonInjectiveMap, "a component meets some stratum twice");
  }
  return out;
}

K0Class set_k0(const SetZZModule& s) {
  K0Class out;
  for (const auto& set : s.labels()) out.coeffs.push_back(static_cast<std::int64_t>(set.size()));
  return out;
}

}  // namespace zzc
