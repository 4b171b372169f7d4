#include "zzc/simplicial.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "zzc/error.hpp"

namespace zzc {

namespace {

std::string describe(const Simplex& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i > 0) out += ' ';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

Simplex drop_vertex(const Simplex& s, std::size_t i) {
  Simplex face;
  face.reserve(s.size() - 1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (k != i) face.push_back(s[k]);
  }
  return face;
}

// Inclusion of the listed coordinates into an ambient space of size dim.
Mat coordinate_inclusion(std::size_t dim, const std::vector<std::size_t>& coords, FieldSpec field) {
  Mat m(dim, coords.size(), field);
  for (std::size_t k = 0; k < coords.size(); ++k) m.set(coords[k], k, Rational(1));
  return m;
}

}  // namespace

// ---------------------------------------------------------------------------
// SComplex

SComplex SComplex::from_simplices(std::vector<Simplex> simplices) {
  for (auto& s : simplices) {
    if (s.empty()) throw Error(ErrorCode::InvalidInput, "empty simplex");
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorCode::InvalidInput, "repeated vertex in simplex " + describe(s));
    }
    if (dimension_of(s) > kMaxSimplexDimension) {
      throw Error(ErrorCode::DimensionTooHigh,
                  "simplex " + describe(s) + " exceeds dimension " +
                      std::to_string(kMaxSimplexDimension));
    }
  }
  std::sort(simplices.begin(), simplices.end(), [](const Simplex& a, const Simplex& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());

  SComplex k;
  k.simplices_ = std::move(simplices);
  k.dim_offset_.push_back(0);
  for (std::size_t id = 0; id < k.simplices_.size(); ++id) {
    const auto n = static_cast<std::size_t>(dimension_of(k.simplices_[id]));
    while (k.dim_offset_.size() <= n) k.dim_offset_.push_back(id);
    k.index_.emplace(k.simplices_[id], id);
  }
  k.dim_offset_.push_back(k.simplices_.size());
  if (k.simplices_.empty()) k.dim_offset_ = {0};

  for (const auto& s : k.simplices_) {
    if (s.size() < 2) continue;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Simplex face = drop_vertex(s, i);
      if (!k.index_.contains(face)) {
        throw Error(ErrorCode::MissingFace,
                    "face " + describe(face) + " of " + describe(s) + " is missing");
      }
    }
  }
  return k;
}

std::size_t SComplex::count(int n) const {
  if (n < 0 || n > dimension()) return 0;
  return dim_offset_[static_cast<std::size_t>(n) + 1] - dim_offset_[static_cast<std::size_t>(n)];
}

std::size_t SComplex::offset(int n) const {
  if (n < 0) return 0;
  if (n > dimension()) return simplices_.size();
  return dim_offset_[static_cast<std::size_t>(n)];
}

std::optional<std::size_t> SComplex::find(const Simplex& s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::size_t> SComplex::facets(std::size_t id) const {
  const Simplex& s = simplices_.at(id);
  std::vector<std::size_t> out;
  if (s.size() < 2) return out;
  for (std::size_t i = s.size(); i-- > 0;) out.push_back(index_.at(drop_vertex(s, i)));
  return out;
}

SComplex SComplex::subcomplex(const std::vector<std::size_t>& ids) const {
  std::vector<Simplex> chosen;
  chosen.reserve(ids.size());
  for (auto id : ids) chosen.push_back(simplices_.at(id));
  return from_simplices(std::move(chosen));
}

Mat boundary_matrix(const SComplex& k, int n, FieldSpec field) {
  const std::size_t cols = k.count(n);
  const std::size_t rows = n > 0 ? k.count(n - 1) : 0;
  Mat m(rows, cols, field);
  if (n <= 0) return m;
  const std::size_t col0 = k.offset(n);
  const std::size_t row0 = k.offset(n - 1);
  for (std::size_t c = 0; c < cols; ++c) {
    const Simplex& s = k.simplices()[col0 + c];
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::size_t face = *k.find(drop_vertex(s, i));
      m.set(face - row0, c, Rational(i % 2 == 0 ? 1 : -1));
    }
  }
  return m;
}

HomBasis homology_basis(const SComplex& k, int n, FieldSpec field) {
  const Mat cycles = kernel_basis(boundary_matrix(k, n, field));
  const Mat bounds = column_basis(boundary_matrix(k, n + 1, field));
  std::vector<std::size_t> chosen;
  for (auto c : pivot_columns(hstack(bounds, cycles))) {
    if (c >= bounds.cols()) chosen.push_back(c - bounds.cols());
  }
  HomBasis out;
  out.degree = n;
  out.cycle_reps = cycles.select_columns(chosen);
  out.dim = chosen.size();
  return out;
}

// ---------------------------------------------------------------------------
// Filtrations

std::vector<std::size_t> Filtration::sublevel_ids(std::size_t j) const {
  std::vector<std::size_t> ids;
  for (std::size_t id = 0; id < step_of_.size(); ++id) {
    if (step_of_[id] <= j) ids.push_back(id);
  }
  return ids;
}

SComplex Filtration::sublevel(std::size_t j) const { return complex_.subcomplex(sublevel_ids(j)); }

Filtration sublevel_filtration(const SComplex& k, const std::vector<Rational>& filter) {
  if (filter.size() != k.size()) {
    throw Error(ErrorCode::InvalidInput, "filter must assign a value to every simplex");
  }
  for (std::size_t id = 0; id < k.size(); ++id) {
    for (auto face : k.facets(id)) {
      if (filter[face] > filter[id]) {
        throw Error(ErrorCode::NonMonotoneFilter,
                    "face " + describe(k.simplices()[face]) + " has value " +
                        to_string(filter[face]) + " above its coface " +
                        describe(k.simplices()[id]) + " at " + to_string(filter[id]));
      }
    }
  }
  Filtration f;
  f.complex_ = k;
  f.filter_ = filter;
  f.values_ = filter;
  std::sort(f.values_.begin(), f.values_.end());
  f.values_.erase(std::unique(f.values_.begin(), f.values_.end()), f.values_.end());
  f.step_of_.reserve(k.size());
  for (const auto& v : filter) {
    const auto it = std::lower_bound(f.values_.begin(), f.values_.end(), v);
    f.step_of_.push_back(static_cast<std::size_t>(it - f.values_.begin()) + 1);
  }
  return f;
}

Filtration filtration_from_pairs(const std::vector<std::pair<Simplex, Rational>>& pairs) {
  std::map<Simplex, Rational> by_simplex;
  for (auto [s, v] : pairs) {
    std::sort(s.begin(), s.end());
    if (!by_simplex.emplace(s, v).second) {
      throw Error(ErrorCode::InvalidInput, "simplex " + describe(s) + " listed twice");
    }
  }
  std::vector<Simplex> simplices;
  simplices.reserve(by_simplex.size());
  for (const auto& [s, v] : by_simplex) simplices.push_back(s);
  const SComplex k = SComplex::from_simplices(std::move(simplices));
  std::vector<Rational> filter;
  filter.reserve(k.size());
  for (const auto& s : k.simplices()) filter.push_back(by_simplex.at(s));
  return sublevel_filtration(k, filter);
}

IndexFiltration index_refinement(const Filtration& f) {
  IndexFiltration idx;
  idx.order.resize(f.complex().size());
  std::iota(idx.order.begin(), idx.order.end(), 0);
  // Global ids already follow (dimension, lexicographic) order.
  std::stable_sort(idx.order.begin(), idx.order.end(), [&](std::size_t a, std::size_t b) {
    return f.filter()[a] < f.filter()[b];
  });
  idx.block_of.reserve(idx.order.size());
  for (auto id : idx.order) idx.block_of.push_back(f.step_of(id));
  return idx;
}

bool is_compatible(const Filtration& f, const IndexFiltration& idx) {
  const std::size_t n = f.complex().size();
  if (idx.order.size() != n || idx.block_of.size() != n) return false;
  std::vector<std::size_t> position(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (idx.order[i] >= n || position[idx.order[i]] != n) return false;
    position[idx.order[i]] = i;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const auto id = idx.order[i];
    if (idx.block_of[i] != f.step_of(id)) return false;
    if (i > 0 && f.filter()[idx.order[i - 1]] > f.filter()[id]) return false;
    for (auto face : f.complex().facets(id)) {
      if (position[face] > i) return false;
    }
  }
  return true;
}

Filtration as_filtration(const Filtration& f, const IndexFiltration& idx) {
  if (!is_compatible(f, idx)) {
    throw Error(ErrorCode::IncompatibleIndexFiltration,
                "index order is not compatible with the filtration");
  }
  std::vector<Rational> positions(f.complex().size());
  for (std::size_t i = 0; i < idx.order.size(); ++i) {
    positions[idx.order[i]] = Rational(static_cast<long long>(i + 1));
  }
  return sublevel_filtration(f.complex(), positions);
}

std::int64_t euler_characteristic(const Filtration& f, std::size_t j) {
  std::int64_t chi = 0;
  for (auto id : f.sublevel_ids(j)) {
    chi += dimension_of(f.complex().simplices()[id]) % 2 == 0 ? 1 : -1;
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Homology along a filtration

FiltrationHomology::FiltrationHomology(const Filtration& f, int n, FieldSpec field)
    : degree_(n), field_(field) {
  require_valid_field(field);
  if (n < 0) throw Error(ErrorCode::InvalidInput, "negative homology degree");
  const SComplex& k = f.complex();
  chain_dim_ = k.count(n);
  const Mat d_n = boundary_matrix(k, n, field);
  const Mat d_up = boundary_matrix(k, n + 1, field);
  const std::size_t lo_off = k.offset(n - 1);
  const std::size_t mid_off = k.offset(n);
  const std::size_t up_off = k.offset(n + 1);

  for (std::size_t j = 0; j <= f.steps(); ++j) {
    std::vector<std::size_t> lo, mid, up;
    for (std::size_t id = 0; id < k.size(); ++id) {
      if (f.step_of(id) > j) continue;
      const int dim = dimension_of(k.simplices()[id]);
      if (n > 0 && dim == n - 1) lo.push_back(id - lo_off);
      if (dim == n) mid.push_back(id - mid_off);
      if (dim == n + 1) up.push_back(id - up_off);
    }
    const Mat local_cycles = kernel_basis(d_n.select_rows(lo).select_columns(mid));
    const Mat cycles = coordinate_inclusion(chain_dim_, mid, field) * local_cycles;
    Mat bounds = column_basis(d_up.select_columns(up));
    std::vector<std::size_t> chosen;
    for (auto c : pivot_columns(hstack(bounds, cycles))) {
      if (c >= bounds.cols()) chosen.push_back(c - bounds.cols());
    }
    reps_.push_back(cycles.select_columns(chosen));
    boundaries_.push_back(std::move(bounds));
  }
}

Mat FiltrationHomology::induced_map(std::size_t i, std::size_t j) const {
  if (i > j || j > steps()) {
    throw Error(ErrorCode::InvalidInput, "induced map needs 0 <= i <= j <= p");
  }
  const Mat& target_bounds = boundaries_[j];
  const auto coords = solve(hstack(target_bounds, reps_[j]), reps_[i]);
  if (!coords) {
    throw Error(ErrorCode::InvalidInput, "source cycles are not cycles of the target");
  }
  return coords->block(target_bounds.cols(), 0, reps_[j].cols(), reps_[i].cols());
}

std::size_t FiltrationHomology::kernel_of_step(std::size_t j) const {
  if (j <= 1) return 0;
  return dim(j - 1) - rank(induced_map(j - 1, j));
}

Mat FiltrationHomology::dying_cycles(std::size_t j) const {
  if (j <= 1) return Mat(chain_dim_, 0, field_);
  return reps_[j - 1] * kernel_basis(induced_map(j - 1, j));
}

std::size_t FiltrationHomology::aug_rank(std::size_t j) const {
  if (j == 0 || j > steps()) throw Error(ErrorCode::InvalidInput, "augmented rank needs 1 <= j <= p");
  return quotient_dim(boundaries_[j], hstack(boundaries_[j - 1], dying_cycles(j)));
}

Mat induced_map(const Filtration& f, std::size_t i, std::size_t j, int n, FieldSpec field) {
  return FiltrationHomology(f, n, field).induced_map(i, j);
}

std::size_t kernel_of_step(const Filtration& f, std::size_t j, int n, FieldSpec field) {
  return FiltrationHomology(f, n, field).kernel_of_step(j);
}

std::size_t aug_rank_monotone(const Filtration& f, std::size_t j, int n, FieldSpec field) {
  return FiltrationHomology(f, n, field).aug_rank(j);
}

std::size_t aug_rank_index(const Filtration& f, const IndexFiltration& idx, std::size_t j, int n,
                           FieldSpec field) {
  if (j == 0 || j > f.steps()) throw Error(ErrorCode::InvalidInput, "augmented rank needs 1 <= j <= p");
  const FiltrationHomology index_homology(as_filtration(f, idx), n, field);
  std::size_t killed = 0;
  for (std::size_t i = 1; i <= idx.order.size(); ++i) {
    if (idx.block_of[i - 1] == j) killed += index_homology.kernel_of_step(i);
  }
  const std::size_t earlier = FiltrationHomology(f, n, field).kernel_of_step(j);
  if (killed < earlier) {
    throw Error(ErrorCode::InvalidInput, "fewer cycle deaths in the block than across it");
  }
  return killed - earlier;
}

}  // namespace zzc
