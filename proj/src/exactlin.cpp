#include "zzc/exactlin.hpp"

#include <numeric>
#include <string>

#include "detail/field_ops.hpp"
#include "zzc/error.hpp"

namespace zzc {

using detail::dispatch;
using detail::load;
using detail::store;

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1U;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void require_same_field(const Mat& a, const Mat& b) {
  if (!(a.field() == b.field())) {
    throw Error(ErrorCode::InvalidField, "matrices over different fields");
  }
}

std::string shape(const Mat& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

bool is_valid_field(FieldSpec field) {
  if (field.characteristic == 0 || field.characteristic == 2) return true;
  thread_local std::uint64_t last_valid = 2;
  if (field.characteristic == last_valid) return true;
  // Residues are added in int64 without widening, so p must stay below 2^62.
  if (field.characteristic >= (1ULL << 62U) || !is_prime(field.characteristic)) return false;
  last_valid = field.characteristic;
  return true;
}

void require_valid_field(FieldSpec field) {
  if (!is_valid_field(field)) {
    throw Error(ErrorCode::InvalidField,
                "characteristic " + std::to_string(field.characteristic) +
                    " is neither 0 nor a prime below 2^62");
  }
}

// ---------------------------------------------------------------------------
// Mat

Mat::Mat(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field) {
  require_valid_field(field);
  if (field.is_rational()) {
    rationals_.assign(rows * cols, Rational(0));
  } else {
    residues_.assign(rows * cols, 0);
  }
}

Mat Mat::identity(std::size_t n, FieldSpec field) {
  Mat m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
  return m;
}

Mat Mat::from_rows(std::size_t rows, std::size_t cols, const std::vector<Rational>& row_major,
                   FieldSpec field) {
  if (row_major.size() != rows * cols) {
    throw Error(ErrorCode::ShapeMismatch, "expected " + std::to_string(rows * cols) +
                                              " entries, got " + std::to_string(row_major.size()));
  }
  Mat m(rows, cols, field);
  for (std::size_t i = 0; i < row_major.size(); ++i) m.set(i / cols, i % cols, row_major[i]);
  return m;
}

Mat Mat::from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long long> row_major,
                   FieldSpec field) {
  std::vector<Rational> entries;
  entries.reserve(row_major.size());
  for (long long v : row_major) entries.emplace_back(v);
  return from_rows(rows, cols, entries, field);
}

Mat Mat::from_residues(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data,
                       FieldSpec field) {
  Mat m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.field_ = field;
  m.residues_ = std::move(data);
  return m;
}

Mat Mat::from_rationals(std::size_t rows, std::size_t cols, std::vector<Rational> data) {
  Mat m;
  m.rows_ = rows;
  m.cols_ = cols;
  m.field_ = FieldSpec{0};
  m.rationals_ = std::move(data);
  return m;
}

Rational Mat::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorCode::ShapeMismatch, "index out of range for " + shape(*this));
  }
  if (field_.is_rational()) return rationals_[r * cols_ + c];
  return Rational(residues_[r * cols_ + c]);
}

void Mat::set(std::size_t r, std::size_t c, const Rational& value) {
  if (r >= rows_ || c >= cols_) {
    throw Error(ErrorCode::ShapeMismatch, "index out of range for " + shape(*this));
  }
  if (field_.is_rational()) {
    rationals_[r * cols_ + c] = value;
  } else {
    residues_[r * cols_ + c] =
        detail::PrimeOps{static_cast<std::int64_t>(field_.characteristic)}.from(value);
  }
}

bool Mat::is_zero() const {
  if (field_.is_rational()) {
    for (const auto& v : rationals_) {
      if (v != 0) return false;
    }
    return true;
  }
  for (auto v : residues_) {
    if (v != 0) return false;
  }
  return true;
}

Mat Mat::transpose() const {
  return dispatch(field_, [&](const auto& f) {
    auto src = load(f, *this);
    decltype(src) dst{cols_, rows_, {}};
    dst.a.resize(src.a.size(), f.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) dst(c, r) = src(r, c);
    }
    return store(f, std::move(dst));
  });
}

Mat Mat::column(std::size_t c) const { return block(0, c, rows_, 1); }

Mat Mat::select_columns(std::span<const std::size_t> cols) const {
  return dispatch(field_, [&](const auto& f) {
    auto src = load(f, *this);
    decltype(src) dst{rows_, cols.size(), {}};
    dst.a.resize(rows_ * cols.size(), f.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t k = 0; k < cols.size(); ++k) dst(r, k) = src(r, cols[k]);
    }
    return store(f, std::move(dst));
  });
}

Mat Mat::select_rows(std::span<const std::size_t> rows) const {
  return dispatch(field_, [&](const auto& f) {
    auto src = load(f, *this);
    decltype(src) dst{rows.size(), cols_, {}};
    dst.a.resize(rows.size() * cols_, f.zero());
    for (std::size_t k = 0; k < rows.size(); ++k) {
      for (std::size_t c = 0; c < cols_; ++c) dst(k, c) = src(rows[k], c);
    }
    return store(f, std::move(dst));
  });
}

Mat Mat::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) {
    throw Error(ErrorCode::ShapeMismatch, "block out of range for " + shape(*this));
  }
  return dispatch(field_, [&](const auto& f) {
    auto src = load(f, *this);
    decltype(src) dst{nrows, ncols, {}};
    dst.a.resize(nrows * ncols, f.zero());
    for (std::size_t r = 0; r < nrows; ++r) {
      for (std::size_t c = 0; c < ncols; ++c) dst(r, c) = src(row0 + r, col0 + c);
    }
    return store(f, std::move(dst));
  });
}

Mat operator*(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot multiply " + shape(a) + " by " + shape(b));
  }
  return dispatch(a.field(), [&](const auto& f) {
    auto x = load(f, a);
    auto y = load(f, b);
    decltype(x) z{a.rows(), b.cols(), {}};
    z.a.resize(a.rows() * b.cols(), f.zero());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (f.is_zero(x(i, k))) continue;
        for (std::size_t j = 0; j < b.cols(); ++j) {
          z(i, j) = f.add(z(i, j), f.mul(x(i, k), y(k, j)));
        }
      }
    }
    return store(f, std::move(z));
  });
}

Mat operator+(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "cannot add " + shape(a) + " and " + shape(b));
  }
  return dispatch(a.field(), [&](const auto& f) {
    auto x = load(f, a);
    auto y = load(f, b);
    for (std::size_t i = 0; i < x.a.size(); ++i) x.a[i] = f.add(x.a[i], y.a[i]);
    return store(f, std::move(x));
  });
}

Mat operator-(const Mat& a) {
  return dispatch(a.field(), [&](const auto& f) {
    auto x = load(f, a);
    for (auto& v : x.a) v = f.neg(v);
    return store(f, std::move(x));
  });
}

Mat operator-(const Mat& a, const Mat& b) { return a + (-b); }

bool operator==(const Mat& a, const Mat& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
         a.residues_ == b.residues_ && a.rationals_ == b.rationals_;
}

Mat hstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "hstack of " + shape(a) + " and " + shape(b));
  }
  Mat out(a.rows(), a.cols() + b.cols(), a.field());
  return dispatch(a.field(), [&](const auto& f) {
    auto x = load(f, a);
    auto y = load(f, b);
    auto z = load(f, out);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) z(r, c) = x(r, c);
      for (std::size_t c = 0; c < b.cols(); ++c) z(r, a.cols() + c) = y(r, c);
    }
    return store(f, std::move(z));
  });
}

Mat vstack(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "vstack of " + shape(a) + " and " + shape(b));
  }
  return dispatch(a.field(), [&](const auto& f) {
    auto x = load(f, a);
    auto y = load(f, b);
    x.a.insert(x.a.end(), y.a.begin(), y.a.end());
    x.rows += y.rows;
    return store(f, std::move(x));
  });
}

Mat block_diagonal(const Mat& a, const Mat& b) {
  require_same_field(a, b);
  Mat out(a.rows() + b.rows(), a.cols() + b.cols(), a.field());
  return dispatch(a.field(), [&](const auto& f) {
    auto x = load(f, a);
    auto y = load(f, b);
    auto z = load(f, out);
    for (std::size_t r = 0; r < a.rows(); ++r) {
      for (std::size_t c = 0; c < a.cols(); ++c) z(r, c) = x(r, c);
    }
    for (std::size_t r = 0; r < b.rows(); ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) z(a.rows() + r, a.cols() + c) = y(r, c);
    }
    return store(f, std::move(z));
  });
}

// ---------------------------------------------------------------------------
// Elimination-based operations

std::size_t rank(const Mat& m) {
  return dispatch(m.field(), [&](const auto& f) {
    auto d = load(f, m);
    return detail::rref(f, d).size();
  });
}

std::vector<std::size_t> pivot_columns(const Mat& m) {
  return dispatch(m.field(), [&](const auto& f) {
    auto d = load(f, m);
    return detail::rref(f, d);
  });
}

Mat column_basis(const Mat& m) {
  const auto pivots = pivot_columns(m);
  return m.select_columns(pivots);
}

Mat kernel_basis(const Mat& m) {
  return dispatch(m.field(), [&](const auto& f) {
    auto d = load(f, m);
    const auto pivots = detail::rref(f, d);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    decltype(d) k{m.cols(), free_cols.size(), {}};
    k.a.resize(m.cols() * free_cols.size(), f.zero());
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
      k(free_cols[j], j) = f.one();
      for (std::size_t i = 0; i < pivots.size(); ++i) {
        k(pivots[i], j) = f.neg(d(i, free_cols[j]));
      }
    }
    return store(f, std::move(k));
  });
}

std::size_t quotient_dim(const Mat& ambient, const Mat& sub) {
  if (ambient.rows() != sub.rows()) {
    throw Error(ErrorCode::ShapeMismatch,
                "quotient of subspaces in different ambient dimensions");
  }
  const std::size_t r_ambient = rank(ambient);
  if (rank(hstack(ambient, sub)) != r_ambient) {
    throw Error(ErrorCode::SubspaceNotContained, "subspace is not contained in the ambient span");
  }
  return r_ambient - rank(sub);
}

std::optional<Mat> solve(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "solve with " + shape(a) + " and " + shape(b));
  }
  const Mat aug = hstack(a, b);
  return dispatch(a.field(), [&](const auto& f) -> std::optional<Mat> {
    auto d = load(f, aug);
    const auto pivots = detail::rref(f, d, a.cols());
    for (std::size_t r = pivots.size(); r < d.rows; ++r) {
      for (std::size_t c = 0; c < b.cols(); ++c) {
        if (!f.is_zero(d(r, a.cols() + c))) return std::nullopt;
      }
    }
    decltype(d) x{a.cols(), b.cols(), {}};
    x.a.resize(a.cols() * b.cols(), f.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t c = 0; c < b.cols(); ++c) x(pivots[i], c) = d(i, a.cols() + c);
    }
    return store(f, std::move(x));
  });
}

bool is_invertible(const Mat& m) { return m.rows() == m.cols() && rank(m) == m.rows(); }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "inverse of non-square " + shape(m));
  }
  auto x = solve(m, Mat::identity(m.rows(), m.field()));
  if (!x || rank(m) != m.rows()) {
    throw Error(ErrorCode::ShapeMismatch, "inverse of singular matrix");
  }
  return *x;
}

Mat image_of_subspace(const Mat& f, const Mat& basis) { return column_basis(f * basis); }

Mat preimage_of_subspace(const Mat& g, const Mat& basis) {
  const Mat k = kernel_basis(hstack(g, basis));
  return column_basis(k.block(0, 0, g.cols(), k.cols()));
}

// ---------------------------------------------------------------------------
// Diagrams

void validate(const QuiverDiagram& d) {
  require_valid_field(d.field);
  for (const auto& arrow : d.arrows) {
    if (arrow.source >= d.nodes.size() || arrow.target >= d.nodes.size()) {
      throw Error(ErrorCode::InvalidInput, "arrow endpoint outside the diagram");
    }
    if (arrow.map.rows() != d.nodes[arrow.target] || arrow.map.cols() != d.nodes[arrow.source]) {
      throw Error(ErrorCode::ShapeMismatch,
                  "arrow " + std::to_string(arrow.source) + "->" + std::to_string(arrow.target) +
                      " has shape " + shape(arrow.map));
    }
    if (!(arrow.map.field() == d.field)) {
      throw Error(ErrorCode::InvalidField, "arrow over a different field");
    }
  }
}

namespace {

std::vector<std::size_t> offsets(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t i = 0; i < dims.size(); ++i) off[i + 1] = off[i] + dims[i];
  return off;
}

bool is_connected(const QuiverDiagram& d) {
  if (d.nodes.empty()) return true;
  std::vector<std::size_t> parent(d.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& a : d.arrows) parent[find(a.source)] = find(a.target);
  const auto root = find(0);
  for (std::size_t i = 1; i < d.nodes.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

}  // namespace

Colimit diagram_colimit(const QuiverDiagram& d) {
  validate(d);
  const auto off = offsets(d.nodes);
  const std::size_t total = off.back();
  std::size_t relation_count = 0;
  for (const auto& a : d.arrows) relation_count += d.nodes[a.source];

  // Column per source basis vector v: iota_s(v) - iota_t(f v).
  Mat relations(total, relation_count, d.field);
  std::size_t col = 0;
  for (const auto& a : d.arrows) {
    for (std::size_t v = 0; v < d.nodes[a.source]; ++v, ++col) {
      relations.set(off[a.source] + v, col, relations.at(off[a.source] + v, col) + 1);
      for (std::size_t r = 0; r < d.nodes[a.target]; ++r) {
        const Rational entry = a.map.at(r, v);
        if (entry == 0) continue;
        relations.set(off[a.target] + r, col, relations.at(off[a.target] + r, col) - entry);
      }
    }
  }
  // The rows of the quotient map span the annihilator of the relations.
  const Mat quotient = kernel_basis(relations.transpose()).transpose();
  Colimit out;
  out.dim = quotient.rows();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out.projections.push_back(quotient.block(0, off[i], out.dim, d.nodes[i]));
  }
  return out;
}

Limit diagram_limit(const QuiverDiagram& d) {
  validate(d);
  const auto off = offsets(d.nodes);
  const std::size_t total = off.back();
  std::size_t constraint_count = 0;
  for (const auto& a : d.arrows) constraint_count += d.nodes[a.target];

  // Rows f x_s - x_t = 0 for every arrow.
  Mat constraints(constraint_count, total, d.field);
  std::size_t row = 0;
  for (const auto& a : d.arrows) {
    for (std::size_t r = 0; r < d.nodes[a.target]; ++r, ++row) {
      for (std::size_t c = 0; c < d.nodes[a.source]; ++c) {
        const Rational entry = a.map.at(r, c);
        if (entry == 0) continue;
        constraints.set(row, off[a.source] + c, constraints.at(row, off[a.source] + c) + entry);
      }
      constraints.set(row, off[a.target] + r, constraints.at(row, off[a.target] + r) - 1);
    }
  }
  const Mat tuples = kernel_basis(constraints);
  Limit out;
  out.dim = tuples.cols();
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    out.inclusions.push_back(tuples.block(off[i], 0, d.nodes[i], out.dim));
  }
  return out;
}

bool is_zigzag_path(const QuiverDiagram& d) {
  if (d.nodes.empty() || d.arrows.size() + 1 != d.nodes.size()) return false;
  std::vector<bool> seen(d.arrows.size(), false);
  for (const auto& a : d.arrows) {
    const auto lo = std::min(a.source, a.target);
    const auto hi = std::max(a.source, a.target);
    if (hi != lo + 1 || seen[lo]) return false;
    seen[lo] = true;
  }
  return true;
}

std::vector<std::size_t> zigzag_rank_profile(const QuiverDiagram& path) {
  validate(path);
  if (!is_zigzag_path(path)) {
    throw Error(ErrorCode::InvalidInput, "rank profile needs a zig-zag path in node order");
  }
  std::vector<const Arrow*> step(path.arrows.size(), nullptr);
  for (const auto& a : path.arrows) step[std::min(a.source, a.target)] = &a;

  std::vector<std::size_t> profile;
  profile.reserve(path.nodes.size());
  Mat lim_image = Mat::identity(path.nodes[0], path.field);  // image of the limit here
  Mat colim_kernel(path.nodes[0], 0, path.field);           // kernel of node -> colimit
  profile.push_back(path.nodes[0]);
  for (std::size_t i = 0; i + 1 < path.nodes.size(); ++i) {
    const Arrow& a = *step[i];
    if (a.source == i) {
      lim_image = image_of_subspace(a.map, lim_image);
      colim_kernel = image_of_subspace(a.map, colim_kernel);
    } else {
      lim_image = preimage_of_subspace(a.map, lim_image);
      colim_kernel = preimage_of_subspace(a.map, colim_kernel);
    }
    profile.push_back(rank(hstack(lim_image, colim_kernel)) - colim_kernel.cols());
  }
  return profile;
}

std::size_t lim_to_colim_rank(const QuiverDiagram& d) {
  validate(d);
  if (!is_connected(d)) {
    throw Error(ErrorCode::DisconnectedDiagram, "lim -> colim needs a connected diagram");
  }
  if (d.nodes.empty()) return 0;
  if (is_zigzag_path(d)) return zigzag_rank_profile(d).back();
  const Limit lim = diagram_limit(d);
  const Colimit colim = diagram_colimit(d);
  return rank(colim.projections[0] * lim.inclusions[0]);
}

}  // namespace zzc
