#pragma once

// Exact linear algebra over a prime field F_p or over the rationals.
//
// Matrices are dense and row-major. Prime-field entries are kept as residues
// in [0, p); rational entries use arbitrary precision fractions. Every
// elimination uses first-nonzero pivoting, so identical inputs always give
// bit-identical outputs.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zzc/rational.hpp"

namespace zzc {

/// The coefficient field: a prime p, or 0 for the rationals.
struct FieldSpec {
  std::uint64_t characteristic = 2;

  bool is_rational() const { return characteristic == 0; }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_valid_field(FieldSpec field);
/// Throws Error(InvalidField) unless the characteristic is 0 or prime.
void require_valid_field(FieldSpec field);

class Mat {
 public:
  Mat() = default;
  /// Zero matrix.
  Mat(std::size_t rows, std::size_t cols, FieldSpec field = {});

  static Mat identity(std::size_t n, FieldSpec field = {});
  /// Integers (or rationals) are reduced into the field.
  static Mat from_rows(std::size_t rows, std::size_t cols,
                       const std::vector<Rational>& row_major, FieldSpec field = {});
  static Mat from_ints(std::size_t rows, std::size_t cols,
                       std::initializer_list<long long> row_major, FieldSpec field = {});

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FieldSpec field() const { return field_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rational& value);
  bool is_zero() const;

  Mat transpose() const;
  Mat column(std::size_t c) const;
  Mat select_columns(std::span<const std::size_t> cols) const;
  Mat select_rows(std::span<const std::size_t> rows) const;
  /// Rows [row0, row0 + nrows) and columns [col0, col0 + ncols).
  Mat block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b);

  // Raw storage; exactly one of these is populated depending on the field.
  const std::vector<std::int64_t>& residues() const { return residues_; }
  const std::vector<Rational>& rationals() const { return rationals_; }
  static Mat from_residues(std::size_t rows, std::size_t cols, std::vector<std::int64_t> data,
                           FieldSpec field);
  static Mat from_rationals(std::size_t rows, std::size_t cols, std::vector<Rational> data);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_{};
  std::vector<std::int64_t> residues_;
  std::vector<Rational> rationals_;
};

Mat hstack(const Mat& a, const Mat& b);
Mat vstack(const Mat& a, const Mat& b);
/// Block-diagonal sum [[a, 0], [0, b]].
Mat block_diagonal(const Mat& a, const Mat& b);

std::size_t rank(const Mat& m);
/// Columns form a basis of the null space; cols = m.cols - rank(m).
Mat kernel_basis(const Mat& m);
/// Indices of the first maximal independent set of columns.
std::vector<std::size_t> pivot_columns(const Mat& m);
/// The columns of m picked by pivot_columns, a basis of the column space.
Mat column_basis(const Mat& m);
/// dim span(ambient) / span(sub); throws SubspaceNotContained when sub does
/// not lie in the span of ambient.
std::size_t quotient_dim(const Mat& ambient, const Mat& sub);
/// Some X with a * X = b, or nullopt. Free variables are set to zero.
std::optional<Mat> solve(const Mat& a, const Mat& b);
bool is_invertible(const Mat& m);
/// Throws ShapeMismatch for non-square or singular input.
Mat inverse(const Mat& m);
/// Basis of f(span basis).
Mat image_of_subspace(const Mat& f, const Mat& basis);
/// Basis of {x : g x in span basis}; basis has g.rows() rows.
Mat preimage_of_subspace(const Mat& g, const Mat& basis);

struct Arrow {
  std::size_t source = 0;
  std::size_t target = 0;
  Mat map;  // target dim x source dim
};

/// A finite diagram of vector spaces.
struct QuiverDiagram {
  std::vector<std::size_t> nodes;
  std::vector<Arrow> arrows;
  FieldSpec field{};
};

/// Throws ShapeMismatch / InvalidInput when arrows do not fit their nodes.
void validate(const QuiverDiagram& d);

struct Colimit {
  std::size_t dim = 0;
  std::vector<Mat> projections;  // per node: dim x node dim
};

struct Limit {
  std::size_t dim = 0;
  std::vector<Mat> inclusions;  // per node: node dim x dim
};

Colimit diagram_colimit(const QuiverDiagram& d);
Limit diagram_limit(const QuiverDiagram& d);

/// True when the arrows are exactly one per consecutive node pair (i, i+1),
/// in either direction: a zig-zag segment in node order.
bool is_zigzag_path(const QuiverDiagram& d);

/// Rank of lim -> node -> colim. Throws DisconnectedDiagram unless the
/// diagram is connected.
std::size_t lim_to_colim_rank(const QuiverDiagram& d);

/// For a zig-zag path, r[b] = lim_to_colim_rank of nodes [0, b], for every b.
/// One left-to-right sweep tracking the image of the limit and the kernel of
/// the colimit projection at the current node.
std::vector<std::size_t> zigzag_rank_profile(const QuiverDiagram& path);

}  // namespace zzc
