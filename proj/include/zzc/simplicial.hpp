#pragma once

// Simplicial complexes, monotone sublevel filtrations and their index
// refinements, homology over a field with induced maps, and the augmented
// ranks A_n counting instantaneous events.
//
// Filtration steps and value blocks are 1-based: step j is the sublevel
// complex K_{m_j}, and step 0 is the empty complex.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "zzc/exactlin.hpp"
#include "zzc/rational.hpp"

namespace zzc {

/// Sorted vertex ids.
using Simplex = std::vector<std::uint32_t>;

inline constexpr int kMaxSimplexDimension = 5;

class SComplex {
 public:
  SComplex() = default;

  /// Sorts each simplex and removes duplicates. Throws MissingFace when a face
  /// of a listed simplex is absent, DimensionTooHigh above dimension 5.
  static SComplex from_simplices(std::vector<Simplex> simplices);

  /// Ordered by (dimension, lexicographic vertex tuple); indices into this
  /// vector are the global simplex ids.
  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::size_t size() const { return simplices_.size(); }
  /// -1 for the empty complex.
  int dimension() const { return dim_offset_.empty() ? -1 : static_cast<int>(dim_offset_.size()) - 2; }
  /// Number of n-simplices.
  std::size_t count(int n) const;
  /// Global id of the first n-simplex; n-simplices occupy a contiguous range.
  std::size_t offset(int n) const;
  std::optional<std::size_t> find(const Simplex& s) const;
  /// Global ids of the codimension-one faces, in lexicographic order.
  std::vector<std::size_t> facets(std::size_t id) const;

  /// The subcomplex on the given global ids (must be face-closed).
  SComplex subcomplex(const std::vector<std::size_t>& ids) const;

  friend bool operator==(const SComplex& a, const SComplex& b) {
    return a.simplices_ == b.simplices_;
  }

 private:
  std::vector<Simplex> simplices_;
  std::vector<std::size_t> dim_offset_;  // dim_offset_[n] = first id of dimension n
  std::map<Simplex, std::size_t> index_;
};

inline int dimension_of(const Simplex& s) { return static_cast<int>(s.size()) - 1; }

/// Matrix of the boundary map from n-chains to (n-1)-chains; rows and columns
/// in lexicographic simplex order, signs reduced into the field. For n = 0
/// the matrix has no rows.
Mat boundary_matrix(const SComplex& k, int n, FieldSpec field = {});

struct HomBasis {
  int degree = 0;
  Mat cycle_reps;  // columns are cycles in n-chain coordinates
  std::size_t dim = 0;
};

HomBasis homology_basis(const SComplex& k, int n, FieldSpec field = {});

class Filtration {
 public:
  Filtration() = default;

  const SComplex& complex() const { return complex_; }
  /// Filter value of each simplex, aligned with complex().simplices().
  const std::vector<Rational>& filter() const { return filter_; }
  /// The distinct values m_1 < ... < m_p.
  const std::vector<Rational>& values() const { return values_; }
  std::size_t steps() const { return values_.size(); }
  /// 1-based step at which the simplex appears.
  std::size_t step_of(std::size_t simplex_id) const { return step_of_[simplex_id]; }
  /// Global ids of K_{m_j} (j = 0 gives the empty complex).
  std::vector<std::size_t> sublevel_ids(std::size_t j) const;
  SComplex sublevel(std::size_t j) const;

 private:
  friend Filtration sublevel_filtration(const SComplex& k, const std::vector<Rational>& filter);
  SComplex complex_;
  std::vector<Rational> filter_;
  std::vector<Rational> values_;
  std::vector<std::size_t> step_of_;
};

/// Throws InvalidInput when filter is not one value per simplex and
/// NonMonotoneFilter when a face exceeds a coface.
Filtration sublevel_filtration(const SComplex& k, const std::vector<Rational>& filter);

/// Builds the complex from (simplex, value) pairs; throws MissingFace,
/// NonMonotoneFilter, InvalidInput on duplicates.
Filtration filtration_from_pairs(const std::vector<std::pair<Simplex, Rational>>& pairs);

/// A one-simplex-at-a-time refinement: order[i] is the global id added at
/// index step i + 1 and block_of[i] its 1-based value block.
struct IndexFiltration {
  std::vector<std::size_t> order;
  std::vector<std::size_t> block_of;
};

/// Ties broken by (value, dimension, lexicographic tuple).
IndexFiltration index_refinement(const Filtration& f);
/// Faces precede cofaces, values weakly increase, blocks match values.
bool is_compatible(const Filtration& f, const IndexFiltration& idx);
/// The index filtration as a monotone filtration with value i at step i.
Filtration as_filtration(const Filtration& f, const IndexFiltration& idx);

/// Degree-n homology of every step of a filtration, with bases in the chain
/// coordinates of the whole complex so induced maps are plain solves.
class FiltrationHomology {
 public:
  FiltrationHomology(const Filtration& f, int n, FieldSpec field = {});

  int degree() const { return degree_; }
  FieldSpec field() const { return field_; }
  std::size_t steps() const { return reps_.size() - 1; }
  /// dim H_n(K_{m_j}).
  std::size_t dim(std::size_t j) const { return reps_.at(j).cols(); }
  /// Cycle representatives of H_n(K_{m_j}) as n-chains of the whole complex.
  const Mat& cycle_reps(std::size_t j) const { return reps_.at(j); }
  /// Basis of the n-boundaries of K_{m_j}.
  const Mat& boundaries(std::size_t j) const { return boundaries_.at(j); }

  /// H_n(K_{m_i}) -> H_n(K_{m_j}) for i <= j.
  Mat induced_map(std::size_t i, std::size_t j) const;
  /// dim ker(H_n(K_{m_{j-1}}) -> H_n(K_{m_j})); 0 for j <= 1.
  std::size_t kernel_of_step(std::size_t j) const;
  /// Cycles of K_{m_{j-1}} that become boundaries in K_{m_j}.
  Mat dying_cycles(std::size_t j) const;
  /// A_n(K_{m_j}) = B_n(K_{m_j}) / (B_n(K_{m_{j-1}}) + dying cycles).
  std::size_t aug_rank(std::size_t j) const;

 private:
  int degree_;
  FieldSpec field_;
  std::size_t chain_dim_;
  std::vector<Mat> reps_;        // index 0 is the empty complex
  std::vector<Mat> boundaries_;
};

Mat induced_map(const Filtration& f, std::size_t i, std::size_t j, int n, FieldSpec field = {});
std::size_t kernel_of_step(const Filtration& f, std::size_t j, int n, FieldSpec field = {});
std::size_t aug_rank_monotone(const Filtration& f, std::size_t j, int n, FieldSpec field = {});
/// Cycle-killing index steps inside block j minus dim kernel_of_step(f, j, n).
/// Throws IncompatibleIndexFiltration.
std::size_t aug_rank_index(const Filtration& f, const IndexFiltration& idx, std::size_t j, int n,
                           FieldSpec field = {});

/// Alternating simplex count of K_{m_j}.
std::int64_t euler_characteristic(const Filtration& f, std::size_t j);

}  // namespace zzc
