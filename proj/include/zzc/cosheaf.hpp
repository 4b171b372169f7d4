#pragma once

// Constructible cosheaves on a stratified line, stored as zig-zag
// representations of the entrance-path poset: a vector space per stratum
// and a matrix per edge -> incident vertex relation.

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "zzc/exactlin.hpp"
#include "zzc/simplicial.hpp"
#include "zzc/stratline.hpp"

namespace zzc {

class ZZModule {
 public:
  /// The zero module on the line with no points.
  ZZModule() = default;
  /// dims in stratum order; every map starts as zero.
  ZZModule(StratifiedLine line, std::vector<std::size_t> dims, FieldSpec field = {});

  const StratifiedLine& line() const { return line_; }
  FieldSpec field() const { return field_; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(StratumId s) const;
  std::size_t total_dim() const;

  /// The map from an edge into one of its incident vertices.
  const Mat& map(StratumId edge, StratumId vertex) const;
  /// Throws ShapeMismatch when m is not dim(vertex) x dim(edge).
  void set_map(StratumId edge, StratumId vertex, Mat m);

  friend bool operator==(const ZZModule&, const ZZModule&) = default;

 private:
  std::size_t incidence_slot(StratumId edge, StratumId vertex) const;

  StratifiedLine line_;
  FieldSpec field_{};
  std::vector<std::size_t> dims_{0};
  // Slot 2j is edge j+1/2 into vertex j, slot 2j+1 edge j+1/2 into vertex
  // j+1; the two slots past the ends of the line stay empty.
  std::vector<Mat> maps_{Mat(), Mat()};
};

/// The restriction of M to the strata [a, b] as a zig-zag path diagram with
/// nodes in stratum order.
QuiverDiagram segment_diagram(const ZZModule& m, StratumId a, StratumId b);

enum class Direction { Left, Right };

/// A zig-zag poset on points i_1 < ... < i_k with a representation. For the
/// consecutive pair (t, t+1), counted from 0, directions[t] is Right when
/// the left point is poset-smaller and Left otherwise; arrows[t] runs from
/// the poset-smaller point to the poset-larger one.
struct PosetRep {
  std::vector<Rational> vertex_coords;
  std::vector<Direction> directions;
  std::vector<std::size_t> dims;
  std::vector<Mat> arrows;
  FieldSpec field{};
};

/// Throws InvalidInput / ShapeMismatch / DuplicatePoint.
void validate(const PosetRep& p);

/// Edges copy the space of their poset-smaller endpoint (the unbounded edges
/// copy their only endpoint) with the identity toward it and the
/// representation arrow toward the other endpoint.
ZZModule propagate(const PosetRep& p);

/// The propagated cosheaf of H_n along a monotone filtration, with vertices at
/// the filtration values. An empty filtration gives the zero module.
ZZModule filtration_module(const Filtration& f, int n, FieldSpec field = {});
ZZModule filtration_module(const Filtration& f, const FiltrationHomology& h);

/// filtration_module plus a skyscraper of rank A_n(K_{m_j}) at every vertex
/// m_j; all maps into the extra summands are zero.
ZZModule augmented_module(const Filtration& f, int n, FieldSpec field = {});

ZZModule skyscraper(const StratifiedLine& line, StratumId vertex, std::size_t d,
                    FieldSpec field = {});

/// Throws LineMismatch or InvalidField when the summands do not share a line
/// and field.
ZZModule direct_sum(const ZZModule& a, const ZZModule& b);

std::size_t costalk(const ZZModule& m, StratumId s);
std::size_t costalk(const ZZModule& m, const Rational& x);

/// Target strata take the colimit of M over the preimage of their minimal
/// open neighbourhood. Throws InvalidMap unless map.source is M's line and
/// the map is stratified.
ZZModule pushforward(const ZZModule& m, const StratifiedLineMap& map);

struct VertexSequence {
  ZZModule off;         // M with the vertex space set to zero
  ZZModule skyscraper;  // the vertex space on its own
};

VertexSequence ses_at_vertex(const ZZModule& m, StratumId vertex);

/// Adds a vertex at x inside edge e; the two halves and the new vertex carry
/// the edge space with identity maps. Throws NotAnEdge, PointNotInEdge.
ZZModule subdivide(const ZZModule& m, StratumId edge, const Rational& x);

/// Contracts, leftmost first, every vertex whose two incoming maps are
/// isomorphisms.
ZZModule weak_normal_form(const ZZModule& m);

/// Equal barcodes. Throws LineMismatch.
bool is_isomorphic(const ZZModule& a, const ZZModule& b);

/// Components by homological degree over one line.
struct GradedZZModule {
  std::map<int, ZZModule> components;
};

/// filtration_module in degrees 0..max_degree.
GradedZZModule graded_filtration_module(const Filtration& f, int max_degree,
                                        FieldSpec field = {});

}  // namespace zzc
