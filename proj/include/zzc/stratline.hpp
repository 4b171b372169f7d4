#pragma once

// The real line stratified by finitely many points p_1 < ... < p_k.
//
// Strata are listed left to right as
//   edge 1/2 = (-inf, p_1), vertex 1, edge 3/2 = (p_1, p_2), ..., vertex k,
//   edge k+1/2 = (p_k, +inf)
// so vertices carry integer ids and edges proper half-integers. A line with
// no points has the single stratum edge 1/2.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zzc/rational.hpp"

namespace zzc {

/// A half-integer stratum index, stored doubled.
class StratumId {
 public:
  constexpr StratumId() = default;

  static constexpr StratumId from_twice(std::int64_t twice) { return StratumId(twice); }
  static constexpr StratumId vertex(std::int64_t j) { return StratumId(2 * j); }
  /// The edge j + 1/2, i.e. the edge to the right of vertex j.
  static constexpr StratumId edge(std::int64_t j) { return StratumId(2 * j + 1); }
  /// Left-to-right stratum position 0, 1, 2, ...
  static constexpr StratumId at_position(std::size_t pos) {
    return StratumId(static_cast<std::int64_t>(pos) + 1);
  }

  /// Rational text whose value is a half-integer, e.g. "3/2" or "2".
  static StratumId parse(std::string_view text);

  constexpr std::int64_t twice() const { return twice_; }
  constexpr bool is_vertex() const { return twice_ % 2 == 0; }
  constexpr bool is_edge() const { return twice_ % 2 != 0; }
  constexpr std::size_t position() const { return static_cast<std::size_t>(twice_ - 1); }
  /// Vertex number j for vertex j; j for edge j + 1/2.
  constexpr std::int64_t index() const { return twice_ / 2; }
  constexpr StratumId prev() const { return StratumId(twice_ - 1); }
  constexpr StratumId next() const { return StratumId(twice_ + 1); }
  Rational value() const { return Rational(twice_, 2); }

  std::string to_string() const;

  friend constexpr auto operator<=>(StratumId, StratumId) = default;

 private:
  constexpr explicit StratumId(std::int64_t twice) : twice_(twice) {}
  std::int64_t twice_ = 1;
};

class StratifiedLine {
 public:
  /// The line with no marked points.
  StratifiedLine() = default;

  /// Sorts the points; throws DuplicatePoint on repeats and InvalidInput when
  /// empty.
  static StratifiedLine from_points(std::vector<Rational> coords);
  /// from_points({1, 2, ..., n}); n may be 0.
  static StratifiedLine integers(std::size_t n);

  std::size_t num_vertices() const { return coords_.size(); }
  std::size_t num_strata() const { return 2 * coords_.size() + 1; }
  const std::vector<Rational>& vertex_coords() const { return coords_; }

  StratumId first() const { return StratumId::edge(0); }
  StratumId last() const { return StratumId::edge(static_cast<std::int64_t>(coords_.size())); }
  bool contains(StratumId s) const { return s >= first() && s <= last(); }
  /// Throws InvalidStratum when s is not a stratum of this line.
  void require(StratumId s) const;
  std::vector<StratumId> strata() const;

  /// Coordinate of a vertex stratum.
  const Rational& coord(StratumId vertex) const;
  /// The stratum containing x.
  StratumId locate(const Rational& x) const;

  /// Incident vertices of an edge: one for the unbounded edges, two otherwise.
  /// Throws NotAnEdge for a vertex.
  std::vector<StratumId> incidences(StratumId edge) const;

  friend bool operator==(const StratifiedLine&, const StratifiedLine&) = default;

 private:
  std::vector<Rational> coords_;
};

/// The zig-zag poset of a line: every stratum, and the generating relations
/// edge -> incident vertex.
struct ZZPoset {
  std::vector<StratumId> objects;
  std::vector<std::pair<StratumId, StratumId>> relations;  // (edge, vertex)
};

ZZPoset zz_poset(const StratifiedLine& line);

/// A map of stratified lines, recorded by where each source stratum goes.
struct StratifiedLineMap {
  StratifiedLine source;
  StratifiedLine target;
  std::vector<StratumId> assignment;  // indexed by source position

  StratumId operator()(StratumId s) const { return assignment.at(s.position()); }
};

StratifiedLineMap identity_map(const StratifiedLine& line);

/// Surjective, order preserving, and each target edge has exactly one source
/// edge as preimage (so vertices only ever land on vertices).
bool validate_stratified(const StratifiedLineMap& m);

/// second o first. Throws LineMismatch when first.target != second.source.
StratifiedLineMap compose(const StratifiedLineMap& second, const StratifiedLineMap& first);

/// The collapse of an index line {1, ..., n} onto the monotone values
/// m_1 < ... < m_p. block_of[i - 1] is the 1-based value block of index i; it
/// must be weakly increasing, start at 1, and step by at most one until p.
/// Vertices go to their block's vertex; an edge (i, i+1) inside a block goes
/// to that vertex, a transition edge to the edge (m_j, m_{j+1}); the two
/// unbounded edges go to the unbounded edges.
StratifiedLineMap collapse_map(const StratifiedLine& index_line, const std::vector<Rational>& values,
                               const std::vector<std::size_t>& block_of);

}  // namespace zzc
