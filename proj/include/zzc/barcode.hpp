#pragma once

// Interval decompositions, persistence diagrams in half-integer stratum
// coordinates, virtual diagrams, K_0 classes, Euler curves, and injective
// set-valued zig-zag modules.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "zzc/cosheaf.hpp"
#include "zzc/stratline.hpp"

namespace zzc {

/// The interval module supported on strata lo..hi.
struct Interval {
  StratumId lo;
  StratumId hi;
  friend auto operator<=>(const Interval&, const Interval&) = default;
};

struct Barcode {
  StratifiedLine line;
  std::map<Interval, std::size_t> bars;  // positive multiplicities only

  std::size_t total() const;
  friend bool operator==(const Barcode&, const Barcode&) = default;
};

/// Rank of lim -> colim of M restricted to the strata [a, b].
std::size_t rank_invariant(const ZZModule& m, StratumId a, StratumId b);

/// Multiplicities by inclusion-exclusion on the rank invariant.
Barcode decompose(const ZZModule& m);

/// Exhaustive search over basis changes, F_2 only. Throws TooLarge above
/// total dimension 10 or stratum dimension 3, InvalidField off F_2.
Barcode brute_force_decompose(const ZZModule& m);

/// A diagram coordinate: a half-integer stored doubled, or +-infinity.
struct Endpoint {
  static constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t kPosInf = std::numeric_limits<std::int64_t>::max();

  std::int64_t twice = 0;

  static Endpoint of(StratumId s) { return {s.twice()}; }
  static Endpoint neg_inf() { return {kNegInf}; }
  static Endpoint pos_inf() { return {kPosInf}; }
  /// "-inf", "inf" or a half-integer rational.
  static Endpoint parse(std::string_view text);

  bool is_finite() const { return twice != kNegInf && twice != kPosInf; }
  StratumId stratum() const { return StratumId::from_twice(twice); }
  std::string to_string() const;

  friend auto operator<=>(const Endpoint&, const Endpoint&) = default;
};

struct DiagramPoint {
  Endpoint birth;
  Endpoint death;
  friend auto operator<=>(const DiagramPoint&, const DiagramPoint&) = default;
};

/// A multiset of points with positive counts.
using Diagram = std::map<DiagramPoint, std::size_t>;
/// Nonzero integer weights only.
using VirtualDiagram = std::map<DiagramPoint, std::int64_t>;

/// Endpoints on the unbounded edges become -inf / +inf.
Diagram diagram(const Barcode& b);
Diagram diagram_union(const Diagram& a, const Diagram& b);

/// diagram(decompose(pos)) - diagram(decompose(neg)). Throws LineMismatch.
VirtualDiagram delta_hom(const ZZModule& pos, const ZZModule& neg);

/// Integer coefficient per stratum, in stratum order.
struct K0Class {
  std::vector<std::int64_t> coeffs;

  friend K0Class operator+(const K0Class& a, const K0Class& b);
  friend K0Class operator-(const K0Class& a, const K0Class& b);
  friend bool operator==(const K0Class&, const K0Class&) = default;
};

K0Class k0_class(const ZZModule& m);
K0Class k0_of_barcode(const Barcode& b);

/// Alternating sum of stratum dimensions over the degrees.
K0Class euler_curve(const GradedZZModule& g);
/// Alternating sum of the K_0 classes of the components.
K0Class euler_class(const GradedZZModule& g);

/// Finite sets per stratum with an injective function along every
/// edge -> vertex incidence.
class SetZZModule {
 public:
  SetZZModule() = default;
  /// labels[pos] lists the elements at stratum position pos; every map starts
  /// empty and must be filled before use.
  SetZZModule(StratifiedLine line, std::vector<std::vector<std::string>> labels);

  const StratifiedLine& line() const { return line_; }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }
  std::size_t size(StratumId s) const { return labels_.at(s.position()).size(); }

  /// image[i] is the index in the vertex set of edge element i.
  void set_map(StratumId edge, StratumId vertex, std::vector<std::size_t> image);
  const std::vector<std::size_t>& map(StratumId edge, StratumId vertex) const;

  /// Throws NonInjectiveMap unless every incidence map is a total injection.
  void validate() const;

 private:
  StratifiedLine line_;
  std::vector<std::vector<std::string>> labels_{{}};
  std::map<std::pair<StratumId, StratumId>, std::vector<std::size_t>> maps_;
};

/// Connected components of the element graph, one interval each.
Barcode set_decompose(const SetZZModule& s);
K0Class set_k0(const SetZZModule& s);

}  // namespace zzc
