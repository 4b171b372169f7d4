#pragma once

// Standard persistence by column reduction of the boundary matrix in an
// index order, independent of the cosheaf pipeline.

#include "zzc/barcode.hpp"
#include "zzc/simplicial.hpp"

namespace zzc::verify {

struct PersistencePair {
  std::size_t birth_step = 0;  // 1-based monotone step
  std::size_t death_step = 0;  // 0 when the class never dies
};

/// Degree-n pairs of the index refinement, with simplices replaced by
/// their monotone steps. Pairs born and killed in one step are kept.
std::vector<PersistencePair> persistence_pairs(const Filtration& f, int n, FieldSpec field = {});

/// Pairs in half-integer stratum coordinates of the monotone line: a class
/// born at step j starts at vertex j (-inf for j = 1), one killed at step l
/// ends on the edge l - 1/2, a class that never dies ends at +inf. Pairs
/// inside one step are dropped.
Diagram oracle_diagram(const Filtration& f, int n, FieldSpec field = {});

}  // namespace zzc::verify
