#pragma once

// Seeded generators for the randomized suites. Bounded draws reduce the
// raw 64-bit output modulo the range, so a seed gives the same instances on
// every platform.

#include <cstdint>
#include <random>
#include <vector>

#include "zzc/barcode.hpp"
#include "zzc/cosheaf.hpp"
#include "zzc/simplicial.hpp"

namespace zzc::verify {

using Rng = std::mt19937_64;

/// Uniform-ish integer in [lo, hi].
std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi);

/// A random field element as a small integer (or small fraction for Q).
Rational random_scalar(Rng& rng, FieldSpec field);
Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, FieldSpec field);

/// Line {1, ..., k} with k drawn from [0, max_vertices].
StratifiedLine random_line(Rng& rng, std::size_t max_vertices);
/// Dimensions in [0, max_dim] and dense random maps.
ZZModule random_module(Rng& rng, const StratifiedLine& line, std::size_t max_dim, FieldSpec field);

struct FiltrationShape {
  std::size_t max_simplices = 50;
  std::size_t max_vertices = 7;
  int max_dimension = 3;
};

/// Random face-closed complex with a monotone filter full of ties; values
/// are small integers or halves.
Filtration random_filtration(Rng& rng, const FiltrationShape& shape);

/// A uniformly chosen next simplex among those whose faces are placed,
/// block by block.
IndexFiltration random_index_refinement(Rng& rng, const Filtration& f);
/// Every compatible index refinement; stops after limit orders.
std::vector<IndexFiltration> all_index_refinements(const Filtration& f, std::size_t limit);

/// Sets of size <= max_size with random injections.
SetZZModule random_set_module(Rng& rng, const StratifiedLine& line, std::size_t max_size);

/// Every F_2 module on lines with at most max_vertices points and stratum
/// dimensions at most max_dim.
std::vector<ZZModule> enumerate_f2_modules(std::size_t max_vertices, std::size_t max_dim);

}  // namespace zzc::verify
