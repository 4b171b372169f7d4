#include "zzc/verify/random.hpp"

#include <algorithm>
#include <set>

#include "zzc/error.hpp"

namespace zzc::verify {

std::int64_t draw(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(rng() % span);
}

Rational random_scalar(Rng& rng, FieldSpec field) {
  if (field.is_rational()) return Rational(draw(rng, -2, 2), draw(rng, 1, 2));
  const auto top = static_cast<std::int64_t>(std::min<std::uint64_t>(field.characteristic - 1, 6));
  return Rational(draw(rng, 0, top));
}

Mat random_matrix(Rng& rng, std::size_t rows, std::size_t cols, FieldSpec field) {
  std::vector<Rational> entries;
  entries.reserve(rows * cols);
  for (std::size_t i = 0; i < rows * cols; ++i) entries.push_back(random_scalar(rng, field));
  return Mat::from_rows(rows, cols, entries, field);
}

StratifiedLine random_line(Rng& rng, std::size_t max_vertices) {
  return StratifiedLine::integers(static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(max_vertices))));
}

ZZModule random_module(Rng& rng, const StratifiedLine& line, std::size_t max_dim, FieldSpec field) {
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < line.num_strata(); ++i) {
    dims.push_back(static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(max_dim))));
  }
  ZZModule m(line, std::move(dims), field);
  for (auto e : line.strata()) {
    if (!e.is_edge()) continue;
    for (auto v : line.incidences(e)) m.set_map(e, v, random_matrix(rng, m.dim(v), m.dim(e), field));
  }
  return m;
}

Filtration random_filtration(Rng& rng, const FiltrationShape& shape) {
  const auto nv = static_cast<std::uint32_t>(draw(rng, 1, static_cast<std::int64_t>(shape.max_vertices)));
  std::set<Simplex> simplices;
  const std::size_t attempts = 3 * shape.max_simplices;
  for (std::size_t t = 0; t < attempts && simplices.size() < shape.max_simplices; ++t) {
    const auto top = std::min<std::int64_t>(shape.max_dimension, static_cast<std::int64_t>(nv) - 1);
    const auto size = static_cast<std::size_t>(draw(rng, 0, top)) + 1;
    std::vector<std::uint32_t> pool(nv);
    for (std::uint32_t i = 0; i < nv; ++i) pool[i] = i;
    for (std::size_t i = 0; i < size; ++i) {
      std::swap(pool[i], pool[i + static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(nv - 1 - i)))]);
    }
    Simplex s(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(s.begin(), s.end());
    std::vector<Simplex> closure;
    for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < size; ++i) {
        if ((mask >> i) & 1u) face.push_back(s[i]);
      }
      if (!simplices.contains(face)) closure.push_back(std::move(face));
    }
    if (simplices.size() + closure.size() > shape.max_simplices) continue;
    simplices.insert(closure.begin(), closure.end());
  }
  if (simplices.empty()) simplices.insert(Simplex{0});

  const SComplex k = SComplex::from_simplices({simplices.begin(), simplices.end()});
  std::vector<Rational> filter(k.size());
  const bool halves = draw(rng, 0, 3) == 0;
  for (std::size_t id = 0; id < k.size(); ++id) {
    Rational base = 0;
    for (auto face : k.facets(id)) base = std::max(base, filter[face]);
    const std::int64_t step = k.facets(id).empty() ? draw(rng, 0, 4) : std::max<std::int64_t>(0, draw(rng, -2, 2));
    filter[id] = base + Rational(step, halves ? 2 : 1);
  }
  return sublevel_filtration(k, filter);
}

namespace {

// Simplices of the block whose faces are all placed already.
std::vector<std::size_t> ready(const Filtration& f, std::size_t block, const std::vector<bool>& placed) {
  std::vector<std::size_t> out;
  for (std::size_t id = 0; id < placed.size(); ++id) {
    if (placed[id] || f.step_of(id) != block) continue;
    const auto faces = f.complex().facets(id);
    if (std::all_of(faces.begin(), faces.end(), [&](std::size_t x) { return placed[x]; })) {
      out.push_back(id);
    }
  }
  return out;
}

void extend_all(const Filtration& f, std::size_t block, std::vector<bool>& placed, IndexFiltration& cur,
                std::vector<IndexFiltration>& out, std::size_t limit) {
  if (out.size() >= limit) return;
  if (cur.order.size() == placed.size()) {
    out.push_back(cur);
    return;
  }
  auto options = ready(f, block, placed);
  if (options.empty()) {
    extend_all(f, block + 1, placed, cur, out, limit);
    return;
  }
  for (auto id : options) {
    placed[id] = true;
    cur.order.push_back(id);
    cur.block_of.push_back(block);
    extend_all(f, block, placed, cur, out, limit);
    cur.order.pop_back();
    cur.block_of.pop_back();
    placed[id] = false;
  }
}

}  // namespace

IndexFiltration random_index_refinement(Rng& rng, const Filtration& f) {
  IndexFiltration idx;
  std::vector<bool> placed(f.complex().size(), false);
  for (std::size_t block = 1; block <= f.steps(); ++block) {
    for (auto options = ready(f, block, placed); !options.empty(); options = ready(f, block, placed)) {
      const auto id = options[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(options.size()) - 1))];
      placed[id] = true;
      idx.order.push_back(id);
      idx.block_of.push_back(block);
    }
  }
  return idx;
}

std::vector<IndexFiltration> all_index_refinements(const Filtration& f, std::size_t limit) {
  std::vector<IndexFiltration> out;
  std::vector<bool> placed(f.complex().size(), false);
  IndexFiltration cur;
  extend_all(f, 1, placed, cur, out, limit);
  return out;
}

SetZZModule random_set_module(Rng& rng, const StratifiedLine& line, std::size_t max_size) {
  const auto strata = line.strata();
  std::vector<std::size_t> sizes(strata.size());
  for (auto s : strata) {
    if (s.is_vertex()) sizes[s.position()] = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(max_size)));
  }
  for (auto e : strata) {
    if (!e.is_edge()) continue;
    std::size_t cap = max_size;
    for (auto v : line.incidences(e)) cap = std::min(cap, sizes[v.position()]);
    sizes[e.position()] = static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(cap)));
  }
  std::vector<std::vector<std::string>> labels(strata.size());
  for (auto s : strata) {
    for (std::size_t i = 0; i < sizes[s.position()]; ++i) {
      labels[s.position()].push_back(s.to_string() + ":" + std::to_string(i));
    }
  }
  SetZZModule m(line, labels);
  for (auto e : strata) {
    if (!e.is_edge()) continue;
    for (auto v : line.incidences(e)) {
      std::vector<std::size_t> perm(sizes[v.position()]);
      for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
      for (std::size_t i = perm.size(); i > 1; --i) {
        std::swap(perm[i - 1], perm[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(i) - 1))]);
      }
      perm.resize(sizes[e.position()]);
      m.set_map(e, v, std::move(perm));
    }
  }
  return m;
}

std::vector<ZZModule> enumerate_f2_modules(std::size_t max_vertices, std::size_t max_dim) {
  const FieldSpec f2{2};
  std::vector<ZZModule> out;
  for (std::size_t k = 0; k <= max_vertices; ++k) {
    const StratifiedLine line = StratifiedLine::integers(k);
    const std::size_t n = line.num_strata();
    std::vector<std::size_t> dims(n, 0);
    for (;;) {
      const ZZModule shape(line, dims, f2);
      std::vector<std::pair<StratumId, StratumId>> incidences;
      std::size_t bits = 0;
      for (auto e : line.strata()) {
        if (!e.is_edge()) continue;
        for (auto v : line.incidences(e)) {
          incidences.emplace_back(e, v);
          bits += shape.dim(e) * shape.dim(v);
        }
      }
      if (bits > 24) throw Error(ErrorCode::TooLarge, "enumeration too large");
      for (std::uint64_t pattern = 0; pattern < (std::uint64_t{1} << bits); ++pattern) {
        ZZModule m = shape;
        std::size_t bit = 0;
        for (auto [e, v] : incidences) {
          Mat a(m.dim(v), m.dim(e), f2);
          for (std::size_t r = 0; r < a.rows(); ++r) {
            for (std::size_t c = 0; c < a.cols(); ++c, ++bit) {
              if ((pattern >> bit) & 1u) a.set(r, c, Rational(1));
            }
          }
          m.set_map(e, v, std::move(a));
        }
        out.push_back(std::move(m));
      }
      std::size_t i = 0;
      while (i < n && dims[i] == max_dim) dims[i++] = 0;
      if (i == n) break;
      ++dims[i];
    }
  }
  return out;
}

}  // namespace zzc::verify
