#include "zzc/verify/suites.hpp"

#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "zzc/barcode.hpp"
#include "zzc/cosheaf.hpp"
#include "zzc/verify/persistence_oracle.hpp"
#include "zzc/verify/random.hpp"

namespace zzc::verify {

namespace {

// Runs one case; a thrown exception counts as a failure.
void run_case(SuiteResult& r, const std::string& label, const std::function<bool()>& body) {
  ++r.cases;
  bool ok = false;
  std::string why;
  try {
    ok = body();
  } catch (const std::exception& e) {
    why = std::string(": ") + e.what();
  }
  if (!ok) {
    if (r.failures == 0) r.first_failure = label + why;
    ++r.failures;
  }
}

SuiteResult start(int criterion, std::string name) {
  SuiteResult r;
  r.criterion = criterion;
  r.name = std::move(name);
  return r;
}

Rng seeded(const SuiteConfig& cfg, int criterion) {
  return Rng(cfg.seed * 1000003u + static_cast<std::uint64_t>(criterion));
}

const FieldSpec kFields[] = {FieldSpec{2}, FieldSpec{3}, FieldSpec{0}};

FieldSpec random_field(Rng& rng) { return kFields[draw(rng, 0, 2)]; }

// Bars with the leftmost edge clipped off, so two barcodes can be compared
// away from the left boundary.
std::map<Interval, std::size_t> clip_left(const Barcode& b) {
  std::map<Interval, std::size_t> out;
  const StratumId edge = b.line.first();
  for (const auto& [bar, mult] : b.bars) {
    Interval iv = bar;
    if (iv.lo == edge) {
      if (iv.hi == edge) continue;
      iv.lo = edge.next();
    }
    out[iv] += mult;
  }
  return out;
}

std::string tag(const char* what, std::size_t i) { return std::string(what) + " #" + std::to_string(i); }

}  // namespace

SuiteResult check_decomposition_oracle(const SuiteConfig& cfg) {
  SuiteResult r = start(1, "decompose matches brute-force oracle");
  std::size_t i = 0;
  for (const auto& m : enumerate_f2_modules(1, 1)) {
    run_case(r, tag("enumerated module", i++), [&] { return decompose(m) == brute_force_decompose(m); });
  }
  Rng rng = seeded(cfg, 1);
  for (std::size_t c = 0; c < cfg.module_cases; ++c) {
    const ZZModule m = random_module(rng, random_line(rng, 2), 2, FieldSpec{2});
    run_case(r, tag("random module", c), [&] { return decompose(m) == brute_force_decompose(m); });
  }
  return r;
}

SuiteResult check_monotone_persistence(const SuiteConfig& cfg) {
  SuiteResult r = start(2, "monotone diagrams match column reduction");
  Rng rng = seeded(cfg, 2);
  for (std::size_t c = 0; c < cfg.filtration_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const Filtration f = random_filtration(rng, {50, 7, 3});
    for (int n = 0; n <= 2; ++n) {
      run_case(r, tag("filtration", c) + " degree " + std::to_string(n), [&] {
        return diagram(decompose(filtration_module(f, n, field))) == oracle_diagram(f, n, field);
      });
    }
  }
  return r;
}

SuiteResult check_augmented_ranks(const SuiteConfig& cfg) {
  SuiteResult r = start(3, "augmented ranks agree for monotone and index formulas");
  Rng rng = seeded(cfg, 3);
  const auto compare = [&](const Filtration& f, const IndexFiltration& idx, FieldSpec field) {
    for (int n = 0; n <= 2; ++n) {
      for (std::size_t j = 1; j <= f.steps(); ++j) {
        if (aug_rank_monotone(f, j, n, field) != aug_rank_index(f, idx, j, n, field)) return false;
      }
    }
    return true;
  };
  for (std::size_t c = 0; c < cfg.filtration_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const Filtration f = random_filtration(rng, {40, 7, 3});
    const IndexFiltration idx = random_index_refinement(rng, f);
    run_case(r, tag("filtration", c), [&] { return compare(f, idx, field); });
  }
  // Small filtrations against every compatible refinement.
  for (std::size_t c = 0; c < cfg.filtration_cases; ++c) {
    const Filtration f = random_filtration(rng, {8, 4, 2});
    std::size_t k = 0;
    for (const auto& idx : all_index_refinements(f, 50000)) {
      run_case(r, tag("small filtration", c) + " refinement " + std::to_string(k++),
               [&] { return compare(f, idx, FieldSpec{2}); });
    }
  }
  return r;
}

SuiteResult check_pushforward(const SuiteConfig& cfg) {
  SuiteResult r = start(4, "collapse pushforward of index cosheaf is the monotone cosheaf");
  Rng rng = seeded(cfg, 4);
  std::size_t left_edge_only = 0;
  for (std::size_t c = 0; c < cfg.filtration_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const Filtration f = random_filtration(rng, {40, 7, 3});
    const IndexFiltration idx = random_index_refinement(rng, f);
    const Filtration index = as_filtration(f, idx);
    for (int n = 0; n <= f.complex().dimension(); ++n) {
      run_case(r, tag("filtration", c) + " degree " + std::to_string(n), [&] {
        const ZZModule fi = filtration_module(index, n, field);
        const StratifiedLineMap collapse = collapse_map(fi.line(), f.values(), idx.block_of);
        const ZZModule pushed = pushforward(fi, collapse);
        const ZZModule monotone = filtration_module(f, n, field);
        if (is_isomorphic(pushed, monotone)) return true;
        if (clip_left(decompose(pushed)) == clip_left(decompose(monotone))) ++left_edge_only;
        return false;
      });
    }
  }
  if (r.failures > 0) {
    r.note = std::to_string(left_edge_only) + " of " + std::to_string(r.failures) +
             " failures differ only on the leftmost unbounded edge";
  }
  return r;
}

SuiteResult check_k0_additivity(const SuiteConfig& cfg) {
  SuiteResult r = start(5, "K0 additivity");
  Rng rng = seeded(cfg, 5);
  for (std::size_t c = 0; c < cfg.module_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const StratifiedLine line = random_line(rng, 4);
    const ZZModule m = random_module(rng, line, 3, field);
    const ZZModule n = random_module(rng, line, 3, field);
    run_case(r, tag("direct sum", c),
             [&] { return k0_class(direct_sum(m, n)) == k0_class(m) + k0_class(n); });
    run_case(r, tag("barcode class", c), [&] { return k0_of_barcode(decompose(m)) == k0_class(m); });
    run_case(r, tag("vertex sequences", c), [&] {
      for (std::size_t j = 1; j <= line.num_vertices(); ++j) {
        const auto seq = ses_at_vertex(m, StratumId::vertex(static_cast<std::int64_t>(j)));
        if (!(k0_class(m) == k0_class(seq.off) + k0_class(seq.skyscraper))) return false;
      }
      return true;
    });
  }
  return r;
}

SuiteResult check_euler_identity(const SuiteConfig& cfg) {
  SuiteResult r = start(6, "Euler class equals Euler curve and simplex counts");
  Rng rng = seeded(cfg, 6);
  for (std::size_t c = 0; c < cfg.filtration_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const Filtration f = random_filtration(rng, {50, 7, 3});
    run_case(r, tag("filtration", c), [&] {
      const GradedZZModule g = graded_filtration_module(f, f.complex().dimension(), field);
      const K0Class curve = euler_curve(g);
      if (!(euler_class(g) == curve)) return false;
      for (std::size_t j = 1; j <= f.steps(); ++j) {
        const auto pos = StratumId::vertex(static_cast<std::int64_t>(j)).position();
        if (curve.coeffs[pos] != euler_characteristic(f, j)) return false;
      }
      return true;
    });
  }
  return r;
}

SuiteResult check_delta_descent(const SuiteConfig& cfg) {
  SuiteResult r = start(7, "diagram map is additive and descends to K0");
  Rng rng = seeded(cfg, 7);
  for (std::size_t c = 0; c < cfg.module_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const StratifiedLine line = random_line(rng, 3);
    const ZZModule pos = random_module(rng, line, 2, field);
    const ZZModule neg = random_module(rng, line, 2, field);
    const ZZModule x = random_module(rng, line, 2, field);
    run_case(r, tag("sum", c), [&] {
      return diagram(decompose(direct_sum(pos, neg))) ==
             diagram_union(diagram(decompose(pos)), diagram(decompose(neg)));
    });
    run_case(r, tag("descent", c), [&] {
      return delta_hom(direct_sum(pos, x), direct_sum(neg, x)) == delta_hom(pos, neg);
    });
  }
  return r;
}

SuiteResult check_set_k0(const SuiteConfig& cfg) {
  SuiteResult r = start(8, "set-valued K0 and interval components");
  Rng rng = seeded(cfg, 8);
  for (std::size_t c = 0; c < cfg.module_cases; ++c) {
    const SetZZModule s = random_set_module(rng, random_line(rng, 5), 4);
    run_case(r, tag("set module", c), [&] {
      const Barcode b = set_decompose(s);
      std::size_t elements = 0;
      for (const auto& set : s.labels()) elements += set.size();
      std::size_t covered = 0;
      for (const auto& [iv, mult] : b.bars) covered += mult * (iv.hi.position() - iv.lo.position() + 1);
      return set_k0(s) == k0_of_barcode(b) && covered == elements;
    });
  }
  return r;
}

SuiteResult check_weak_equivalence(const SuiteConfig& cfg) {
  SuiteResult r = start(9, "subdivision and weak normal form");
  Rng rng = seeded(cfg, 9);
  for (std::size_t c = 0; c < cfg.subdivision_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const StratifiedLine line = random_line(rng, 4);
    // Sparse identities make contractible vertices common.
    ZZModule m = random_module(rng, line, 2, field);
    if (draw(rng, 0, 1) == 0) {
      std::vector<std::size_t> dims(line.num_strata(), static_cast<std::size_t>(draw(rng, 0, 2)));
      m = ZZModule(line, dims, field);
      for (auto e : line.strata()) {
        if (!e.is_edge()) continue;
        for (auto v : line.incidences(e)) {
          m.set_map(e, v, draw(rng, 0, 2) == 0 ? random_matrix(rng, dims[0], dims[0], field)
                                               : Mat::identity(dims[0], field));
        }
      }
    }
    const auto edge = StratumId::edge(draw(rng, 0, static_cast<std::int64_t>(line.num_vertices())));
    const Rational x = Rational(edge.index()) + Rational(draw(rng, 1, 3), 4);
    run_case(r, tag("module", c), [&] {
      const ZZModule sub = subdivide(m, edge, x);
      const ZZModule normal = weak_normal_form(m);
      if (!(weak_normal_form(sub) == normal)) return false;
      if (!(weak_normal_form(normal) == normal)) return false;
      Barcode moved{sub.line(), {}};
      const auto shift = [&](StratumId s) { return s > edge ? StratumId::from_twice(s.twice() + 2) : s; };
      for (const auto& [iv, mult] : decompose(m).bars) {
        const StratumId hi = iv.hi == edge ? StratumId::from_twice(edge.twice() + 2) : shift(iv.hi);
        moved.bars[{shift(iv.lo), hi}] += mult;
      }
      return decompose(sub) == moved;
    });
  }
  return r;
}

SuiteResult check_index_augmented(const SuiteConfig& cfg) {
  SuiteResult r = start(10, "augmented equals plain cosheaf for index filtrations");
  Rng rng = seeded(cfg, 10);
  for (std::size_t c = 0; c < cfg.filtration_cases; ++c) {
    const FieldSpec field = random_field(rng);
    const Filtration f = random_filtration(rng, {40, 7, 3});
    const Filtration index = as_filtration(f, random_index_refinement(rng, f));
    run_case(r, tag("index filtration", c), [&] {
      for (int n = 0; n <= 2; ++n) {
        if (!(augmented_module(index, n, field) == filtration_module(index, n, field))) return false;
      }
      return true;
    });
  }
  return r;
}

std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg) {
  return {check_decomposition_oracle(cfg), check_monotone_persistence(cfg), check_augmented_ranks(cfg),
          check_pushforward(cfg),          check_k0_additivity(cfg),        check_euler_identity(cfg),
          check_delta_descent(cfg),        check_set_k0(cfg),               check_weak_equivalence(cfg),
          check_index_augmented(cfg)};
}

std::string format_result(const SuiteResult& r) {
  std::ostringstream out;
  out << (r.passed() ? "PASS" : "FAIL") << "  criterion " << r.criterion << ": " << r.name << " ("
      << r.cases << " cases, " << r.failures << " failures)";
  if (!r.passed() && !r.first_failure.empty()) out << " first failure: " << r.first_failure;
  if (!r.note.empty()) out << "; " << r.note;
  return out.str();
}

}  // namespace zzc::verify
