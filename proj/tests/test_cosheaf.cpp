#include "support.hpp"
#include "zzc/barcode.hpp"
#include "zzc/cosheaf.hpp"
#include "zzc/exactlin.hpp"
#include "zzc/verify/random.hpp"

using namespace zzc;
using zzc::test::code_of;

namespace {

const FieldSpec F2{2};
const FieldSpec F3{3};
const FieldSpec Q{0};

StratumId sid(const char* text) { return StratumId::parse(text); }

ZZModule constant_module(std::size_t k, std::size_t d, FieldSpec field = F2) {
  const StratifiedLine line = StratifiedLine::integers(k);
  ZZModule m(line, std::vector<std::size_t>(line.num_strata(), d), field);
  for (auto e : line.strata()) {
    if (!e.is_edge()) continue;
    for (auto v : line.incidences(e)) m.set_map(e, v, Mat::identity(d, field));
  }
  return m;
}

Filtration merging_edge() { return filtration_from_pairs({{{0}, 1}, {{1}, 1}, {{0, 1}, 2}}); }

std::vector<Simplex> filled_triangle() { return {{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}}; }

Filtration filling_triangle() {
  std::vector<std::pair<Simplex, Rational>> pairs;
  for (const auto& s : filled_triangle()) pairs.emplace_back(s, Rational(s.size() == 3 ? 2 : 1));
  return filtration_from_pairs(pairs);
}

// An elementary collapse of the block [a, a+1] on the integer line.
StratifiedLineMap elementary(std::size_t k, std::size_t a) {
  std::vector<std::size_t> blocks;
  for (std::size_t i = 1; i <= k; ++i) blocks.push_back(i <= a ? i : i - 1);
  std::vector<Rational> values;
  for (std::size_t j = 1; j < k; ++j) values.emplace_back(static_cast<long long>(j));
  return collapse_map(StratifiedLine::integers(k), values, blocks);
}

}  // namespace

TEST_CASE("module basics") {
  const ZZModule zero;
  CHECK(zero.dims() == std::vector<std::size_t>{0});
  CHECK(zero.total_dim() == 0);

  ZZModule m(StratifiedLine::integers(1), {1, 2, 1}, F3);
  CHECK(m.dim(sid("1")) == 2);
  CHECK(m.map(sid("1/2"), sid("1")).is_zero());
  CHECK(code_of([&] { m.set_map(sid("1/2"), sid("1"), Mat(1, 1, F3)); }) == ErrorCode::ShapeMismatch);
  CHECK_THROWS_AS(m.map(sid("1"), sid("1")), Error);
  CHECK_THROWS_AS(ZZModule(StratifiedLine::integers(1), {1, 1}), Error);
}

TEST_CASE("propagate") {
  SUBCASE("identity arrow gives the constant module") {
    PosetRep p{{1, 2}, {Direction::Right}, {1, 1}, {Mat::identity(1, F2)}, F2};
    CHECK(propagate(p) == constant_module(2, 1));
  }
  SUBCASE("zero arrow") {
    PosetRep p{{1, 2}, {Direction::Right}, {1, 1}, {Mat(1, 1, F2)}, F2};
    const ZZModule m = propagate(p);
    CHECK(m.dims() == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(m.map(sid("3/2"), sid("1")) == Mat::identity(1, F2));
    CHECK(m.map(sid("3/2"), sid("2")).is_zero());
  }
  SUBCASE("zig-zag poset k > i > j < l") {
    const Mat ji = Mat::from_ints(2, 1, {1, 0}, Q);
    PosetRep p{{0, 1, 2, 3},
               {Direction::Left, Direction::Left, Direction::Right},
               {3, 2, 1, 1},
               {Mat::from_ints(3, 2, {1, 0, 0, 1, 0, 0}, Q), ji, Mat::identity(1, Q)},
               Q};
    const ZZModule m = propagate(p);
    // The edge between i and j carries P(j) and maps P(j) -> P(i) toward i.
    CHECK(m.dim(sid("5/2")) == 1);
    CHECK(m.map(sid("5/2"), sid("3")) == Mat::identity(1, Q));
    CHECK(m.map(sid("5/2"), sid("2")) == ji);
    CHECK(m.dim(sid("1/2")) == 3);
    CHECK(m.dim(sid("9/2")) == 1);
  }
  SUBCASE("invalid representations") {
    PosetRep p{{1, 2}, {Direction::Right}, {1, 2}, {Mat(1, 1, F2)}, F2};
    CHECK(code_of([&] { validate(p); }) == ErrorCode::ShapeMismatch);
    PosetRep dup{{1, 1}, {Direction::Right}, {1, 1}, {Mat(1, 1, F2)}, F2};
    CHECK_THROWS_AS(validate(dup), Error);
  }
}

TEST_CASE("filtration modules") {
  CHECK(filtration_module(merging_edge(), 0, F2).dims() == std::vector<std::size_t>{2, 2, 2, 1, 1});
  CHECK(filtration_module(filling_triangle(), 1, Q).dims() == std::vector<std::size_t>{1, 1, 1, 0, 0});

  std::vector<std::pair<Simplex, Rational>> pairs{{{0}, 0}, {{1}, 1}, {{0, 1}, 2}};
  // A tree never has H_1.
  CHECK(filtration_module(filtration_from_pairs(pairs), 1, F2).total_dim() == 0);

  const Filtration fixed = filtration_from_pairs({{{0}, 0}, {{1}, 0}, {{0, 1}, 0}, {{2}, 1}, {{3}, 2}});
  const ZZModule m = filtration_module(fixed, 0, F3);
  CHECK(m.dims() == std::vector<std::size_t>{1, 1, 1, 2, 2, 3, 3});
  // Every edge maps by the identity toward its left (poset-smaller) endpoint.
  for (auto e : m.line().strata()) {
    if (!e.is_edge()) continue;
    const StratumId toward = e == m.line().first() ? e.next() : e.prev();
    CHECK(m.map(e, toward) == Mat::identity(m.dim(e), F3));
  }
}

TEST_CASE("augmented modules") {
  std::vector<std::pair<Simplex, Rational>> pairs;
  for (const auto& s : filled_triangle()) pairs.emplace_back(s, Rational(1));
  const Filtration tri = filtration_from_pairs(pairs);
  const ZZModule a = augmented_module(tri, 1, F2);
  CHECK(a == skyscraper(a.line(), sid("1"), 1, F2));
  const Filtration edge = merging_edge();
  CHECK(augmented_module(edge, 0, F2) == filtration_module(edge, 0, F2));
  const Filtration index = as_filtration(tri, index_refinement(tri));
  for (int n = 0; n <= 2; ++n) CHECK(augmented_module(index, n, Q) == filtration_module(index, n, Q));
}

TEST_CASE("skyscrapers, sums, costalks") {
  const StratifiedLine line = StratifiedLine::integers(2);
  CHECK(skyscraper(line, sid("1"), 1).dims() == std::vector<std::size_t>{0, 1, 0, 0, 0});
  CHECK(skyscraper(line, sid("2"), 0).total_dim() == 0);
  CHECK_THROWS_AS(skyscraper(line, sid("3/2"), 1), Error);
  const Barcode b = decompose(skyscraper(line, sid("2"), 3, F2));
  CHECK(b.bars == std::map<Interval, std::size_t>{{{sid("2"), sid("2")}, 3}});

  const ZZModule c = constant_module(2, 1);
  const ZZModule s = direct_sum(c, skyscraper(line, sid("1"), 2, F2));
  CHECK(s.dims() == std::vector<std::size_t>{1, 3, 1, 1, 1});
  CHECK(direct_sum(c, ZZModule(line, {0, 0, 0, 0, 0}, F2)) == c);
  CHECK(code_of([&] { direct_sum(c, constant_module(1, 1)); }) == ErrorCode::LineMismatch);

  CHECK(costalk(s, sid("1")) == 3);
  CHECK(costalk(s, Rational(3, 2)) == 1);
  CHECK(costalk(s, Rational(1)) == 3);
}

TEST_CASE("property: costalk is the value on a small ball") {
  verify::Rng rng(23);
  for (int trial = 0; trial < 60; ++trial) {
    const ZZModule m = verify::random_module(rng, verify::random_line(rng, 3), 3, F3);
    // Every small ball around s has the same value, the colimit of M over
    // the strata it meets, so the limit over shrinking balls is that value.
    for (auto s : m.line().strata()) {
      const StratumId lo = s.is_vertex() ? s.prev() : s;
      const StratumId hi = s.is_vertex() ? s.next() : s;
      CHECK(costalk(m, s) == diagram_colimit(segment_diagram(m, lo, hi)).dim);
    }
  }
}

TEST_CASE("pushforward") {
  SUBCASE("identity") {
    verify::Rng rng(29);
    const ZZModule m = verify::random_module(rng, StratifiedLine::integers(3), 2, F3);
    CHECK(is_isomorphic(pushforward(m, identity_map(m.line())), m));
  }
  SUBCASE("elementary collapse of a constant block") {
    const StratifiedLineMap c = elementary(3, 1);
    const ZZModule pushed = pushforward(constant_module(3, 2, Q), c);
    CHECK(pushed.dims() == constant_module(2, 2, Q).dims());
    CHECK(is_isomorphic(pushed, constant_module(2, 2, Q)));
  }
  SUBCASE("index cosheaf onto the monotone cosheaf") {
    // The first value holds one simplex, so the left edges agree.
    const Filtration f = filtration_from_pairs({{{0}, 0}, {{1}, 1}, {{2}, 1}, {{0, 1}, 1}, {{1, 2}, 2}, {{0, 2}, 2}});
    const IndexFiltration idx = index_refinement(f);
    const ZZModule fi = filtration_module(as_filtration(f, idx), 1, F2);
    const StratifiedLineMap c = collapse_map(fi.line(), f.values(), idx.block_of);
    CHECK(is_isomorphic(pushforward(fi, c), filtration_module(f, 1, F2)));
  }
  SUBCASE("left boundary") {
    // Two vertices share the first value: the monotone cosheaf's left edge
    // carries H_0 at that value, the pushforward carries H_0 of one vertex.
    const Filtration f = merging_edge();
    const IndexFiltration idx = index_refinement(f);
    const ZZModule fi = filtration_module(as_filtration(f, idx), 0, F2);
    const ZZModule pushed = pushforward(fi, collapse_map(fi.line(), f.values(), idx.block_of));
    CHECK(pushed.dims() == std::vector<std::size_t>{1, 2, 2, 1, 1});
    CHECK(filtration_module(f, 0, F2).dims() == std::vector<std::size_t>{2, 2, 2, 1, 1});
  }
  SUBCASE("invalid maps") {
    const ZZModule m = constant_module(2, 1);
    CHECK(code_of([&] { pushforward(m, identity_map(StratifiedLine::integers(3))); }) == ErrorCode::InvalidMap);
    StratifiedLineMap bad = identity_map(m.line());
    bad.assignment[1] = sid("1/2");
    CHECK(code_of([&] { pushforward(m, bad); }) == ErrorCode::InvalidMap);
  }
}

TEST_CASE("property: pushforward is functorial on chains of elementary collapses") {
  verify::Rng rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec field = std::vector<FieldSpec>{F2, F3, Q}[trial % 3];
    const auto k = static_cast<std::size_t>(verify::draw(rng, 3, 5));
    const ZZModule m = verify::random_module(rng, StratifiedLine::integers(k), 2, field);
    const StratifiedLineMap first = elementary(k, static_cast<std::size_t>(verify::draw(rng, 1, static_cast<std::int64_t>(k) - 1)));
    const StratifiedLineMap second = elementary(k - 1, static_cast<std::size_t>(verify::draw(rng, 1, static_cast<std::int64_t>(k) - 2)));
    CHECK(is_isomorphic(pushforward(pushforward(m, first), second), pushforward(m, compose(second, first))));
  }
}

TEST_CASE("vertex sequences") {
  const StratifiedLine line = StratifiedLine::integers(2);
  const ZZModule sky = skyscraper(line, sid("2"), 2, F2);
  const VertexSequence seq = ses_at_vertex(sky, sid("2"));
  CHECK(seq.off.total_dim() == 0);
  CHECK(seq.skyscraper == sky);

  const ZZModule c = constant_module(2, 1);
  const VertexSequence cs = ses_at_vertex(c, sid("1"));
  CHECK(k0_class(cs.off).coeffs == std::vector<std::int64_t>{1, 0, 1, 1, 1});
  CHECK(k0_class(cs.off) + k0_class(cs.skyscraper) == k0_class(c));
  CHECK_THROWS_AS(ses_at_vertex(c, sid("3/2")), Error);
}

TEST_CASE("subdivision and weak normal form") {
  const ZZModule c = constant_module(3, 2, F3);
  const ZZModule normal = weak_normal_form(c);
  CHECK(normal.line() == StratifiedLine());
  CHECK(normal.dims() == std::vector<std::size_t>{2});

  const ZZModule zero(StratifiedLine::integers(1), {0, 0, 0}, F2);
  CHECK(subdivide(zero, sid("3/2"), Rational(5)).total_dim() == 0);
  CHECK(code_of([&] { subdivide(zero, sid("1/2"), Rational(3)); }) == ErrorCode::PointNotInEdge);
  CHECK(code_of([&] { subdivide(zero, sid("1"), Rational(3)); }) == ErrorCode::NotAnEdge);

  // A rank drop at every vertex: nothing to contract.
  ZZModule drops(StratifiedLine::integers(2), {1, 1, 1, 1, 1}, F2);
  drops.set_map(sid("1/2"), sid("1"), Mat::identity(1, F2));
  drops.set_map(sid("3/2"), sid("2"), Mat::identity(1, F2));
  CHECK(weak_normal_form(drops) == drops);

  // Two subdivisions commute.
  verify::Rng rng(37);
  const ZZModule m = verify::random_module(rng, StratifiedLine::integers(2), 2, Q);
  const ZZModule ab = subdivide(subdivide(m, sid("3/2"), Rational(4, 3)), sid("5/2"), Rational(5, 3));
  const ZZModule ba = subdivide(subdivide(m, sid("3/2"), Rational(5, 3)), sid("3/2"), Rational(4, 3));
  CHECK(ab == ba);
}

TEST_CASE("property: weak normal form is idempotent and ignores subdivision") {
  verify::Rng rng(41);
  for (int trial = 0; trial < 80; ++trial) {
    const FieldSpec field = std::vector<FieldSpec>{F2, F3, Q}[trial % 3];
    const ZZModule m = verify::random_module(rng, verify::random_line(rng, 3), 2, field);
    const ZZModule w = weak_normal_form(m);
    CHECK(weak_normal_form(w) == w);
    const auto edges = static_cast<std::int64_t>(m.line().num_vertices());
    const StratumId e = StratumId::edge(verify::draw(rng, 0, edges));
    const Rational x = e == m.line().first() ? Rational(-3)
                       : e == m.line().last() ? Rational(edges + 3)
                                              : e.value();
    CHECK(weak_normal_form(subdivide(m, e, x)) == w);
  }
}

TEST_CASE("isomorphism") {
  verify::Rng rng(43);
  const ZZModule m = verify::random_module(rng, StratifiedLine::integers(2), 2, F3);
  const ZZModule n = verify::random_module(rng, StratifiedLine::integers(2), 2, F3);
  CHECK(is_isomorphic(m, m));
  CHECK(is_isomorphic(direct_sum(m, n), direct_sum(n, m)));

  ZZModule id(StratifiedLine::integers(1), {1, 1, 1}, F2);
  id.set_map(sid("1/2"), sid("1"), Mat::identity(1, F2));
  id.set_map(sid("3/2"), sid("1"), Mat::identity(1, F2));
  const ZZModule zero(StratifiedLine::integers(1), {1, 1, 1}, F2);
  CHECK_FALSE(is_isomorphic(id, zero));
  CHECK(code_of([&] { is_isomorphic(id, constant_module(2, 1)); }) == ErrorCode::LineMismatch);
}

TEST_CASE("graded filtration module") {
  const GradedZZModule g = graded_filtration_module(filling_triangle(), 2, F2);
  REQUIRE(g.components.size() == 3);
  CHECK(g.components.at(1).dims() == std::vector<std::size_t>{1, 1, 1, 0, 0});
  CHECK(g.components.at(2).total_dim() == 0);
}
