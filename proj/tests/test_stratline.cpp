#include "support.hpp"
#include "zzc/stratline.hpp"
#include "zzc/verify/random.hpp"

using namespace zzc;
using zzc::test::code_of;

namespace {

StratumId sid(const char* text) { return StratumId::parse(text); }

// The pointwise collapse of the index line [1, n]: constant on each block,
// linear across a transition edge, and a unit-slope translation on the two
// unbounded ends.
Rational collapse_at(const Rational& a, const std::vector<Rational>& values,
                     const std::vector<std::size_t>& block_of) {
  const auto n = static_cast<long long>(block_of.size());
  if (a <= 1) return values.front() + (a - 1);
  if (a >= n) return values.back() + (a - n);
  const auto i = static_cast<long long>(boost::multiprecision::numerator(a) / boost::multiprecision::denominator(a));
  const std::size_t j = block_of[static_cast<std::size_t>(i - 1)];
  const std::size_t next = block_of[static_cast<std::size_t>(i)];
  if (a == Rational(i) || j == next) return values[j - 1];
  const Rational t = a - i;
  return values[j - 1] * (1 - t) + values[next - 1] * t;
}

// A sample point inside each stratum of the integer line {1, ..., n}.
Rational sample(StratumId s, std::size_t n) {
  if (s.is_vertex()) return Rational(s.index());
  if (s.index() == 0) return Rational(-1, 3);
  if (s.index() == static_cast<std::int64_t>(n)) return Rational(static_cast<long long>(n)) + Rational(4, 3);
  return Rational(s.index()) + Rational(1, 3);
}

}  // namespace

TEST_CASE("stratum ids") {
  CHECK(sid("1/2") == StratumId::edge(0));
  CHECK(sid("3").is_vertex());
  CHECK(sid("5/2").is_edge());
  CHECK(sid("5/2").index() == 2);
  CHECK(sid("1/2").position() == 0);
  CHECK(sid("1").position() == 1);
  CHECK(StratumId::at_position(3) == sid("2"));
  CHECK(sid("2").next() == sid("5/2"));
  CHECK(sid("2").prev() == sid("3/2"));
  CHECK(sid("7/2").to_string() == "7/2");
  CHECK(sid("4").to_string() == "4");
  CHECK_THROWS_AS(sid("1/3"), Error);
  CHECK_THROWS_AS(sid("x"), Error);
}

TEST_CASE("from_points") {
  CHECK(StratifiedLine::from_points({Rational(0)}).num_strata() == 3);
  CHECK(StratifiedLine::from_points({Rational(1), Rational(2)}).num_strata() == 5);
  const auto line = StratifiedLine::from_points({Rational(3), Rational(1), Rational(2)});
  CHECK(line.num_strata() == 7);
  CHECK(line.vertex_coords() == std::vector<Rational>{1, 2, 3});
  const std::vector<StratumId> expected{sid("1/2"), sid("1"), sid("3/2"), sid("2"),
                                        sid("5/2"), sid("3"), sid("7/2")};
  CHECK(line.strata() == expected);
  CHECK(code_of([] { StratifiedLine::from_points({Rational(1), Rational(1)}); }) ==
        ErrorCode::DuplicatePoint);
  CHECK(StratifiedLine().num_strata() == 1);
  CHECK(StratifiedLine::integers(0) == StratifiedLine());
}

TEST_CASE("coordinates and locate") {
  const auto line = StratifiedLine::from_points({Rational(-1), Rational(1, 2)});
  CHECK(line.coord(sid("2")) == Rational(1, 2));
  CHECK(line.locate(Rational(-5)) == sid("1/2"));
  CHECK(line.locate(Rational(-1)) == sid("1"));
  CHECK(line.locate(Rational(0)) == sid("3/2"));
  CHECK(line.locate(Rational(1, 2)) == sid("2"));
  CHECK(line.locate(Rational(7)) == sid("5/2"));
  CHECK_THROWS_AS(line.require(sid("3")), Error);
}

TEST_CASE("incidences") {
  const auto line = StratifiedLine::integers(2);
  CHECK(line.incidences(sid("1/2")) == std::vector<StratumId>{sid("1")});
  CHECK(line.incidences(sid("3/2")) == std::vector<StratumId>{sid("1"), sid("2")});
  CHECK(line.incidences(sid("5/2")) == std::vector<StratumId>{sid("2")});
  CHECK(code_of([&] { line.incidences(sid("1")); }) == ErrorCode::NotAnEdge);
  CHECK(StratifiedLine().incidences(sid("1/2")).empty());
}

TEST_CASE("zig-zag poset") {
  for (std::size_t k = 0; k <= 5; ++k) {
    const ZZPoset p = zz_poset(StratifiedLine::integers(k));
    CHECK(p.objects.size() == 2 * k + 1);
    CHECK(p.relations.size() == 2 * k);
    // A path: every relation joins neighbours in stratum order.
    for (const auto& [e, v] : p.relations) {
      CHECK(e.is_edge());
      CHECK(v.is_vertex());
      CHECK((v == e.next() || v == e.prev()));
    }
  }
}

TEST_CASE("collapse map") {
  SUBCASE("identity blocks") {
    const auto index = StratifiedLine::integers(3);
    const StratifiedLineMap c = collapse_map(index, {Rational(1), Rational(2), Rational(3)}, {1, 2, 3});
    CHECK(c.assignment == identity_map(index).assignment);
    CHECK(validate_stratified(c));
  }
  SUBCASE("one block of two") {
    const StratifiedLineMap c = collapse_map(StratifiedLine::integers(2), {Rational(5)}, {1, 1});
    const std::vector<StratumId> expected{sid("1/2"), sid("1"), sid("1"), sid("1"), sid("3/2")};
    CHECK(c.assignment == expected);
    CHECK(validate_stratified(c));
  }
  SUBCASE("blocks {1},{2..6},{7}") {
    const StratifiedLineMap c = collapse_map(StratifiedLine::integers(7),
                                             {Rational(0), Rational(1), Rational(2)},
                                             {1, 2, 2, 2, 2, 2, 3});
    for (int i = 2; i <= 6; ++i) CHECK(c(StratumId::vertex(i)) == sid("2"));
    for (int i = 2; i <= 5; ++i) CHECK(c(StratumId::edge(i)) == sid("2"));
    CHECK(c(sid("13/2")) == sid("5/2"));
    CHECK(c(sid("3/2")) == sid("3/2"));
    CHECK(c(sid("7")) == sid("3"));
    CHECK(validate_stratified(c));
  }
  SUBCASE("bad blocks") {
    const auto index = StratifiedLine::integers(3);
    CHECK(code_of([&] { collapse_map(index, {Rational(0), Rational(1)}, {2, 1, 2}); }) ==
          ErrorCode::NonMonotoneBlocks);
    CHECK_THROWS_AS(collapse_map(index, {Rational(0), Rational(1)}, {1, 1}), Error);
  }
}

TEST_CASE("validate_stratified") {
  const auto line = StratifiedLine::integers(2);
  CHECK(validate_stratified(identity_map(line)));
  StratifiedLineMap bad = identity_map(line);
  // Vertex 1 onto an edge while its neighbours go elsewhere.
  bad.assignment[1] = sid("3/2");
  CHECK_FALSE(validate_stratified(bad));
  StratifiedLineMap backwards = identity_map(line);
  std::swap(backwards.assignment[1], backwards.assignment[3]);
  CHECK_FALSE(validate_stratified(backwards));
}

TEST_CASE("property: random collapses are stratified and compose") {
  verify::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(verify::draw(rng, 1, 8));
    std::vector<std::size_t> blocks{1};
    for (std::size_t i = 1; i < n; ++i) blocks.push_back(blocks.back() + (verify::draw(rng, 0, 1) ? 1 : 0));
    std::vector<Rational> values;
    for (std::size_t j = 1; j <= blocks.back(); ++j) {
      values.push_back(Rational(static_cast<long long>(3 * j) - 7) + Rational(verify::draw(rng, 0, 1), 2));
    }
    const StratifiedLineMap c = collapse_map(StratifiedLine::integers(n), values, blocks);
    REQUIRE(validate_stratified(c));
    CHECK(c.target.num_strata() == 2 * values.size() + 1);
    for (auto st : c.source.strata()) {
      CHECK(c.target.locate(collapse_at(sample(st, n), values, blocks)) == c(st));
    }

    // Collapse again, merging the first two target blocks when possible.
    const std::size_t p = values.size();
    std::vector<std::size_t> second(p);
    for (std::size_t j = 0; j < p; ++j) second[j] = j == 0 ? 1 : j;
    if (p == 1) second = {1};
    std::vector<Rational> coarse(values.begin() + (p > 1 ? 1 : 0), values.end());
    const StratifiedLineMap d = collapse_map(StratifiedLine::from_points(values), coarse, second);
    REQUIRE(validate_stratified(d));
    CHECK(validate_stratified(compose(d, c)));
  }
  CHECK_THROWS_AS(compose(identity_map(StratifiedLine::integers(1)), identity_map(StratifiedLine::integers(2))),
                  Error);
}
