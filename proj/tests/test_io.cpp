#include <sstream>

#include "support.hpp"
#include "zzc/io.hpp"
#include "zzc/verify/random.hpp"

using namespace zzc;
using zzc::test::code_of;

namespace {

const std::string kData = ZZC_DATA_DIR;

Filtration parse(const std::string& text) {
  std::istringstream in(text);
  return parse_filtration(in);
}

StratumId sid(const char* text) { return StratumId::parse(text); }

}  // namespace

TEST_CASE("filtration text") {
  const Filtration f = parse("# comment\n0 ; 0\n\n1 ; 1/2\n 1   0 ; 3 \n");
  CHECK(f.values() == std::vector<Rational>{0, Rational(1, 2), 3});
  CHECK(f.complex().find({0, 1}));

  const Filtration file = read_filtration_file(kData + "/triangle.filt");
  CHECK(file.steps() == 2);
  CHECK(file.complex().size() == 7);

  try {
    parse("0 ; 1\n1 ; 1\n\n0 1 ; x\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
    CHECK(e.line() == 4);
  }
  CHECK(code_of([] { parse("0 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("0 ; 1 ; 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("0 0 ; 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("-1 ; 1\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("0 ; 1\n0 ; 2\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("# nothing\n"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse("0 ; 2\n1 ; 1\n0 1 ; 1\n"); }) == ErrorCode::NonMonotoneFilter);
  CHECK(code_of([] { parse("0 ; 1\n0 1 ; 2\n"); }) == ErrorCode::MissingFace);
  CHECK(code_of([] { read_filtration_file(kData + "/no_such_file"); }) == ErrorCode::InvalidInput);
}

TEST_CASE("module json") {
  const ZZModule m = module_from_json(parse_json_file(kData + "/constant.json"));
  CHECK(m.field() == FieldSpec{2});
  CHECK(m.dims() == std::vector<std::size_t>(5, 1));
  CHECK(m.map(sid("3/2"), sid("2")) == Mat::identity(1, FieldSpec{2}));
  CHECK(code_of([] { module_from_json(parse_json_file(kData + "/bad_shape.json")); }) ==
        ErrorCode::ShapeMismatch);
  CHECK(code_of([] { module_from_json(Json::parse(R"({"vertices": [1]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { module_from_json(Json::parse(R"({"field": 4, "dims": [0]})")); }) ==
        ErrorCode::InvalidField);
  // Without a field in the document the caller's default applies.
  CHECK(module_from_json(Json::parse(R"({"dims": [2]})"), FieldSpec{3}).field() == FieldSpec{3});
  CHECK(module_from_json(Json::parse(R"({"dims": [2]})")).line() == StratifiedLine());

  const ZZModule rational = module_from_json(Json::parse(
      R"({"field": 0, "vertices": ["1/2"], "dims": [1, 1, 0], "maps": [{"edge": "1/2", "to": "1", "matrix": [["-2/3"]]}]})"));
  CHECK(rational.map(sid("1/2"), sid("1")).at(0, 0) == Rational(-2, 3));
  CHECK(rational.line().coord(sid("1")) == Rational(1, 2));
  CHECK(code_of([] { parse_json_file(kData + "/triangle.filt"); }) == ErrorCode::ParseError);
}

TEST_CASE("property: module json round trip") {
  verify::Rng rng(71);
  for (int trial = 0; trial < 60; ++trial) {
    const FieldSpec field = std::vector<FieldSpec>{{2}, {5}, {0}}[trial % 3];
    const ZZModule m = verify::random_module(rng, verify::random_line(rng, 4), 3, field);
    CHECK(module_from_json(Json::parse(module_to_json(m).dump())) == m);
  }
}

TEST_CASE("diagram and barcode json") {
  const Diagram d{{{Endpoint::neg_inf(), Endpoint::parse("3/2")}, 2}, {{Endpoint::parse("1"), Endpoint::pos_inf()}, 1}};
  const Json j = diagram_to_json(d, 1);
  REQUIRE(j.size() == 2);
  CHECK(j[0]["birth"] == "-inf");
  CHECK(j[0]["death"] == "3/2");
  CHECK(j[0]["mult"] == 2);
  CHECK(j[0]["degree"] == 1);
  CHECK(diagram_from_json(j) == d);
  CHECK(virtual_diagram_to_json({{{Endpoint::parse("1"), Endpoint::parse("2")}, -3}}, 0)[0]["mult"] == -3);

  const Barcode b{StratifiedLine::integers(1), {{{sid("1/2"), sid("1")}, 1}}};
  CHECK(barcode_to_json(b).dump() == R"([{"lo":"1/2","hi":"1","mult":1}])");
  const Json k = k0_to_json(K0Class{{1, 0, 2}}, StratifiedLine::integers(1));
  CHECK(k["strata"].dump() == R"(["1/2","1","3/2"])");
  CHECK(k["coeffs"].dump() == "[1,0,2]");
}

TEST_CASE("set module json") {
  const SetZZModule s = set_module_from_json(parse_json_file(kData + "/crossing.json"));
  s.validate();
  CHECK(s.size(sid("3/2")) == 2);
  CHECK(s.map(sid("3/2"), sid("2")) == std::vector<std::size_t>{1, 0});
  CHECK(code_of([] {
          set_module_from_json(Json::parse(
              R"({"vertices": [1], "sets": [["a"], ["x"], []], "maps": [{"edge": "1/2", "to": 1, "pairs": [["a", "y"]]}]})"));
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          set_module_from_json(Json::parse(
              R"({"vertices": [1], "sets": [["a", "b"], ["x"], []], "maps": [{"edge": "1/2", "to": 1, "pairs": [["a", "x"]]}]})"));
        }) == ErrorCode::InvalidMap);
}

TEST_CASE("value labels") {
  const StratifiedLine line = StratifiedLine::from_points({Rational(0), Rational(3)});
  CHECK(value_label(line, Endpoint::parse("1")).text == "0");
  CHECK_FALSE(value_label(line, Endpoint::parse("1")).approx);
  const ValueLabel mid = value_label(line, Endpoint::parse("3/2"));
  CHECK(mid.text == "3/2");
  CHECK(mid.approx);
  CHECK(value_label(line, Endpoint::parse("1/2")).text == "-1");
  CHECK(value_label(line, Endpoint::parse("5/2")).text == "4");
  CHECK(value_label(line, Endpoint::pos_inf()).text == "inf");
}
