#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

const std::string kCli = ZZC_CLI_PATH;
const std::string kData = ZZC_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr discarded.
Run run(const std::string& args) {
  const std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const char* name) { return "'" + kData + "/" + name + "'"; }

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / ("zzc_cli_" + std::string(name))).string();
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("cli build") {
  const Run r = run("build " + data("triangle.filt") + " --degree 1");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["dims"] == nlohmann::json({1, 1, 1, 0, 0}));
  CHECK(j["vertices"] == nlohmann::json({"1", "2"}));

  const Run multi = run("build " + data("triangle.filt") + " --degree 0,1 --field 0");
  REQUIRE(multi.code == 0);
  CHECK(nlohmann::json::parse(multi.out).size() == 2);

  const Run aug = run("build " + data("triangle.filt") + " --degree 1 --augmented");
  REQUIRE(aug.code == 0);
  CHECK(nlohmann::json::parse(aug.out)["dims"] == nlohmann::json({1, 1, 1, 0, 0}));

  const Run index = run("build " + data("triangle.filt") + " --index --degree 0");
  REQUIRE(index.code == 0);
  CHECK(nlohmann::json::parse(index.out)["dims"].size() == 15);
}

TEST_CASE("cli diagram") {
  const Run r = run("diagram " + data("triangle.filt") + " --degree 1 --oracle");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out).dump() ==
        R"([{"birth":"-inf","death":"3/2","mult":1,"degree":1}])");

  const Run csv = run("diagram " + data("merge.filt") + " --format csv --field 3");
  REQUIRE(csv.code == 0);
  CHECK(csv.out == "-inf,inf,1,0\n2,5/2,1,0\n");

  const Run values = run("diagram " + data("merge.filt") + " --format csv --coords values");
  REQUIRE(values.code == 0);
  CHECK(values.out == "-inf,inf,1,0,false\n1/2,7/4,1,0,true\n");

  const std::string svg = temp_path("diagram.svg");
  REQUIRE(run("diagram " + data("merge.filt") + " --svg '" + svg + "'").code == 0);
  const std::string first = slurp(svg);
  CHECK(first.rfind("<svg", 0) == 0);
  REQUIRE(run("diagram " + data("merge.filt") + " --svg '" + svg + "'").code == 0);
  CHECK(slurp(svg) == first);

  const Run module = run("diagram " + data("constant.json"));
  REQUIRE(module.code == 0);
  CHECK(nlohmann::json::parse(module.out)[0]["birth"] == "-inf");
}

TEST_CASE("cli euler, k0, decompose, setmod") {
  const Run e = run("euler " + data("triangle.filt") + " --format csv");
  REQUIRE(e.code == 0);
  CHECK(e.out == "1/2,0\n1,0\n3/2,0\n2,1\n5/2,1\n");

  const Run k = run("k0 " + data("constant.json") + " --format csv");
  REQUIRE(k.code == 0);
  CHECK(k.out == "1/2,1\n1,1\n3/2,1\n2,1\n5/2,1\n");

  const Run d = run("decompose " + data("triangle.filt") + " --degree 0,1 --format csv");
  REQUIRE(d.code == 0);
  CHECK(d.out == "1/2,5/2,1,0\n1/2,3/2,1,1\n");

  const Run s = run("setmod " + data("crossing.json"));
  REQUIRE(s.code == 0);
  const auto j = nlohmann::json::parse(s.out);
  CHECK(j["barcode"].size() == 2);
  CHECK(j["k0"]["coeffs"] == nlohmann::json({1, 2, 2, 2, 1}));
}

TEST_CASE("cli collapse") {
  const Run ok = run("collapse " + data("constant.json") + " --map " + data("collapse.json") + " --compare " +
                     data("constant1.json"));
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["dims"] == nlohmann::json({1, 1, 1}));
  CHECK(run("collapse " + data("constant.json") + " --map " + data("collapse.json") + " --compare " +
            data("bad_shape.json")).code != 0);
  CHECK(run("collapse --filtration " + data("merge.filt")).code == 0);
  // Homology changes inside the first value block, so the left edges differ.
  CHECK(run("collapse --filtration " + data("triangle.filt") + " --degree 1").code == 4);
  CHECK(run("collapse " + data("constant.json")).code == 1);
}

TEST_CASE("cli errors") {
  CHECK(run("").code == 1);
  CHECK(run("frobnicate").code == 1);
  CHECK(run("build " + data("triangle.filt") + " --field 4").code == 1);
  CHECK(run("build " + data("triangle.filt") + " --degree x").code == 1);
  CHECK(run("build " + data("bad_syntax.filt")).code == 2);
  CHECK(run("build " + data("nonmonotone.filt")).code == 3);
  CHECK(run("build " + data("missing_face.filt")).code == 5);
  CHECK(run("build " + data("no_such_file.filt")).code == 5);
  CHECK(run("k0 " + data("bad_shape.json")).code == 5);
  CHECK(run("k0 " + data("triangle.filt")).code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("cli check") {
  const Run r = run("check --sizes 5,3,5");
  CHECK((r.code == 0 || r.code == 6));
  CHECK(r.out.find("criterion 10") != std::string::npos);
  CHECK(run("check --sizes 1,2").code == 1);
}
