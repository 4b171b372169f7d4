// zzcosheaf: build zig-zag cosheaves from filtrations or module files and
// report barcodes, diagrams, K_0 classes and Euler curves.
//
// Exit codes: 0 success, 1 usage, 2 parse error, 3 non-monotone filter,
// 4 oracle or comparison mismatch, 5 other invalid input, 6 failed checks.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "zzc/barcode.hpp"
#include "zzc/cosheaf.hpp"
#include "zzc/error.hpp"
#include "zzc/io.hpp"
#include "zzc/svg.hpp"
#include "zzc/verify/persistence_oracle.hpp"
#include "zzc/verify/suites.hpp"

namespace {

using namespace zzc;

enum Exit : int {
  kOk = 0,
  kUsage = 1,
  kParse = 2,
  kNonMonotone = 3,
  kMismatch = 4,
  kInvalid = 5,
  kCheckFailed = 6,
};

struct Options {
  std::uint64_t field = 2;
  std::string degrees = "0";
  std::string format = "json";
  std::string svg;
  std::string coords = "strata";
  std::string out;
  std::uint64_t seed = 20240607;

  std::string input;
  bool augmented = false;
  bool index = false;
  bool oracle = false;
  int max_degree = -1;
  std::string map_file;
  std::string filtration_file;
  std::string compare_file;
  std::string sizes;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_degrees(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 2) {
      throw UsageError("--degree expects non-negative integers separated by commas");
    }
    out.push_back(std::stoi(item));
  }
  if (out.empty()) throw UsageError("--degree is empty");
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot write " + path);
  f << text;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_text(o.out, text);
  }
}

void emit_json(const Options& o, const Json& j) { emit(o, j.dump(2) + "\n"); }

bool looks_like_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  char c = 0;
  while (f.get(c)) {
    if (!std::isspace(static_cast<unsigned char>(c))) return c == '{' || c == '[';
  }
  return false;
}

FieldSpec field_of(const Options& o) { return FieldSpec{o.field}; }

Filtration load_filtration(const Options& o, const std::string& path) {
  Filtration f = read_filtration_file(path);
  if (o.index) f = as_filtration(f, index_refinement(f));
  return f;
}

ZZModule module_for(const Options& o, const Filtration& f, int n) {
  return o.augmented ? augmented_module(f, n, field_of(o)) : filtration_module(f, n, field_of(o));
}

// ---------------------------------------------------------------------------
// Diagram output

struct DegreeDiagram {
  int degree;
  Diagram diagram;
};

void emit_diagrams(const Options& o, const StratifiedLine& line, const std::vector<DegreeDiagram>& all) {
  const bool values = o.coords == "values";
  if (o.format == "csv") {
    std::string text;
    for (const auto& [degree, d] : all) {
      for (const auto& [pt, mult] : d) {
        if (values) {
          const auto b = value_label(line, pt.birth);
          const auto e = value_label(line, pt.death);
          text += b.text + "," + e.text + "," + std::to_string(mult) + "," +
                  std::to_string(degree) + "," + ((b.approx || e.approx) ? "true" : "false") + "\n";
        } else {
          text += pt.birth.to_string() + "," + pt.death.to_string() + "," + std::to_string(mult) + "," +
                  std::to_string(degree) + "\n";
        }
      }
    }
    emit(o, text);
  } else {
    Json arr = Json::array();
    for (const auto& [degree, d] : all) {
      for (auto& p : diagram_to_json(d, degree)) {
        if (values) {
          const auto b = value_label(line, Endpoint::parse(p["birth"].get<std::string>()));
          const auto e = value_label(line, Endpoint::parse(p["death"].get<std::string>()));
          p["birth"] = b.text;
          p["death"] = e.text;
          p["approx"] = b.approx || e.approx;
        }
        arr.push_back(std::move(p));
      }
    }
    emit_json(o, arr);
  }
  if (!o.svg.empty()) {
    std::vector<std::pair<int, Diagram>> by_degree;
    for (const auto& [degree, d] : all) by_degree.emplace_back(degree, d);
    write_text(o.svg, diagram_svg(by_degree, line));
  }
}

// ---------------------------------------------------------------------------
// Commands

int cmd_build(const Options& o) {
  const Filtration f = load_filtration(o, o.input);
  const auto degrees = parse_degrees(o.degrees);
  if (degrees.size() == 1) {
    emit_json(o, module_to_json(module_for(o, f, degrees.front())));
    return kOk;
  }
  Json arr = Json::array();
  for (int n : degrees) arr.push_back({{"degree", n}, {"module", module_to_json(module_for(o, f, n))}});
  emit_json(o, arr);
  return kOk;
}

int cmd_diagram(const Options& o) {
  const auto degrees = parse_degrees(o.degrees);
  std::vector<DegreeDiagram> all;
  if (looks_like_json(o.input)) {
    if (o.oracle) throw UsageError("--oracle needs a filtration file");
    const ZZModule m = module_from_json(parse_json_file(o.input), field_of(o));
    all.push_back({degrees.front(), diagram(decompose(m))});
    emit_diagrams(o, m.line(), all);
    return kOk;
  }
  const Filtration f = load_filtration(o, o.input);
  StratifiedLine line;
  bool mismatch = false;
  for (int n : degrees) {
    const ZZModule m = module_for(o, f, n);
    line = m.line();
    Diagram d = diagram(decompose(m));
    if (o.oracle && !o.augmented && d != verify::oracle_diagram(f, n, field_of(o))) {
      std::cerr << "degree " << n << ": diagram disagrees with column reduction\n";
      mismatch = true;
    }
    all.push_back({n, std::move(d)});
  }
  emit_diagrams(o, line, all);
  return mismatch ? kMismatch : kOk;
}

int cmd_euler(const Options& o) {
  const Filtration f = load_filtration(o, o.input);
  const int top = o.max_degree >= 0 ? o.max_degree : std::max(0, f.complex().dimension());
  const GradedZZModule g = graded_filtration_module(f, top, field_of(o));
  const K0Class curve = euler_curve(g);
  const StratifiedLine line = g.components.begin()->second.line();
  const auto strata = line.strata();
  if (o.format == "csv") {
    std::string text;
    for (std::size_t i = 0; i < strata.size(); ++i) {
      std::string label = strata[i].to_string();
      if (o.coords == "values") {
        const auto v = value_label(line, Endpoint::of(strata[i]));
        label = v.text + (v.approx ? ",true" : ",false");
      }
      text += label + "," + std::to_string(curve.coeffs[i]) + "\n";
    }
    emit(o, text);
  } else {
    Json j = k0_to_json(curve, line);
    j["max_degree"] = top;
    emit_json(o, j);
  }
  if (!o.svg.empty()) write_text(o.svg, euler_svg(curve, line));
  return kOk;
}

int cmd_k0(const Options& o) {
  const ZZModule m = module_from_json(parse_json_file(o.input), field_of(o));
  const K0Class k = k0_class(m);
  if (o.format == "csv") {
    std::string text;
    const auto strata = m.line().strata();
    for (std::size_t i = 0; i < strata.size(); ++i) {
      text += strata[i].to_string() + "," + std::to_string(k.coeffs[i]) + "\n";
    }
    emit(o, text);
  } else {
    emit_json(o, k0_to_json(k, m.line()));
  }
  return kOk;
}

int cmd_decompose(const Options& o) {
  const auto degrees = parse_degrees(o.degrees);
  std::vector<std::pair<int, Barcode>> bars;
  if (looks_like_json(o.input)) {
    bars.emplace_back(degrees.front(), decompose(module_from_json(parse_json_file(o.input), field_of(o))));
  } else {
    const Filtration f = load_filtration(o, o.input);
    for (int n : degrees) bars.emplace_back(n, decompose(module_for(o, f, n)));
  }
  if (o.format == "csv") {
    std::string text;
    for (const auto& [n, b] : bars) {
      for (const auto& [iv, mult] : b.bars) {
        text += iv.lo.to_string() + "," + iv.hi.to_string() + "," + std::to_string(mult) + "," +
                std::to_string(n) + "\n";
      }
    }
    emit(o, text);
  } else {
    Json arr = Json::array();
    for (const auto& [n, b] : bars) {
      for (auto& bar : barcode_to_json(b)) {
        bar["degree"] = n;
        arr.push_back(std::move(bar));
      }
    }
    emit_json(o, arr);
  }
  if (!o.svg.empty()) write_text(o.svg, barcode_svg(bars));
  return kOk;
}

StratifiedLineMap map_from_json(const Json& j, const StratifiedLine& source) {
  std::vector<Rational> coords;
  for (const auto& v : j.at("target")) {
    coords.push_back(v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<long long>()));
  }
  StratifiedLineMap map{source, coords.empty() ? StratifiedLine() : StratifiedLine::from_points(coords), {}};
  for (const auto& s : j.at("assignment")) {
    map.assignment.push_back(s.is_string() ? StratumId::parse(s.get<std::string>())
                                           : StratumId::vertex(s.get<long long>()));
  }
  return map;
}

int cmd_collapse(const Options& o) {
  const auto degrees = parse_degrees(o.degrees);
  if (!o.filtration_file.empty()) {
    // Index cosheaf of the canonical refinement, pushed along the collapse.
    const Filtration f = read_filtration_file(o.filtration_file);
    const IndexFiltration idx = index_refinement(f);
    const Filtration index = as_filtration(f, idx);
    const ZZModule fi = filtration_module(index, degrees.front(), field_of(o));
    const ZZModule pushed = pushforward(fi, collapse_map(fi.line(), f.values(), idx.block_of));
    emit_json(o, module_to_json(pushed));
    if (!is_isomorphic(pushed, filtration_module(f, degrees.front(), field_of(o)))) {
      std::cerr << "pushforward is not isomorphic to the monotone cosheaf\n";
      return kMismatch;
    }
    return kOk;
  }
  if (o.input.empty() || o.map_file.empty()) {
    throw UsageError("collapse needs MODULE --map FILE, or --filtration FILE");
  }
  const ZZModule m = module_from_json(parse_json_file(o.input), field_of(o));
  Json mj = parse_json_file(o.map_file);
  StratifiedLineMap map;
  try {
    map = map_from_json(mj, m.line());
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  const ZZModule pushed = pushforward(m, map);
  emit_json(o, module_to_json(pushed));
  if (!o.compare_file.empty()) {
    const ZZModule other = module_from_json(parse_json_file(o.compare_file), field_of(o));
    if (!is_isomorphic(pushed, other)) {
      std::cerr << "pushforward is not isomorphic to " << o.compare_file << "\n";
      return kMismatch;
    }
  }
  return kOk;
}

int cmd_setmod(const Options& o) {
  const SetZZModule s = set_module_from_json(parse_json_file(o.input));
  const Barcode b = set_decompose(s);
  const K0Class k = set_k0(s);
  if (o.format == "csv") {
    std::string text;
    for (const auto& [iv, mult] : b.bars) {
      text += iv.lo.to_string() + "," + iv.hi.to_string() + "," + std::to_string(mult) + "\n";
    }
    emit(o, text);
  } else {
    emit_json(o, {{"barcode", barcode_to_json(b)},
                  {"diagram", diagram_to_json(diagram(b), 0)},
                  {"k0", k0_to_json(k, s.line())}});
  }
  return kOk;
}

int cmd_check(const Options& o) {
  verify::SuiteConfig cfg;
  cfg.seed = o.seed;
  if (!o.sizes.empty()) {
    std::vector<std::size_t> n;
    std::stringstream ss(o.sizes);
    for (std::string item; std::getline(ss, item, ',');) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6) {
        throw UsageError("--sizes expects MODULES,FILTRATIONS,SUBDIVISIONS");
      }
      n.push_back(std::stoul(item));
    }
    if (n.size() != 3) throw UsageError("--sizes expects MODULES,FILTRATIONS,SUBDIVISIONS");
    cfg.module_cases = n[0];
    cfg.filtration_cases = n[1];
    cfg.subdivision_cases = n[2];
  }
  std::string text;
  std::size_t failed = 0;
  for (const auto& r : verify::run_all_suites(cfg)) {
    text += verify::format_result(r) + "\n";
    if (!r.passed()) ++failed;
  }
  text += failed == 0 ? "all suites passed\n" : std::to_string(failed) + " suites failed\n";
  emit(o, text);
  return failed == 0 ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zig-zag persistence modules as constructible cosheaves on the line", "zzcosheaf"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;

  app.add_option("--field", o.field, "Prime characteristic, or 0 for the rationals")->capture_default_str();
  app.add_option("--degree", o.degrees, "Homological degrees, comma separated")->capture_default_str();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_option("--svg", o.svg, "Also write an SVG rendering to this path");
  app.add_option("--coords", o.coords, "Diagram coordinates")
      ->check(CLI::IsMember({"strata", "values"}))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write output here instead of stdout");
  app.add_option("--seed", o.seed, "Seed for randomized checks")->capture_default_str();

  auto* build = app.add_subcommand("build", "Filtration file to module JSON");
  build->add_option("input", o.input, "Filtration file")->required();
  build->add_flag("--augmented", o.augmented, "Add the instantaneous-event summands");
  build->add_flag("--index", o.index, "Use the canonical index refinement");

  auto* diag = app.add_subcommand("diagram", "Persistence diagram of a filtration or module");
  diag->add_option("input", o.input, "Filtration file or module JSON")->required();
  diag->add_flag("--augmented", o.augmented, "Include instantaneous events");
  diag->add_flag("--index", o.index, "Use the canonical index refinement");
  diag->add_flag("--oracle", o.oracle, "Cross-check against column reduction");

  auto* euler = app.add_subcommand("euler", "Euler curve of a filtration");
  euler->add_option("input", o.input, "Filtration file")->required();
  euler->add_option("--max-degree", o.max_degree, "Highest degree (default: complex dimension)");

  auto* k0 = app.add_subcommand("k0", "K0 class of a module");
  k0->add_option("input", o.input, "Module JSON")->required();

  auto* dec = app.add_subcommand("decompose", "Barcode of a filtration or module");
  dec->add_option("input", o.input, "Filtration file or module JSON")->required();
  dec->add_flag("--augmented", o.augmented, "Include instantaneous events");
  dec->add_flag("--index", o.index, "Use the canonical index refinement");

  auto* col = app.add_subcommand("collapse", "Pushforward along a stratified map");
  col->add_option("input", o.input, "Module JSON");
  col->add_option("--map", o.map_file, "Stratified map JSON");
  col->add_option("--compare", o.compare_file, "Module JSON expected up to isomorphism");
  col->add_option("--filtration", o.filtration_file, "Push the index cosheaf of this filtration");

  auto* setmod = app.add_subcommand("setmod", "Barcode and K0 of a set-valued module");
  setmod->add_option("input", o.input, "Set module JSON")->required();

  auto* check = app.add_subcommand("check", "Run the randomized invariant suites");
  check->add_option("--sizes", o.sizes, "MODULES,FILTRATIONS,SUBDIVISIONS case counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (!is_valid_field(FieldSpec{o.field})) throw UsageError("--field must be 0 or a prime");
    if (*build) return cmd_build(o);
    if (*diag) return cmd_diagram(o);
    if (*euler) return cmd_euler(o);
    if (*k0) return cmd_k0(o);
    if (*dec) return cmd_decompose(o);
    if (*col) return cmd_collapse(o);
    if (*setmod) return cmd_setmod(o);
    if (*check) return cmd_check(o);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error (" << to_string(e.code()) << ")";
    if (e.line() > 0) std::cerr << " at line " << e.line();
    std::cerr << ": " << e.what() << "\n";
    if (e.code() == ErrorCode::ParseError) return kParse;
    if (e.code() == ErrorCode::NonMonotoneFilter) return kNonMonotone;
    return kInvalid;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error (ParseError): " << e.what() << "\n";
    return kParse;
  }
  return kUsage;
}
