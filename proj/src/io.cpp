#include "zzc/io.hpp"

#include <fstream>
#include <istream>
#include <set>
#include <sstream>

#include "zzc/error.hpp"

namespace zzc {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::uint32_t parse_vertex(std::string_view token, std::size_t line) {
  if (token.empty() || token.size() > 9 ||
      token.find_first_not_of("0123456789") != std::string_view::npos) {
    throw Error(ErrorCode::ParseError, "bad vertex id '" + std::string(token) + "'", line);
  }
  return static_cast<std::uint32_t>(std::stoul(std::string(token)));
}

[[noreturn]] void bad_json(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad_json(std::string("missing \"") + key + "\"");
  return j.at(key);
}

Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad_json("expected an integer or a rational string, got " + j.dump());
}

std::size_t size_of(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    bad_json("expected a non-negative integer, got " + j.dump());
  }
  return j.get<std::size_t>();
}

StratumId stratum_of(const Json& j) {
  if (j.is_number_integer()) return StratumId::vertex(j.get<long long>());
  if (j.is_string()) return StratumId::parse(j.get<std::string>());
  bad_json("expected a stratum index, got " + j.dump());
}

StratifiedLine line_of(const Json& j) {
  std::vector<Rational> coords;
  if (j.contains("vertices")) {
    const Json& vs = j.at("vertices");
    if (!vs.is_array()) bad_json("\"vertices\" must be an array");
    for (const auto& v : vs) coords.push_back(rational_of(v));
  }
  if (coords.empty()) return StratifiedLine();
  if (!std::is_sorted(coords.begin(), coords.end())) bad_json("\"vertices\" must be increasing");
  return StratifiedLine::from_points(std::move(coords));
}

Json rational_json(const Rational& r) {
  if (is_integer(r)) return Json(static_cast<long long>(boost::multiprecision::numerator(r)));
  return Json(to_string(r));
}

Json vertices_json(const StratifiedLine& line) {
  Json vs = Json::array();
  for (const auto& c : line.vertex_coords()) vs.push_back(to_string(c));
  return vs;
}

}  // namespace

// ---------------------------------------------------------------------------
// Filtrations

Filtration parse_filtration(std::istream& in) {
  std::vector<std::pair<Simplex, Rational>> pairs;
  std::set<Simplex> seen;
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string_view text = trim(raw);
    if (text.empty() || text.front() == '#') continue;
    const auto semi = text.find(';');
    if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "expected 'v0 v1 ... ; value'", line);
    }
    Simplex s;
    std::istringstream tokens{std::string(text.substr(0, semi))};
    for (std::string token; tokens >> token;) s.push_back(parse_vertex(token, line));
    if (s.empty()) throw Error(ErrorCode::ParseError, "simplex has no vertices", line);
    const std::string_view value_text = trim(text.substr(semi + 1));
    Rational value;
    try {
      value = parse_rational(value_text);
    } catch (const Error& e) {
      throw Error(ErrorCode::ParseError, e.what(), line);
    }
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw Error(ErrorCode::ParseError, "repeated vertex in simplex", line);
    }
    if (!seen.insert(s).second) throw Error(ErrorCode::ParseError, "simplex listed twice", line);
    pairs.emplace_back(std::move(s), std::move(value));
  }
  if (pairs.empty()) throw Error(ErrorCode::ParseError, "no simplices", line == 0 ? 1 : line);
  return filtration_from_pairs(pairs);
}

Filtration read_filtration_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  return parse_filtration(in);
}

Json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

// ---------------------------------------------------------------------------
// Modules

Json module_to_json(const ZZModule& m) {
  Json j;
  j["field"] = m.field().characteristic;
  j["vertices"] = vertices_json(m.line());
  j["dims"] = m.dims();
  Json maps = Json::array();
  for (auto e : m.line().strata()) {
    if (!e.is_edge()) continue;
    for (auto v : m.line().incidences(e)) {
      const Mat& a = m.map(e, v);
      Json rows = Json::array();
      for (std::size_t r = 0; r < a.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(rational_json(a.at(r, c)));
        rows.push_back(std::move(row));
      }
      maps.push_back({{"edge", e.to_string()}, {"to", v.to_string()}, {"matrix", std::move(rows)}});
    }
  }
  j["maps"] = std::move(maps);
  return j;
}

ZZModule module_from_json(const Json& j, FieldSpec field) {
  if (!j.is_object()) bad_json("module must be a JSON object");
  if (j.contains("field")) field = FieldSpec{size_of(j.at("field"))};
  require_valid_field(field);
  const StratifiedLine line = line_of(j);
  std::vector<std::size_t> dims;
  const Json& dj = field_of(j, "dims");
  if (!dj.is_array()) bad_json("\"dims\" must be an array");
  for (const auto& d : dj) dims.push_back(size_of(d));
  ZZModule m(line, std::move(dims), field);
  if (!j.contains("maps")) return m;
  const Json& maps = j.at("maps");
  if (!maps.is_array()) bad_json("\"maps\" must be an array");
  for (const auto& entry : maps) {
    const StratumId e = stratum_of(field_of(entry, "edge"));
    const StratumId v = stratum_of(field_of(entry, "to"));
    const std::size_t rows = m.dim(v);
    const std::size_t cols = m.dim(e);
    const Json& mj = field_of(entry, "matrix");
    if (!mj.is_array() || mj.size() != rows) {
      throw Error(ErrorCode::ShapeMismatch, "map " + e.to_string() + " -> " + v.to_string() +
                                                " needs " + std::to_string(rows) + " rows");
    }
    std::vector<Rational> entries;
    for (const auto& row : mj) {
      if (!row.is_array() || row.size() != cols) {
        throw Error(ErrorCode::ShapeMismatch, "map " + e.to_string() + " -> " + v.to_string() +
                                                  " needs " + std::to_string(cols) + " columns");
      }
      for (const auto& x : row) entries.push_back(rational_of(x));
    }
    m.set_map(e, v, Mat::from_rows(rows, cols, entries, field));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Diagrams and classes

Json diagram_to_json(const Diagram& d, int degree) {
  Json out = Json::array();
  for (const auto& [pt, mult] : d) {
    out.push_back({{"birth", pt.birth.to_string()},
                   {"death", pt.death.to_string()},
                   {"mult", mult},
                   {"degree", degree}});
  }
  return out;
}

Json virtual_diagram_to_json(const VirtualDiagram& d, int degree) {
  Json out = Json::array();
  for (const auto& [pt, mult] : d) {
    out.push_back({{"birth", pt.birth.to_string()},
                   {"death", pt.death.to_string()},
                   {"mult", mult},
                   {"degree", degree}});
  }
  return out;
}

Diagram diagram_from_json(const Json& j) {
  if (!j.is_array()) bad_json("diagram must be an array");
  Diagram d;
  for (const auto& p : j) {
    const Endpoint birth = Endpoint::parse(field_of(p, "birth").get<std::string>());
    const Endpoint death = Endpoint::parse(field_of(p, "death").get<std::string>());
    d[{birth, death}] += p.contains("mult") ? size_of(p.at("mult")) : 1;
  }
  return d;
}

Json barcode_to_json(const Barcode& b) {
  Json out = Json::array();
  for (const auto& [iv, mult] : b.bars) {
    out.push_back({{"lo", iv.lo.to_string()}, {"hi", iv.hi.to_string()}, {"mult", mult}});
  }
  return out;
}

Json k0_to_json(const K0Class& k, const StratifiedLine& line) {
  Json strata = Json::array();
  for (auto s : line.strata()) strata.push_back(s.to_string());
  return {{"vertices", vertices_json(line)}, {"strata", std::move(strata)}, {"coeffs", k.coeffs}};
}

SetZZModule set_module_from_json(const Json& j) {
  if (!j.is_object()) bad_json("set module must be a JSON object");
  const StratifiedLine line = line_of(j);
  const Json& sj = field_of(j, "sets");
  if (!sj.is_array()) bad_json("\"sets\" must be an array");
  std::vector<std::vector<std::string>> labels;
  for (const auto& set : sj) {
    if (!set.is_array()) bad_json("each set must be an array of labels");
    auto& out = labels.emplace_back();
    for (const auto& label : set) out.push_back(label.is_string() ? label.get<std::string>() : label.dump());
  }
  SetZZModule s(line, labels);
  if (!j.contains("maps")) return s;
  for (const auto& entry : j.at("maps")) {
    const StratumId e = stratum_of(field_of(entry, "edge"));
    const StratumId v = stratum_of(field_of(entry, "to"));
    line.require(e);
    line.require(v);
    const auto& from = labels[e.position()];
    const auto& to = labels[v.position()];
    std::vector<std::size_t> image(from.size(), to.size());
    for (const auto& pair : field_of(entry, "pairs")) {
      if (!pair.is_array() || pair.size() != 2) bad_json("each pair must be [from, to]");
      const auto label = [](const Json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
      const auto src = std::find(from.begin(), from.end(), label(pair[0]));
      const auto dst = std::find(to.begin(), to.end(), label(pair[1]));
      if (src == from.end() || dst == to.end()) bad_json("pair " + pair.dump() + " names an unknown element");
      auto& slot = image[static_cast<std::size_t>(src - from.begin())];
      if (slot != to.size()) {
        throw Error(ErrorCode::InvalidMap, "element " + label(pair[0]) + " is mapped twice");
      }
      slot = static_cast<std::size_t>(dst - to.begin());
    }
    if (std::find(image.begin(), image.end(), to.size()) != image.end()) {
      throw Error(ErrorCode::InvalidMap, "map " + e.to_string() + " -> " + v.to_string() + " is not total");
    }
    s.set_map(e, v, std::move(image));
  }
  return s;
}

ValueLabel value_label(const StratifiedLine& line, const Endpoint& e) {
  if (!e.is_finite()) return {e.to_string(), false};
  const StratumId s = e.stratum();
  if (s.is_vertex()) return {to_string(line.coord(s)), false};
  const auto& coords = line.vertex_coords();
  if (coords.empty()) return {"0", true};
  if (s == line.first()) return {to_string(coords.front() - 1), true};
  if (s == line.last()) return {to_string(coords.back() + 1), true};
  return {to_string((line.coord(s.prev()) + line.coord(s.next())) / 2), true};
}

}  // namespace zzc
