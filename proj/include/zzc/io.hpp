#pragma once

// Text and JSON formats.
//
// Filtration files hold one simplex per line, "v0 v1 ... vk ; value", with
// exact rational values; blank lines and lines starting with '#' are
// skipped. Modules, diagrams, K_0 vectors and set-valued modules travel as
// JSON with rationals written as "num/den" strings.

#include <iosfwd>
#include <string>

#include "json.hpp"
#include "zzc/barcode.hpp"
#include "zzc/cosheaf.hpp"
#include "zzc/simplicial.hpp"

namespace zzc {

using Json = nlohmann::ordered_json;

/// Throws Error(ParseError) carrying the 1-based line number; an input with
/// no simplices is a parse error. Face and monotonicity violations surface
/// as MissingFace and NonMonotoneFilter.
Filtration parse_filtration(std::istream& in);
Filtration read_filtration_file(const std::string& path);

Json parse_json_file(const std::string& path);

Json module_to_json(const ZZModule& m);
/// Missing maps are zero. field is used when the document has none.
ZZModule module_from_json(const Json& j, FieldSpec field = {});

/// Sorted by (birth, death); mult is the multiplicity.
Json diagram_to_json(const Diagram& d, int degree);
Json virtual_diagram_to_json(const VirtualDiagram& d, int degree);
Diagram diagram_from_json(const Json& j);

Json barcode_to_json(const Barcode& b);
Json k0_to_json(const K0Class& k, const StratifiedLine& line);

/// {"vertices": [...], "sets": [[labels] per stratum],
///  "maps": [{"edge": "1/2", "to": "1", "pairs": [["a", "x"], ...]}]}
SetZZModule set_module_from_json(const Json& j);

/// A filtration-value label for a diagram coordinate. Vertices give their
/// coordinate exactly; a bounded edge gives its midpoint and an unbounded
/// one the neighbouring point shifted by one, both flagged approximate.
struct ValueLabel {
  std::string text;
  bool approx = false;
};

ValueLabel value_label(const StratifiedLine& line, const Endpoint& e);

}  // namespace zzc
