#pragma once

// Static SVG renderings on an 800x600 canvas. Layout uses integer
// coordinates only, computed from stratum positions, so output is
// byte-identical across runs.

#include <string>
#include <utility>
#include <vector>

#include "zzc/barcode.hpp"

namespace zzc {

/// Points per degree against the diagonal; infinite coordinates sit on
/// the border lanes.
std::string diagram_svg(const std::vector<std::pair<int, Diagram>>& by_degree,
                        const StratifiedLine& line);

/// One horizontal bar per interval copy, stacked by degree.
std::string barcode_svg(const std::vector<std::pair<int, Barcode>>& by_degree);

/// The Euler curve as a step function over the strata.
std::string euler_svg(const K0Class& curve, const StratifiedLine& line);

}  // namespace zzc
