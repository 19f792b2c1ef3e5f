#pragma once

#include <optional>
#include <string>

#include "tilebalance/geometry.hpp"
#include "tilebalance/periodic_map.hpp"

namespace tilebalance {

/// SVG 1.1 drawing of a patch. Tiles carry class "f1", "f2" or "f3" and the disk is outlined.
std::string render_patch_svg(const PeriodicTiling& tiling, const Patch& patch);

/// SVG 1.1 drawing of every tile meeting `region`, all with class "tile".
std::string render_region_svg(const PeriodicTiling& tiling, const Disk& region);

}  // namespace tilebalance
