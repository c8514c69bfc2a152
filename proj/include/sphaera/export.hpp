#pragma once

#include <string>

#include "sphaera/verify.hpp"

namespace sphaera {

// each tile fan-triangulated about its spherical centroid; b-edges as a separate line group
std::string to_obj(const PlacedTiling& pt);

struct SvgOptions {
    bool mark_ufos = false;
    double size = 800;
};
// stereographic projection, densest vertex at the center; b-edges stroked thicker, mirrored tiles shaded
std::string to_svg(const PlacedTiling& pt, const SvgOptions& opt = {});

}  // namespace sphaera
