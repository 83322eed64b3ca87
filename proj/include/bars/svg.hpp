#pragma once

#include <string>

#include "bars/geometry.hpp"

namespace bars {

// One rect per piece, colored by piece index; the viewBox is the whole box
// with y pointing up. Coordinates are decimal approximations (display only).
// Throws DimensionUnsupported unless the dissection is 2D.
std::string render_svg(const Dissection& d);

} // namespace bars
