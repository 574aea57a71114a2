#pragma once

#include "eisen/geometry.hpp"

#include <string>

namespace eisen {

/// SVG 1.1 drawing of the circle, its labeled points and a chord with a
/// length label for every expected pair. `scale` is pixels per unit length.
std::string emit_svg(const Embedding& e, double scale);

}  // namespace eisen
