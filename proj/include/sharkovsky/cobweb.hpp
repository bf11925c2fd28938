#pragma once

#include <string>

#include "sharkovsky/interval_maps.hpp"

namespace sharkovsky {

/// SVG cobweb diagram: graph of f, the diagonal, and the staircase of the
/// orbit of `start` for `iterations` steps. Stops early if the orbit escapes.
std::string cobweb_svg(const RealMap& f, double start, int iterations, int size = 480);

}  // namespace sharkovsky
