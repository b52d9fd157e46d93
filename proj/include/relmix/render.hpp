#pragma once

#include <string>
#include <vector>

#include "relmix/orthant.hpp"

namespace relmix {

// Static SVG picture of 2-dimensional orthant polyhedra: lattice grid, the
// shaded complement region C \ B of each polyhedron, generators as labeled
// dots. Axes are clipped at (max generator coordinate sum) + 1. Byte-exact
// deterministic for fixed input. Throws DimensionMismatch unless every
// polyhedron is 2-dimensional.
std::string render_svg(const std::vector<OrthantPolyhedron>& polyhedra);

}  // namespace relmix
