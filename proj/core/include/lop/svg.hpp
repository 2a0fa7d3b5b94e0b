#pragma once

#include <string>

#include "lop/model.hpp"
#include "lop/solution.hpp"

namespace lop {

/// Renders the packing as an SVG document: the container outline, one circle
/// per placement labeled by id, and (when border_overlay is set) one line
/// segment per ring edge through the border circles' centers.
std::string render_svg(const Solution& solution, const ProblemInstance& instance,
                       bool border_overlay = false);

}  // namespace lop
