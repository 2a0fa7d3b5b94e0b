#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "lop/geometry.hpp"

namespace lop {

struct SolveStats {
    std::int64_t placements_external = 0;
    std::int64_t placements_internal = 0;
    std::int64_t postopt_moves = 0;
    /// Tangency-system solves attempted while searching for positions; the
    /// measurable stand-in for the cubic work bound.
    std::int64_t candidate_evals = 0;
    /// Times the radius-attaining circle was interior, making repositioning
    /// at the ring impossible.
    std::int64_t interior_kmax_skips = 0;
    double elapsed_seconds = 0.0;
};

/// Complete packing: positions, the container (centered at the center of
/// mass), both objectives, and run provenance.
struct Solution {
    std::map<int, Point> positions;
    Point container_center;
    double radius = 0.0;
    double f1 = 0.0;
    double f2 = 0.0;
    double objective = 0.0;
    std::vector<int> permutation;
    std::vector<int> border_ring;  // final ring, for rendering overlays
    SolveStats stats;
};

/// Field-by-field equality ignoring timing.
bool same_solution(const Solution& a, const Solution& b);

}  // namespace lop
