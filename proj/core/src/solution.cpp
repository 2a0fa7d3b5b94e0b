#include "lop/solution.hpp"

namespace lop {

bool same_solution(const Solution& a, const Solution& b) {
    return a.positions == b.positions &&
           a.container_center == b.container_center && a.radius == b.radius &&
           a.f1 == b.f1 && a.f2 == b.f2 && a.objective == b.objective &&
           a.permutation == b.permutation && a.border_ring == b.border_ring &&
           a.stats.placements_external == b.stats.placements_external &&
           a.stats.placements_internal == b.stats.placements_internal &&
           a.stats.postopt_moves == b.stats.postopt_moves &&
           a.stats.candidate_evals == b.stats.candidate_evals &&
           a.stats.interior_kmax_skips == b.stats.interior_kmax_skips;
}

}  // namespace lop
