#pragma once

#include <string>
#include <vector>

#include "lop/model.hpp"
#include "lop/solution.hpp"

namespace lop {

struct OverlapViolation {
    int a = 0;
    int b = 0;
    double gap = 0.0;  // d(a,b) - (r_a + r_b), negative when interpenetrating
};

struct ContainmentViolation {
    int id = 0;
    double excess = 0.0;  // r_i + d(center, X_i) - r, positive when outside
};

struct FeasibilityReport {
    std::vector<OverlapViolation> overlaps;
    std::vector<ContainmentViolation> containment;
    double recomputed_f1 = 0.0;
    double recomputed_f2 = 0.0;
    bool feasible() const { return overlaps.empty() && containment.empty(); }
    std::string to_string() const;
};

/// Recomputes feasibility and both objectives from the raw positions alone.
/// Shares no code path with the solver's incremental bookkeeping, so it can
/// serve as an oracle for solver output. Throws MissingCircle when the
/// solution lacks a position for some instance id.
FeasibilityReport verify_solution(const ProblemInstance& instance,
                                  const Solution& solution, double tol);

}  // namespace lop
