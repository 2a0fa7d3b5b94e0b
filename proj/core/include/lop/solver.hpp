#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "lop/border.hpp"
#include "lop/model.hpp"
#include "lop/solution.hpp"

namespace lop {

enum class PairPolicy {
    NearestCenterOfMass,  // grow at the pair whose midpoint is closest to X_CM
    SeededRandom,         // pick uniformly within the quadrant bucket
};

struct SolverConfig {
    double theta = 0.0;                 // seed-pair angle
    double tolerance = kDefaultTolerance;
    double postopt_delta = 1e-7;        // relative radius gain required to keep a move
    PairPolicy pair_policy = PairPolicy::NearestCenterOfMass;
    std::uint64_t seed = 0;             // drives SeededRandom pair picks only
};

/// Contact pairs of the border bucketed by the quadrant (about the center of
/// mass) that holds the first circle's center. Axes are split half-open so
/// the classification is total: Q1 takes dx>=0, dy>0 plus the origin itself;
/// Q2 dx<0, dy>=0; Q3 dx<=0, dy<0; Q4 dx>0, dy<=0.
struct QuadrantPartition {
    std::array<std::vector<std::pair<int, int>>, 4> buckets;
    Point origin;

    std::size_t total_pairs() const {
        return buckets[0].size() + buckets[1].size() + buckets[2].size() +
               buckets[3].size();
    }
};

QuadrantPartition cmpt_partition(const Layout& layout, const Border& border,
                                 const ProblemInstance& circles);

struct ConstructionResult {
    Layout layout;
    Border border;
    SolveStats stats;
};

/// Called after the initial seed and after every committed placement;
/// used by tests to assert the border invariants at each step.
using StepObserver = std::function<void(const Layout&, const Border&)>;

/// Builds a complete overlap-free layout by seeding four circles, then growing
/// the ring: quadrant buckets are rebuilt from the current center of mass,
/// swept round-robin, and each placed circle is followed by an attempt to fill
/// the pocket it closed. Throws TooFewCircles (n < 4) and ConstructionStuck
/// when no border pair can host the next circle.
ConstructionResult construct_layout(const ProblemInstance& instance,
                                    const std::vector<int>& permutation,
                                    const SolverConfig& config,
                                    const StepObserver& on_step = {});

struct PostoptResult {
    Layout layout;
    Border border;
    SolveStats stats;
};

/// Repositions the radius-attaining ring circle onto other contact pairs and
/// keeps the first move that shrinks the envelopment radius (about the moved
/// layout's center of mass) by more than delta, restarting until no move
/// improves. Never worsens the layout.
PostoptResult postoptimize(const Layout& layout, const Border& border,
                           const ProblemInstance& instance,
                           const SolverConfig& config);

/// Full run for one placement order: construction, postoptimization, and the
/// final shift of the container to the center of mass (zero imbalance).
/// Deterministic for fixed (instance, permutation, config).
Solution solve(const ProblemInstance& instance, const std::vector<int>& permutation,
               const SolverConfig& config);

}  // namespace lop
