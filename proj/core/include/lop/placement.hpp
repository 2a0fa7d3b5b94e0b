#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>

#include "lop/border.hpp"
#include "lop/model.hpp"

namespace lop {

struct InitialLayout {
    Layout layout;
    Border border;
};

/// Seeds the packing with the first four circles: the first at the origin,
/// the second in contact at angle theta, the third and fourth at the two
/// opposite tangency solutions against that pair. The ring reads
/// first-third-second-fourth so consecutive ids touch.
InitialLayout initial_layout(const std::array<CircleSpec, 4>& first_four,
                             double theta, double eps = kDefaultTolerance);

struct ExternalPlacement {
    Point position;
    std::size_t p_index = 0;  // ring positions the placed circle touches
    std::size_t q_index = 0;
};

/// Places circle k tangent to the border circles at the given consecutive
/// pair, on the outside of the main area. When the tangent spot collides with
/// other placed circles, the contact pair is widened along the ring (the
/// overlapped circle furthest counterclockwise of p, furthest clockwise of q)
/// and the spot re-solved furthest from the centroid of the placed centers,
/// until the position is overlap-free. The widening loop runs at most
/// |ring| times; exhaustion throws NoFeasibleTangentPlacement, an unsolvable
/// final span throws Unsolvable. eval_counter, when given, accumulates one per
/// candidate position examined (also on failure).
ExternalPlacement external_placement(const CircleSpec& k, std::size_t p_index,
                                     std::size_t q_index, const Layout& layout,
                                     const Border& border,
                                     const ProblemInstance& circles,
                                     double eps = kDefaultTolerance,
                                     std::int64_t* eval_counter = nullptr);

struct InternalPlacement {
    Point position;  // centroid of the nbar centers
    int circle_id = 0;
};

/// Tries to fill the pocket left behind an insertion: the candidate position
/// is the centroid of the nbar circle centers, and the first circle of
/// `remaining` (sorted largest first) that fits there without overlap, with
/// its center strictly inside the main area, is chosen. Absence of a fitting
/// circle is a normal outcome.
std::optional<InternalPlacement> internal_placement(
    std::span<const int> nbar, std::span<const CircleSpec> remaining,
    const Layout& layout, const Border& border, const ProblemInstance& circles,
    double eps = kDefaultTolerance, std::int64_t* eval_counter = nullptr);

}  // namespace lop
