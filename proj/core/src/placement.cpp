#include "lop/placement.hpp"

#include <cassert>
#include <cmath>
#include <string>
#include <vector>

#include "lop/errors.hpp"

namespace lop {

namespace {

Point placed_centroid(const Layout& layout) {
    std::vector<Point> pts;
    pts.reserve(layout.size());
    for (const auto& [id, p] : layout) pts.push_back(p);
    return centroid(pts);
}

bool lex_greater(Point a, Point b) {
    if (a.y != b.y) return a.y > b.y;
    return a.x > b.x;
}

Point farther_from(Point a, Point b, Point ref) {
    const double da = distance(a, ref);
    const double db = distance(b, ref);
    if (da != db) return da > db ? a : b;
    return lex_greater(a, b) ? a : b;
}

std::vector<int> overlapped_ids(Point pos, double radius, const Layout& layout,
                                const ProblemInstance& circles, double eps) {
    std::vector<int> out;
    for (const auto& [id, p] : layout) {
        if (circles_overlap(pos, radius, p, circles.radius_of(id), eps)) {
            out.push_back(id);
        }
    }
    return out;
}

}  // namespace

InitialLayout initial_layout(const std::array<CircleSpec, 4>& first_four,
                             double theta, double eps) {
    const CircleSpec& a1 = first_four[0];
    const CircleSpec& a2 = first_four[1];
    const CircleSpec& a3 = first_four[2];
    const CircleSpec& a4 = first_four[3];

    const Point x1{0.0, 0.0};
    const double gap = a1.radius + a2.radius;
    const Point x2{gap * std::cos(theta), gap * std::sin(theta)};

    // Third and fourth circle take the two opposite tangency solutions against
    // the seed pair, so they end up mirrored across the seed axis.
    const auto c3 = tangency_candidates(a3.radius, x1, a1.radius, x2, a2.radius, eps);
    const auto c4 = tangency_candidates(a4.radius, x1, a1.radius, x2, a2.radius, eps);
    assert(c3.count == 2 && c4.count == 2);
    const Point x3 = c3.points[0];
    const Point x4 = c4.points[1];
    // A much larger third circle can wrap around the seed pair far enough to
    // reach the fourth one; no seed layout exists for such an order.
    if (circles_overlap(x3, a3.radius, x4, a4.radius, eps)) {
        throw ConstructionStuck(
            "initial_layout: circles " + std::to_string(a3.id) + " and " +
            std::to_string(a4.id) + " overlap on opposite sides of the seed pair");
    }

    Layout layout;
    layout.place(a1.id, x1);
    layout.place(a2.id, x2);
    layout.place(a3.id, x3);
    layout.place(a4.id, x4);
    Border border(std::vector<int>{a1.id, a3.id, a2.id, a4.id});
    return InitialLayout{std::move(layout), std::move(border)};
}

ExternalPlacement external_placement(const CircleSpec& k, std::size_t p_index,
                                     std::size_t q_index, const Layout& layout,
                                     const Border& border,
                                     const ProblemInstance& circles, double eps,
                                     std::int64_t* eval_counter) {
    const std::size_t t = border.size();
    const std::size_t p0 = p_index % t;
    const std::size_t q0 = q_index % t;
    if ((q0 + t - p0) % t != 1) {
        throw Error("external_placement: (" + std::to_string(p0) + "," +
                    std::to_string(q0) + ") is not a consecutive ring pair");
    }

    const Polygon area = main_area_polygon(border, layout);
    const Point ref = placed_centroid(layout);

    std::size_t widen_back = 0;  // ring steps counterclockwise of the original p
    std::size_t widen_fwd = 0;   // ring steps clockwise of the original q

    for (std::size_t iter = 0; iter <= t; ++iter) {
        const std::size_t p = (p0 + t - widen_back % t) % t;
        const std::size_t q = (q0 + widen_fwd) % t;
        const int id_p = border.at(p);
        const int id_q = border.at(q);

        if (eval_counter) ++*eval_counter;
        const auto cands =
            tangency_candidates(k.radius, layout.at(id_p), circles.radius_of(id_p),
                                layout.at(id_q), circles.radius_of(id_q), eps);
        if (cands.count == 0) {
            throw Unsolvable("external_placement: no tangent position for circle " +
                             std::to_string(k.id) + " on span (" +
                             std::to_string(id_p) + "," + std::to_string(id_q) + ")");
        }

        // Candidates whose center would fall strictly inside the main area are
        // never eligible; among the rest take the one farther from the placed
        // centroid (larger (y, x) on exact ties).
        Point pos;
        bool found = false;
        if (cands.count == 1) {
            if (classify_point(cands.points[0], area, eps) != Region::Inside) {
                pos = cands.points[0];
                found = true;
            }
        } else {
            const bool in0 = classify_point(cands.points[0], area, eps) == Region::Inside;
            const bool in1 = classify_point(cands.points[1], area, eps) == Region::Inside;
            if (!in0 && !in1) {
                pos = farther_from(cands.points[0], cands.points[1], ref);
                found = true;
            } else if (!in0 || !in1) {
                pos = in0 ? cands.points[1] : cands.points[0];
                found = true;
            }
        }
        if (!found) {
            throw NoFeasibleTangentPlacement(
                "external_placement: every tangent position for circle " +
                std::to_string(k.id) + " lies inside the main area");
        }

        const std::vector<int> clashes =
            overlapped_ids(pos, k.radius, layout, circles, eps);
        if (clashes.empty()) {
            return ExternalPlacement{pos, p, q};
        }

        // Widen toward the overlapped ring circles: the one furthest
        // counterclockwise moves p, the one furthest clockwise moves q.
        bool widened = false;
        for (int id : clashes) {
            const auto at = border.position_of(id);
            if (!at) continue;  // interior circles give no ring direction
            const std::size_t back = (p0 + t - *at) % t;
            const std::size_t fwd = (*at + t - q0) % t;
            if (back <= fwd) {
                if (back > widen_back) {
                    widen_back = back;
                    widened = true;
                }
            } else if (fwd > widen_fwd) {
                widen_fwd = fwd;
                widened = true;
            }
        }
        if (!widened || widen_back + widen_fwd + 1 > t - 1) {
            throw NoFeasibleTangentPlacement(
                "external_placement: circle " + std::to_string(k.id) +
                " cannot clear the overlaps from pair (" +
                std::to_string(border.at(p0)) + "," + std::to_string(border.at(q0)) +
                ")");
        }
    }
    throw NoFeasibleTangentPlacement(
        "external_placement: widening exhausted the ring for circle " +
        std::to_string(k.id));
}

std::optional<InternalPlacement> internal_placement(
    std::span<const int> nbar, std::span<const CircleSpec> remaining,
    const Layout& layout, const Border& border, const ProblemInstance& circles,
    double eps, std::int64_t* eval_counter) {
    if (nbar.empty() || remaining.empty()) return std::nullopt;

    std::vector<Point> pts;
    pts.reserve(nbar.size());
    for (int id : nbar) pts.push_back(layout.at(id));
    const Point xc = centroid(pts);

    if (classify_point(xc, main_area_polygon(border, layout), eps) != Region::Inside) {
        return std::nullopt;
    }
    for (const CircleSpec& c : remaining) {
        if (eval_counter) ++*eval_counter;
        if (overlapped_ids(xc, c.radius, layout, circles, eps).empty()) {
            return InternalPlacement{xc, c.id};
        }
    }
    return std::nullopt;
}

}  // namespace lop
