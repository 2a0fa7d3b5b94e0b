#pragma once

#include <array>
#include <span>
#include <vector>

namespace lop {

/// Global default tolerance. Applied relative to the radius-sum scale where one
/// exists (tangency, overlap) and absolute for raw coordinates (edge distance).
inline constexpr double kDefaultTolerance = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline bool operator==(Point a, Point b) { return a.x == b.x && a.y == b.y; }

double distance(Point a, Point b);

/// Solutions of the two-circle tangency system: a point whose distance to
/// p_center is r_k + r_p and to q_center is r_k + r_q.
struct TangencyCandidates {
    int count = 0;                 // 0, 1 or 2 real solutions
    std::array<Point, 2> points{};  // points[0..count-1] valid

    // With count == 2, points[0] lies on the left of the directed line
    // p_center -> q_center and points[1] on the right.
};

/// Solves the tangency system for a circle of radius r_k against the circles
/// (p_center, r_p) and (q_center, r_q). Two solutions exist while
/// d(p,q) < r_p + r_q + 2 r_k, one at equality (within the eps band), none
/// beyond it. Throws DegenerateInput on coincident centers.
TangencyCandidates tangency_candidates(double r_k, Point p_center, double r_p,
                                       Point q_center, double r_q,
                                       double eps = kDefaultTolerance);

/// True iff the circles interpenetrate. Contact within the eps band counts as
/// tangency, not overlap.
bool circles_overlap(Point a_center, double r_a, Point b_center, double r_b,
                     double eps = kDefaultTolerance);

/// Arithmetic mean of the points. Throws EmptySet on an empty range.
Point centroid(std::span<const Point> points);

enum class Region { Inside, OnBoundary, Outside };

/// Simple polygon through circle centers; edges join consecutive vertices
/// (and the last back to the first).
struct Polygon {
    std::vector<Point> vertices;
};

/// Distance from a point to the closed segment [a, b].
double segment_distance(Point p, Point a, Point b);

/// Classifies p against a simple polygon. OnBoundary when within eps of any
/// edge. Throws InvalidPolygon for fewer than 3 vertices.
Region classify_point(Point p, const Polygon& poly, double eps = kDefaultTolerance);

/// True when no two non-adjacent edges intersect and adjacent edges meet only
/// at their shared endpoint.
bool is_simple_polygon(const Polygon& poly, double eps = kDefaultTolerance);

}  // namespace lop
