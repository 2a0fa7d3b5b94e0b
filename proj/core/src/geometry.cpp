#include "lop/geometry.hpp"

#include <algorithm>
#include <cmath>

#include "lop/errors.hpp"

namespace lop {

double distance(Point a, Point b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

TangencyCandidates tangency_candidates(double r_k, Point p_center, double r_p,
                                       Point q_center, double r_q, double eps) {
    const double d = distance(p_center, q_center);
    const double scale = r_p + r_q + 2.0 * r_k;
    const double tol = eps * scale;
    if (d <= tol) {
        throw DegenerateInput("tangency_candidates: coincident circle centers");
    }

    // Target distances to the two given centers.
    const double radius_p = r_k + r_p;
    const double radius_q = r_k + r_q;

    TangencyCandidates out;
    if (d > radius_p + radius_q + tol) return out;  // too far apart
    if (d < std::abs(radius_p - radius_q) - tol) return out;  // one locus engulfs the other

    const double ux = (q_center.x - p_center.x) / d;
    const double uy = (q_center.y - p_center.y) / d;
    // Foot of the radical line along p->q; subtracting the circle equations
    // is stable where naive elimination is not.
    const double a = (d * d + radius_p * radius_p - radius_q * radius_q) / (2.0 * d);
    const Point base{p_center.x + a * ux, p_center.y + a * uy};

    const bool outer_tangent = d >= radius_p + radius_q - tol;
    const bool inner_tangent = d <= std::abs(radius_p - radius_q) + tol;
    if (outer_tangent || inner_tangent) {
        out.count = 1;
        out.points[0] = base;
        return out;
    }

    const double h = std::sqrt(std::max(0.0, radius_p * radius_p - a * a));
    out.count = 2;
    out.points[0] = Point{base.x - h * uy, base.y + h * ux};  // left of p->q
    out.points[1] = Point{base.x + h * uy, base.y - h * ux};  // right of p->q
    return out;
}

bool circles_overlap(Point a_center, double r_a, Point b_center, double r_b,
                     double eps) {
    const double sum = r_a + r_b;
    return distance(a_center, b_center) < sum - eps * sum;
}

Point centroid(std::span<const Point> points) {
    if (points.empty()) throw EmptySet("centroid: empty point set");
    double sx = 0.0, sy = 0.0;
    for (const Point& p : points) {
        sx += p.x;
        sy += p.y;
    }
    const double n = static_cast<double>(points.size());
    return Point{sx / n, sy / n};
}

double segment_distance(Point p, Point a, Point b) {
    const double abx = b.x - a.x;
    const double aby = b.y - a.y;
    const double len2 = abx * abx + aby * aby;
    if (len2 == 0.0) return distance(p, a);
    double t = ((p.x - a.x) * abx + (p.y - a.y) * aby) / len2;
    t = std::clamp(t, 0.0, 1.0);
    return distance(p, Point{a.x + t * abx, a.y + t * aby});
}

Region classify_point(Point p, const Polygon& poly, double eps) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) throw InvalidPolygon("classify_point: polygon needs >= 3 vertices");

    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        if (segment_distance(p, v[j], v[i]) <= eps) return Region::OnBoundary;
    }

    // Ray crossing toward +x; the half-open vertex rule keeps the count
    // consistent when the ray passes through a vertex.
    bool inside = false;
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        const bool crosses = (v[i].y > p.y) != (v[j].y > p.y);
        if (crosses) {
            const double x_at =
                v[j].x + (v[i].x - v[j].x) * (p.y - v[j].y) / (v[i].y - v[j].y);
            if (p.x < x_at) inside = !inside;
        }
    }
    return inside ? Region::Inside : Region::Outside;
}

namespace {

int orientation(Point a, Point b, Point c, double eps) {
    const double cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    if (cross > eps) return 1;
    if (cross < -eps) return -1;
    return 0;
}

bool within_box(Point a, Point b, Point p, double eps) {
    return std::min(a.x, b.x) - eps <= p.x && p.x <= std::max(a.x, b.x) + eps &&
           std::min(a.y, b.y) - eps <= p.y && p.y <= std::max(a.y, b.y) + eps;
}

bool segments_cross(Point a, Point b, Point c, Point d, double eps) {
    const int o1 = orientation(a, b, c, eps);
    const int o2 = orientation(a, b, d, eps);
    const int o3 = orientation(c, d, a, eps);
    const int o4 = orientation(c, d, b, eps);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && within_box(a, b, c, eps)) return true;
    if (o2 == 0 && within_box(a, b, d, eps)) return true;
    if (o3 == 0 && within_box(c, d, a, eps)) return true;
    if (o4 == 0 && within_box(c, d, b, eps)) return true;
    return false;
}

}  // namespace

bool is_simple_polygon(const Polygon& poly, double eps) {
    const auto& v = poly.vertices;
    const std::size_t n = v.size();
    if (n < 3) return false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point a = v[i];
        const Point b = v[(i + 1) % n];
        for (std::size_t j = i + 1; j < n; ++j) {
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (adjacent) continue;
            const Point c = v[j];
            const Point d = v[(j + 1) % n];
            if (segments_cross(a, b, c, d, eps)) return false;
        }
    }
    return true;
}

}  // namespace lop
