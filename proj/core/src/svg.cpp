#include "lop/svg.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace lop {

std::string render_svg(const Solution& solution, const ProblemInstance& instance,
                       bool border_overlay) {
    const Point c = solution.container_center;
    const double r = solution.radius;
    const double margin = 0.05 * r;

    double min_radius = std::numeric_limits<double>::infinity();
    for (const CircleSpec& spec : instance.circles()) {
        min_radius = std::min(min_radius, spec.radius);
    }
    const double font = 0.7 * min_radius;

    std::ostringstream os;
    os.precision(10);
    // Model y grows upward; SVG y grows downward, so emit -y throughout.
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\""
       << c.x - r - margin << " " << -c.y - r - margin << " "
       << 2 * (r + margin) << " " << 2 * (r + margin) << "\">\n";
    os << "  <circle cx=\"" << c.x << "\" cy=\"" << -c.y << "\" r=\"" << r
       << "\" fill=\"none\" stroke=\"#222\" stroke-width=\"" << 0.01 * r
       << "\"/>\n";

    for (const auto& [id, p] : solution.positions) {
        os << "  <circle cx=\"" << p.x << "\" cy=\"" << -p.y << "\" r=\""
           << instance.radius_of(id)
           << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#3182bd\""
           << " stroke-width=\"" << 0.005 * r << "\"/>\n";
        os << "  <text x=\"" << p.x << "\" y=\"" << -p.y
           << "\" font-size=\"" << font
           << "\" text-anchor=\"middle\" dominant-baseline=\"central\">" << id
           << "</text>\n";
    }

    if (border_overlay && solution.border_ring.size() >= 3) {
        const auto& ring = solution.border_ring;
        for (std::size_t i = 0; i < ring.size(); ++i) {
            const Point a = solution.positions.at(ring[i]);
            const Point b = solution.positions.at(ring[(i + 1) % ring.size()]);
            os << "  <line x1=\"" << a.x << "\" y1=\"" << -a.y << "\" x2=\""
               << b.x << "\" y2=\"" << -b.y
               << "\" stroke=\"#d62728\" stroke-dasharray=\"" << 0.02 * r << ","
               << 0.02 * r << "\" stroke-width=\"" << 0.008 * r << "\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace lop
