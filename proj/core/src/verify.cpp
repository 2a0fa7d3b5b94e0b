#include "lop/verify.hpp"

#include <cmath>
#include <sstream>

#include "lop/errors.hpp"

namespace lop {

std::string FeasibilityReport::to_string() const {
    std::ostringstream os;
    if (feasible()) {
        os << "feasible";
    } else {
        for (const auto& v : overlaps) {
            os << "overlap " << v.a << "/" << v.b << " gap " << v.gap << "\n";
        }
        for (const auto& v : containment) {
            os << "circle " << v.id << " exceeds container by " << v.excess << "\n";
        }
    }
    os << " (f1 " << recomputed_f1 << ", f2 " << recomputed_f2 << ")";
    return os.str();
}

FeasibilityReport verify_solution(const ProblemInstance& instance,
                                  const Solution& solution, double tol) {
    // Deliberately recomputes everything from scratch with plain loops; no
    // reuse of Layout aggregates so solver bugs cannot hide here.
    for (const CircleSpec& c : instance.circles()) {
        if (solution.positions.count(c.id) == 0) {
            throw MissingCircle("verify: no position for circle " +
                                std::to_string(c.id));
        }
    }

    FeasibilityReport report;
    const auto& pos = solution.positions;
    const Point center = solution.container_center;

    const auto specs = instance.circles();
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const Point pi = pos.at(specs[i].id);
        for (std::size_t j = i + 1; j < specs.size(); ++j) {
            const Point pj = pos.at(specs[j].id);
            const double d = std::hypot(pi.x - pj.x, pi.y - pj.y);
            const double gap = d - (specs[i].radius + specs[j].radius);
            if (gap < -tol) {
                report.overlaps.push_back({specs[i].id, specs[j].id, gap});
            }
        }
    }

    double f1 = 0.0;
    for (const CircleSpec& c : specs) {
        const Point p = pos.at(c.id);
        const double reach = c.radius + std::hypot(p.x - center.x, p.y - center.y);
        if (reach > f1) f1 = reach;
        const double excess = reach - solution.radius;
        if (excess > tol) {
            report.containment.push_back({c.id, excess});
        }
    }
    report.recomputed_f1 = f1;

    const double w2 = instance.omega() * instance.omega();
    double fx = 0.0, fy = 0.0;
    for (const CircleSpec& c : specs) {
        const Point p = pos.at(c.id);
        fx += c.mass * w2 * (p.x - center.x);
        fy += c.mass * w2 * (p.y - center.y);
    }
    report.recomputed_f2 = std::hypot(fx, fy);
    return report;
}

}  // namespace lop
