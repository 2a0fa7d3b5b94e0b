#include "lop/model.hpp"

#include <cmath>
#include <limits>

#include "lop/errors.hpp"

namespace lop {

ProblemInstance::ProblemInstance(std::vector<CircleSpec> circles, double lambda,
                                 double beta, double omega, std::string name)
    : circles_(std::move(circles)),
      lambda_(lambda),
      beta_(beta),
      omega_(omega),
      name_(std::move(name)) {
    if (circles_.empty()) throw ValidationError("instance: needs at least one circle");
    if (!(lambda_ > 0.0 && lambda_ < 1.0) || !(beta_ > 0.0 && beta_ < 1.0)) {
        throw ValidationError("instance: lambda and beta must lie in (0,1)");
    }
    if (!(omega_ > 0.0) || !std::isfinite(omega_)) {
        throw ValidationError("instance: omega must be finite and positive");
    }
    for (std::size_t i = 0; i < circles_.size(); ++i) {
        const CircleSpec& c = circles_[i];
        if (!(c.radius > 0.0) || !std::isfinite(c.radius)) {
            throw ValidationError("instance: circle " + std::to_string(c.id) +
                                  " has nonpositive radius");
        }
        if (!(c.mass > 0.0) || !std::isfinite(c.mass)) {
            throw ValidationError("instance: circle " + std::to_string(c.id) +
                                  " has nonpositive mass");
        }
        if (!index_.emplace(c.id, i).second) {
            throw ValidationError("instance: duplicate circle id " +
                                  std::to_string(c.id));
        }
    }
}

const CircleSpec& ProblemInstance::circle(int id) const {
    auto it = index_.find(id);
    if (it == index_.end()) {
        throw MissingCircle("instance: unknown circle id " + std::to_string(id));
    }
    return circles_[it->second];
}

void Layout::place(int id, Point p) {
    if (!positions_.emplace(id, p).second) {
        throw DuplicateId("layout: circle " + std::to_string(id) +
                          " already placed");
    }
}

void Layout::remove(int id) {
    if (positions_.erase(id) == 0) {
        throw MissingCircle("layout: circle " + std::to_string(id) +
                            " not placed");
    }
}

const Point& Layout::at(int id) const {
    auto it = positions_.find(id);
    if (it == positions_.end()) {
        throw MissingCircle("layout: circle " + std::to_string(id) +
                            " not placed");
    }
    return it->second;
}

MassAggregate center_of_mass(const Layout& layout, const ProblemInstance& circles) {
    if (layout.empty()) throw EmptyLayout("center_of_mass: no circles placed");
    double sx = 0.0, sy = 0.0, sm = 0.0;
    for (const auto& [id, p] : layout) {
        const double m = circles.mass_of(id);
        sx += m * p.x;
        sy += m * p.y;
        sm += m;
    }
    return MassAggregate{Point{sx / sm, sy / sm}, sm};
}

double imbalance_f2(const Layout& layout, Point container_center,
                    const ProblemInstance& circles, double omega) {
    if (layout.empty()) throw EmptyLayout("imbalance_f2: no circles placed");
    const double w2 = omega * omega;
    double fx = 0.0, fy = 0.0;
    for (const auto& [id, p] : layout) {
        const double m = circles.mass_of(id);
        fx += m * w2 * (p.x - container_center.x);
        fy += m * w2 * (p.y - container_center.y);
    }
    return std::hypot(fx, fy);
}

EnvelopmentResult envelopment_radius(const Layout& layout, Point center,
                                     const ProblemInstance& circles) {
    if (layout.empty()) throw EmptyLayout("envelopment_radius: no circles placed");
    EnvelopmentResult out{-std::numeric_limits<double>::infinity(), 0};
    for (const auto& [id, p] : layout) {
        const double reach = circles.radius_of(id) + distance(center, p);
        if (reach > out.radius) {  // ties keep the smallest id (map order)
            out.radius = reach;
            out.k_max = id;
        }
    }
    return out;
}

double objective(double f1, double f2, double lambda, double beta) {
    return lambda * f1 + beta * f2;
}

}  // namespace lop
