#pragma once

#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "lop/geometry.hpp"

namespace lop {

/// One circle to be packed.
struct CircleSpec {
    int id = 0;
    double radius = 0.0;
    double mass = 0.0;
};

/// Validated problem data: the circles plus the objective weights
/// f(z) = lambda * f1 + beta * f2 and the angular velocity omega.
class ProblemInstance {
public:
    ProblemInstance(std::vector<CircleSpec> circles, double lambda = 0.5,
                    double beta = 0.5, double omega = 1.0,
                    std::string name = "");

    std::size_t n() const { return circles_.size(); }
    std::span<const CircleSpec> circles() const { return circles_; }
    const CircleSpec& circle(int id) const;
    bool has_circle(int id) const { return index_.count(id) != 0; }
    double radius_of(int id) const { return circle(id).radius; }
    double mass_of(int id) const { return circle(id).mass; }

    double lambda() const { return lambda_; }
    double beta() const { return beta_; }
    double omega() const { return omega_; }
    const std::string& name() const { return name_; }

private:
    std::vector<CircleSpec> circles_;
    std::unordered_map<int, std::size_t> index_;
    double lambda_;
    double beta_;
    double omega_;
    std::string name_;
};

/// Center positions of the circles placed so far, keyed by circle id.
/// Iteration is in ascending id order, which keeps every aggregate sum
/// deterministic.
class Layout {
public:
    void place(int id, Point p);
    void remove(int id);
    bool contains(int id) const { return positions_.count(id) != 0; }
    const Point& at(int id) const;
    std::size_t size() const { return positions_.size(); }
    bool empty() const { return positions_.empty(); }

    auto begin() const { return positions_.begin(); }
    auto end() const { return positions_.end(); }

private:
    std::map<int, Point> positions_;
};

struct MassAggregate {
    Point cm;                // center of mass of the placed circles
    double total_mass = 0.0;
};

MassAggregate center_of_mass(const Layout& layout, const ProblemInstance& circles);

/// Residual rotational force magnitude about container_center:
/// sqrt((sum m_i w^2 (x_i - x))^2 + (sum m_i w^2 (y_i - y))^2).
double imbalance_f2(const Layout& layout, Point container_center,
                    const ProblemInstance& circles, double omega);

struct EnvelopmentResult {
    double radius = 0.0;  // max over placed circles of r_i + d(center, X_i)
    int k_max = 0;        // achieving circle id, smallest id on ties
};

EnvelopmentResult envelopment_radius(const Layout& layout, Point center,
                                     const ProblemInstance& circles);

/// lambda * f1 + beta * f2.
double objective(double f1, double f2, double lambda, double beta);

}  // namespace lop
