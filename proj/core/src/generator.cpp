#include "lop/generator.hpp"

#include <string>

#include "lop/errors.hpp"
#include "lop/rng.hpp"

namespace lop {

ProblemInstance generate_instance(const InstanceFamily& family) {
    if (family.size < 1) throw ValidationError("generate: size must be >= 1");
    if (family.radius_range.first > family.radius_range.second ||
        family.mass_range.first > family.mass_range.second) {
        throw ValidationError("generate: range minimum exceeds maximum");
    }
    if (family.radius_range.first <= 0.0 || family.mass_range.first <= 0.0) {
        throw ValidationError("generate: radii and masses must stay positive");
    }

    Rng rng(family.seed);
    std::vector<CircleSpec> circles;
    circles.reserve(static_cast<std::size_t>(family.size));
    for (int id = 1; id <= family.size; ++id) {
        const double r = rng.uniform(family.radius_range.first, family.radius_range.second);
        const double m = rng.uniform(family.mass_range.first, family.mass_range.second);
        circles.push_back(CircleSpec{id, r, m});
    }
    std::string name = family.name.empty()
                           ? "seeded-" + std::to_string(family.size) + "-" +
                                 std::to_string(family.seed)
                           : family.name;
    return ProblemInstance(std::move(circles), 0.5, 0.5, 1.0, std::move(name));
}

std::vector<InstanceFamily> reference_families() {
    // Published ranges per instance size; the seeds are frozen so every
    // machine regenerates identical benchmark instances.
    return {
        {7, {8.5, 12.0}, {72.25, 144.0}, 1007, "ref-07"},
        {10, {5.0, 23.0}, {20.0, 93.0}, 1010, "ref-10"},
        {15, {6.0, 24.0}, {12.0, 98.0}, 1015, "ref-15"},
        {20, {5.0, 24.0}, {11.0, 94.0}, 1020, "ref-20"},
        {25, {6.0, 24.0}, {11.0, 96.0}, 1025, "ref-25"},
        {30, {6.0, 24.0}, {12.0, 97.0}, 1030, "ref-30"},
        {35, {7.0, 24.0}, {10.0, 99.0}, 1035, "ref-35"},
        {40, {6.0, 23.0}, {12.0, 99.0}, 1040, "ref-40"},
        {45, {6.0, 24.0}, {11.0, 99.0}, 1045, "ref-45"},
        {50, {5.0, 24.0}, {10.0, 99.0}, 1050, "ref-50"},
        {55, {6.0, 24.0}, {13.0, 99.0}, 1055, "ref-55"},
    };
}

InstanceFamily reference_family(int size) {
    for (const InstanceFamily& f : reference_families()) {
        if (f.size == size) return f;
    }
    throw ValidationError("no reference family of size " + std::to_string(size));
}

}  // namespace lop
