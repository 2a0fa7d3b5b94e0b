#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lop/model.hpp"

namespace lop {

/// Recipe for a seeded random instance: n circles with radii and masses drawn
/// uniformly from the given ranges.
struct InstanceFamily {
    int size = 0;
    std::pair<double, double> radius_range{1.0, 1.0};
    std::pair<double, double> mass_range{1.0, 1.0};
    std::uint64_t seed = 0;
    std::string name;
};

/// Deterministic per seed, on every platform (the draws avoid
/// implementation-defined distributions). Ids run 1..n.
ProblemInstance generate_instance(const InstanceFamily& family);

/// Frozen-seed benchmark families, one per published instance size
/// (7, 10, 15, ..., 55), with the published radius and mass ranges.
std::vector<InstanceFamily> reference_families();

/// The family for one reference size; throws ValidationError for sizes
/// without a reference entry.
InstanceFamily reference_family(int size);

}  // namespace lop
