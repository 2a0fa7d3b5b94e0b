#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lop/model.hpp"

namespace lop {

/// Block-shuffle family over the descending-radius base order: the first
/// b*ell positions split into b blocks of ell = floor(n/b), each shuffled
/// within itself, plus a shuffled tail of n - b*ell elements.
struct PermutationScheme {
    std::vector<int> base;  // ids in descending radius, ties by ascending id
    int block_param_b = 1;
    int block_size_ell = 0;  // floor(n / b)
    std::uint64_t seed = 0;
};

/// Ids sorted by radius descending, ties by ascending id.
std::vector<int> descending_order(std::span<const CircleSpec> circles);

PermutationScheme make_scheme(const ProblemInstance& instance, int b,
                              std::uint64_t seed);

/// Number of distinct orders the scheme can produce:
/// (ell!)^b * (n - b*ell)!. Saturates at uint64 max for spaces too large to
/// matter for sampling comparisons.
std::uint64_t permutation_space_size(int n, int b);

/// All distinct orders of the scheme, in lexicographic block order. Only
/// valid for spaces small enough to hold in memory; used when exhaustive
/// sweeps are requested.
std::vector<std::vector<int>> enumerate_block_permutations(const PermutationScheme& scheme);

/// `count` seeded samples. Without replacement (the default) the samples are
/// distinct: small spaces are enumerated and subsampled, large ones drawn by
/// rejection. Throws CountExceedsSpace when count exceeds the space and
/// replacement was not allowed.
std::vector<std::vector<int>> sample_permutations(const PermutationScheme& scheme,
                                                  std::size_t count,
                                                  bool allow_replacement = false);

}  // namespace lop
