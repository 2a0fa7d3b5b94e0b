#include "lop/permutation.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <string>

#include "lop/errors.hpp"
#include "lop/rng.hpp"

namespace lop {

namespace {

constexpr std::uint64_t kU64Max = std::numeric_limits<std::uint64_t>::max();

// Spaces small enough to enumerate outright when sampling without
// replacement; beyond this, rejection sampling.
constexpr std::uint64_t kEnumerateLimit = 1'000'000;

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || b == 0) return 0;
    if (a > kU64Max / b) return kU64Max;
    return a * b;
}

std::uint64_t sat_factorial(std::uint64_t m) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 2; i <= m; ++i) r = sat_mul(r, i);
    return r;
}

std::uint64_t sat_pow(std::uint64_t x, std::uint64_t e) {
    std::uint64_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = sat_mul(r, x);
    return r;
}

/// Segment boundaries [begin, end) of the b blocks plus the tail.
std::vector<std::pair<std::size_t, std::size_t>> segments(std::size_t n, int b,
                                                          int ell) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const auto bl = static_cast<std::size_t>(b) * static_cast<std::size_t>(ell);
    for (int i = 0; i < b; ++i) {
        const auto lo = static_cast<std::size_t>(i) * static_cast<std::size_t>(ell);
        out.emplace_back(lo, lo + static_cast<std::size_t>(ell));
    }
    if (bl < n) out.emplace_back(bl, n);
    return out;
}

}  // namespace

std::vector<int> descending_order(std::span<const CircleSpec> circles) {
    if (circles.empty()) throw EmptySet("descending_order: no circles");
    std::vector<const CircleSpec*> refs;
    refs.reserve(circles.size());
    for (const CircleSpec& c : circles) refs.push_back(&c);
    std::sort(refs.begin(), refs.end(), [](const CircleSpec* a, const CircleSpec* b) {
        if (a->radius != b->radius) return a->radius > b->radius;
        return a->id < b->id;
    });
    std::vector<int> out;
    out.reserve(refs.size());
    for (const CircleSpec* c : refs) out.push_back(c->id);
    return out;
}

PermutationScheme make_scheme(const ProblemInstance& instance, int b,
                              std::uint64_t seed) {
    const int n = static_cast<int>(instance.n());
    if (b < 1 || b > n) {
        throw ValidationError("scheme: b must lie in [1, n], got " + std::to_string(b));
    }
    PermutationScheme s;
    s.base = descending_order(instance.circles());
    s.block_param_b = b;
    s.block_size_ell = n / b;
    s.seed = seed;
    return s;
}

std::uint64_t permutation_space_size(int n, int b) {
    if (n < 1 || b < 1 || b > n) {
        throw ValidationError("space size: need 1 <= b <= n");
    }
    const int ell = n / b;
    const std::uint64_t per_block = sat_factorial(static_cast<std::uint64_t>(ell));
    const std::uint64_t blocks = sat_pow(per_block, static_cast<std::uint64_t>(b));
    const std::uint64_t tail =
        sat_factorial(static_cast<std::uint64_t>(n - b * ell));
    return sat_mul(blocks, tail);
}

std::vector<std::vector<int>> enumerate_block_permutations(
    const PermutationScheme& scheme) {
    const std::size_t n = scheme.base.size();
    const std::uint64_t size =
        permutation_space_size(static_cast<int>(n), scheme.block_param_b);
    if (size > kEnumerateLimit) {
        throw Error("enumerate: space of " + std::to_string(size) +
                    " orders is too large to materialize");
    }

    const auto segs = segments(n, scheme.block_param_b, scheme.block_size_ell);

    // Every ordering of each segment, lexicographic over ids.
    std::vector<std::vector<std::vector<int>>> per_segment;
    per_segment.reserve(segs.size());
    for (const auto& [lo, hi] : segs) {
        std::vector<int> seg(scheme.base.begin() + static_cast<std::ptrdiff_t>(lo),
                             scheme.base.begin() + static_cast<std::ptrdiff_t>(hi));
        std::sort(seg.begin(), seg.end());
        std::vector<std::vector<int>> orders;
        do {
            orders.push_back(seg);
        } while (std::next_permutation(seg.begin(), seg.end()));
        per_segment.push_back(std::move(orders));
    }

    std::vector<std::vector<int>> out;
    out.reserve(static_cast<std::size_t>(size));
    std::vector<std::size_t> odo(per_segment.size(), 0);
    for (;;) {
        std::vector<int> perm;
        perm.reserve(n);
        for (std::size_t s = 0; s < per_segment.size(); ++s) {
            const auto& seg = per_segment[s][odo[s]];
            perm.insert(perm.end(), seg.begin(), seg.end());
        }
        out.push_back(std::move(perm));

        std::size_t s = per_segment.size();
        while (s > 0) {
            --s;
            if (++odo[s] < per_segment[s].size()) break;
            odo[s] = 0;
            if (s == 0) return out;
        }
    }
}

std::vector<std::vector<int>> sample_permutations(const PermutationScheme& scheme,
                                                  std::size_t count,
                                                  bool allow_replacement) {
    if (count < 1) throw ValidationError("sample: count must be >= 1");
    const std::size_t n = scheme.base.size();
    const std::uint64_t size =
        permutation_space_size(static_cast<int>(n), scheme.block_param_b);
    if (!allow_replacement && count > size) {
        throw CountExceedsSpace("sample: " + std::to_string(count) +
                                " distinct orders requested from a space of " +
                                std::to_string(size));
    }

    Rng rng(scheme.seed);

    if (!allow_replacement && size <= kEnumerateLimit) {
        auto all = enumerate_block_permutations(scheme);
        if (count == all.size()) return all;
        // Partial Fisher-Yates: the first `count` slots become the sample.
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t j =
                i + static_cast<std::size_t>(rng.below(all.size() - i));
            std::swap(all[i], all[j]);
        }
        all.resize(count);
        return all;
    }

    const auto segs = segments(n, scheme.block_param_b, scheme.block_size_ell);
    std::vector<std::vector<int>> out;
    out.reserve(count);
    std::set<std::vector<int>> seen;
    while (out.size() < count) {
        std::vector<int> perm = scheme.base;
        for (const auto& [lo, hi] : segs) {
            rng.shuffle(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                        perm.begin() + static_cast<std::ptrdiff_t>(hi));
        }
        if (allow_replacement || seen.insert(perm).second) {
            out.push_back(std::move(perm));
        }
    }
    return out;
}

}  // namespace lop
