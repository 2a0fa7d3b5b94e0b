#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "lop/errors.hpp"
#include "lop/permutation.hpp"

using namespace lop;

namespace {

ProblemInstance distinct_radius_instance(int n) {
    std::vector<CircleSpec> circles;
    for (int id = 1; id <= n; ++id) {
        circles.push_back({id, 10.0 + n - id, 1.0});  // id 1 is the largest
    }
    return ProblemInstance(std::move(circles));
}

bool is_permutation_of_ids(const std::vector<int>& perm, int n) {
    std::vector<int> sorted = perm;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n; ++i) {
        if (sorted[static_cast<std::size_t>(i)] != i + 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("descending order") {
    const std::vector<CircleSpec> circles{{1, 5, 1}, {2, 9, 1}, {3, 7, 1}};
    CHECK(descending_order(circles) == std::vector<int>{2, 3, 1});

    const std::vector<CircleSpec> tied{{3, 4, 1}, {1, 4, 1}, {2, 4, 1}};
    CHECK(descending_order(tied) == std::vector<int>{1, 2, 3});

    const std::vector<CircleSpec> single{{9, 2, 1}};
    CHECK(descending_order(single) == std::vector<int>{9});
}

TEST_CASE("space size formula") {
    CHECK(permutation_space_size(7, 7) == 1);
    CHECK(permutation_space_size(7, 1) == 5040);
    CHECK(permutation_space_size(12, 5) == 64);  // (2!)^5 * 2!
    CHECK(permutation_space_size(8, 2) == 576);  // (4!)^2
    CHECK(permutation_space_size(10, 3) == 216);  // (3!)^3 * 1!
    CHECK_THROWS_AS(permutation_space_size(5, 0), ValidationError);
    CHECK_THROWS_AS(permutation_space_size(5, 6), ValidationError);
}

TEST_CASE("enumeration matches the count formula for small n") {
    for (int n = 4; n <= 8; ++n) {
        const auto inst = distinct_radius_instance(n);
        for (int b = 1; b <= n; ++b) {
            const auto scheme = make_scheme(inst, b, 0);
            const auto all = enumerate_block_permutations(scheme);
            CHECK(all.size() == permutation_space_size(n, b));
            std::set<std::vector<int>> distinct(all.begin(), all.end());
            CHECK(distinct.size() == all.size());
        }
    }
}

TEST_CASE("b = n reproduces only the base order") {
    const auto inst = distinct_radius_instance(6);
    const auto scheme = make_scheme(inst, 6, 42);
    const auto samples = sample_permutations(scheme, 1);
    REQUIRE(samples.size() == 1);
    CHECK(samples[0] == scheme.base);
    CHECK_THROWS_AS(sample_permutations(scheme, 2), CountExceedsSpace);
    // With replacement the single order may repeat.
    const auto repeated = sample_permutations(scheme, 3, true);
    CHECK(repeated.size() == 3);
    CHECK(repeated[1] == scheme.base);
}

TEST_CASE("exhaustive sweep at n=7 b=1") {
    const auto inst = distinct_radius_instance(7);
    const auto scheme = make_scheme(inst, 1, 9);
    const auto samples = sample_permutations(scheme, 5040);
    CHECK(samples.size() == 5040);
    std::set<std::vector<int>> distinct(samples.begin(), samples.end());
    CHECK(distinct.size() == 5040);
    for (const auto& p : samples) CHECK(is_permutation_of_ids(p, 7));
}

TEST_CASE("samples shuffle only within blocks") {
    const auto inst = distinct_radius_instance(11);
    const auto scheme = make_scheme(inst, 3, 17);  // ell = 3, tail of 2
    REQUIRE(scheme.block_size_ell == 3);
    const auto samples = sample_permutations(scheme, 20);
    for (const auto& perm : samples) {
        CHECK(is_permutation_of_ids(perm, 11));
        for (int block = 0; block < 3; ++block) {
            const auto lo = static_cast<std::size_t>(block) * 3;
            std::vector<int> got(perm.begin() + static_cast<std::ptrdiff_t>(lo),
                                 perm.begin() + static_cast<std::ptrdiff_t>(lo + 3));
            std::vector<int> want(
                scheme.base.begin() + static_cast<std::ptrdiff_t>(lo),
                scheme.base.begin() + static_cast<std::ptrdiff_t>(lo + 3));
            std::sort(got.begin(), got.end());
            std::sort(want.begin(), want.end());
            CHECK(got == want);  // the block keeps its id multiset
        }
        std::vector<int> tail_got(perm.begin() + 9, perm.end());
        std::vector<int> tail_want(scheme.base.begin() + 9, scheme.base.end());
        std::sort(tail_got.begin(), tail_got.end());
        std::sort(tail_want.begin(), tail_want.end());
        CHECK(tail_got == tail_want);
    }
}

TEST_CASE("sampling is seed deterministic") {
    const auto inst = distinct_radius_instance(12);
    const auto a = sample_permutations(make_scheme(inst, 5, 21), 30);
    const auto b = sample_permutations(make_scheme(inst, 5, 21), 30);
    CHECK(a == b);
    const auto c = sample_permutations(make_scheme(inst, 5, 22), 30);
    CHECK(a != c);
}

TEST_CASE("rejection path for spaces too large to enumerate") {
    const auto inst = distinct_radius_instance(14);
    const auto scheme = make_scheme(inst, 2, 31);  // (7!)^2 = 25401600 orders
    CHECK(permutation_space_size(14, 2) == 25401600ULL);
    const auto samples = sample_permutations(scheme, 200);
    CHECK(samples.size() == 200);
    std::set<std::vector<int>> distinct(samples.begin(), samples.end());
    CHECK(distinct.size() == 200);  // without replacement
    for (const auto& p : samples) CHECK(is_permutation_of_ids(p, 14));
    CHECK(samples == sample_permutations(make_scheme(inst, 2, 31), 200));
}
