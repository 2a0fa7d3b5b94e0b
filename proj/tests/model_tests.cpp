#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "lop/border.hpp"
#include "lop/errors.hpp"
#include "lop/model.hpp"
#include "lop/rng.hpp"
#include "lop/solution.hpp"
#include "lop/verify.hpp"

using namespace lop;

namespace {

ProblemInstance unit_instance(int n) {
    std::vector<CircleSpec> circles;
    for (int id = 1; id <= n; ++id) circles.push_back({id, 1.0, 1.0});
    return ProblemInstance(std::move(circles));
}

// The four-circle rhombus of unit circles: contact ring 1-3-2-4.
Layout rhombus_layout() {
    Layout layout;
    layout.place(1, {0, 0});
    layout.place(2, {2, 0});
    layout.place(3, {1, std::sqrt(3.0)});
    layout.place(4, {1, -std::sqrt(3.0)});
    return layout;
}

}  // namespace

TEST_CASE("instance validation") {
    CHECK_THROWS_AS(ProblemInstance({{1, 1.0, 1.0}, {1, 2.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(ProblemInstance({{1, 0.0, 1.0}}), ValidationError);
    CHECK_THROWS_AS(ProblemInstance({{1, 1.0, -2.0}}), ValidationError);
    CHECK_THROWS_AS(ProblemInstance({{1, 1.0, 1.0}}, 1.5, 0.5), ValidationError);
    const ProblemInstance ok({{1, 1.0, 2.0}, {2, 3.0, 4.0}});
    CHECK(ok.n() == 2);
    CHECK(ok.radius_of(2) == 3.0);
    CHECK_THROWS_AS(ok.circle(9), MissingCircle);
}

TEST_CASE("center of mass") {
    const auto inst = unit_instance(2);
    Layout layout;
    layout.place(1, {0, 0});
    layout.place(2, {2, 0});
    const auto agg = center_of_mass(layout, inst);
    CHECK(agg.cm.x == doctest::Approx(1.0));
    CHECK(agg.cm.y == doctest::Approx(0.0));
    CHECK(agg.total_mass == doctest::Approx(2.0));

    const ProblemInstance weighted({{1, 1.0, 1.0}, {2, 1.0, 3.0}});
    Layout wl;
    wl.place(1, {0, 0});
    wl.place(2, {4, 0});
    CHECK(center_of_mass(wl, weighted).cm.x == doctest::Approx(3.0));

    CHECK_THROWS_AS(center_of_mass(Layout{}, inst), EmptyLayout);
}

TEST_CASE("imbalance about the center of mass vanishes") {
    Rng rng(19);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(9));
        std::vector<CircleSpec> circles;
        Layout layout;
        double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
        for (int id = 1; id <= n; ++id) {
            circles.push_back({id, rng.uniform(0.5, 3.0), rng.uniform(0.5, 9.0)});
            const Point p{rng.uniform(-50.0, 50.0), rng.uniform(-50.0, 50.0)};
            layout.place(id, p);
            min_x = std::min(min_x, p.x);
            max_x = std::max(max_x, p.x);
            min_y = std::min(min_y, p.y);
            max_y = std::max(max_y, p.y);
        }
        const ProblemInstance inst(circles);
        const auto agg = center_of_mass(layout, inst);
        const double diameter = std::hypot(max_x - min_x, max_y - min_y);
        CHECK(imbalance_f2(layout, agg.cm, inst, 1.0) <=
              1e-9 * agg.total_mass * (diameter > 0 ? diameter : 1.0));
    }
}

TEST_CASE("imbalance formula and omega scaling") {
    const ProblemInstance inst({{1, 1.0, 2.0}});
    Layout layout;
    layout.place(1, {1, 0});
    CHECK(imbalance_f2(layout, {0, 0}, inst, 1.0) == doctest::Approx(2.0));

    Rng rng(23);
    const auto multi = unit_instance(5);
    Layout ml;
    for (int id = 1; id <= 5; ++id) {
        ml.place(id, {rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0)});
    }
    const double f2_1 = imbalance_f2(ml, {0.25, -0.5}, multi, 1.0);
    const double f2_2 = imbalance_f2(ml, {0.25, -0.5}, multi, 2.0);
    CHECK(f2_2 == doctest::Approx(4.0 * f2_1).epsilon(1e-12));
}

TEST_CASE("envelopment radius and tie-break") {
    const ProblemInstance single({{7, 5.0, 1.0}});
    Layout one;
    one.place(7, {0, 0});
    const auto env1 = envelopment_radius(one, {0, 0}, single);
    CHECK(env1.radius == doctest::Approx(5.0));
    CHECK(env1.k_max == 7);

    const auto inst = unit_instance(4);
    Layout layout = rhombus_layout();
    const auto env = envelopment_radius(layout, {1, 0}, inst);
    CHECK(env.radius == doctest::Approx(1.0 + std::sqrt(3.0)).epsilon(1e-12));
    CHECK(env.k_max == 3);  // ties resolve to the smaller id

    // Growing the layout never shrinks the radius about a fixed center.
    const auto inst5 = unit_instance(5);
    layout.place(5, {4, 0});
    CHECK(envelopment_radius(layout, {1, 0}, inst5).radius >= env.radius);
}

TEST_CASE("objective") {
    CHECK(objective(10, 0, 0.5, 0.5) == doctest::Approx(5.0));
    CHECK(objective(0, 0, 0.3, 0.7) == 0.0);
    CHECK(objective(31.919, 0, 0.4, 0.6) == doctest::Approx(0.4 * 31.919));
}

TEST_CASE("border insert without removal") {
    const Border c({1, 3, 2, 4});
    const Border out = c.inserted(5, 0, 1);
    CHECK(out.canonical() == std::vector<int>{1, 5, 3, 2, 4});
}

TEST_CASE("border insert with span removal") {
    const Border c({1, 2, 3, 4, 5, 6});
    const Border out = c.inserted(7, 0, 2);  // spans a->c, drops b
    CHECK(out.canonical() == std::vector<int>{1, 7, 3, 4, 5, 6});
    CHECK(out.size() == 6);
}

TEST_CASE("border insert across the wrap") {
    const Border c({1, 2, 3, 4});
    const Border out = c.inserted(5, 3, 0);
    CHECK(out.canonical() == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("border insert rejects bad spans and duplicates") {
    const Border c({1, 3, 2, 4});
    CHECK_THROWS_AS(c.inserted(5, 0, 2), InvalidSpan);  // s=2 > (4-2)/2
    CHECK_THROWS_AS(c.inserted(5, 0, 0), InvalidSpan);
    CHECK_THROWS_AS(c.inserted(3, 0, 1), DuplicateId);
}

TEST_CASE("border delete") {
    const Border c({1, 3, 2, 4});
    CHECK(c.erased(2).canonical() == std::vector<int>{1, 3, 4});
    CHECK(c.erased(0).canonical() == std::vector<int>{2, 4, 3});
    CHECK_THROWS_AS(Border({1, 2, 3}).erased(0), TooSmall);
}

TEST_CASE("insert/delete round-trip at s=1") {
    Rng rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t t = 4 + rng.below(8);
        std::vector<int> ring;
        for (std::size_t i = 0; i < t; ++i) ring.push_back(static_cast<int>(i) + 1);
        rng.shuffle(ring.begin(), ring.end());
        const Border c(ring);
        const std::size_t p = rng.below(t);
        const int k = 99;
        const Border with = c.inserted(k, p, p + 1);
        const Border back = with.erased(*with.position_of(k));
        CHECK(back.cyclic_equal(c));
    }
}

TEST_CASE("contact pairs") {
    const Border c({1, 3, 2, 4});
    const auto pairs = c.contact_pairs();
    REQUIRE(pairs.size() == 4);
    CHECK(pairs[0] == std::pair<int, int>{1, 3});
    CHECK(pairs[1] == std::pair<int, int>{3, 2});
    CHECK(pairs[2] == std::pair<int, int>{2, 4});
    CHECK(pairs[3] == std::pair<int, int>{4, 1});

    const Border tri({10, 20, 30});
    CHECK(tri.contact_pairs() ==
          std::vector<std::pair<int, int>>{{10, 20}, {20, 30}, {30, 10}});

    CHECK(c.inserted(5, 0, 1).contact_pairs().size() == 5);
}

TEST_CASE("border invariants hold on the rhombus") {
    const auto inst = unit_instance(4);
    const Layout layout = rhombus_layout();
    const Border border({1, 3, 2, 4});
    CHECK(border_violations(border, layout, inst).empty());
}

TEST_CASE("border invariants flag broken rings") {
    const auto inst = unit_instance(4);
    Layout layout = rhombus_layout();
    layout.remove(2);
    layout.place(2, {10, 0});  // ring pair (3,2) no longer touches
    const Border border({1, 3, 2, 4});
    CHECK_FALSE(border_violations(border, layout, inst).empty());
}

TEST_CASE("verify_solution flags overlaps") {
    const auto inst = unit_instance(2);
    Solution s;
    s.positions = {{1, {0, 0}}, {2, {1, 0}}};
    s.container_center = {0.5, 0};
    s.radius = 2.0;
    const auto report = verify_solution(inst, s, 1e-6);
    REQUIRE(report.overlaps.size() == 1);
    CHECK(report.overlaps[0].gap == doctest::Approx(-1.0));
    CHECK_FALSE(report.feasible());
}

TEST_CASE("verify_solution accepts a feasible single circle") {
    const ProblemInstance inst({{1, 5.0, 2.0}});
    Solution s;
    s.positions = {{1, {3, 4}}};
    s.container_center = {3, 4};
    s.radius = 5.0;
    const auto report = verify_solution(inst, s, 1e-6);
    CHECK(report.feasible());
    CHECK(report.recomputed_f1 == doctest::Approx(5.0));
    CHECK(report.recomputed_f2 == doctest::Approx(0.0));
}

TEST_CASE("verify_solution flags containment and missing circles") {
    const auto inst = unit_instance(2);
    Solution s;
    s.positions = {{1, {0, 0}}, {2, {4, 0}}};
    s.container_center = {0, 0};
    s.radius = 2.0;  // circle 2 reaches 5
    const auto report = verify_solution(inst, s, 1e-6);
    REQUIRE(report.containment.size() == 1);
    CHECK(report.containment[0].id == 2);
    CHECK(report.containment[0].excess == doctest::Approx(3.0));

    s.positions.erase(2);
    CHECK_THROWS_AS(verify_solution(inst, s, 1e-6), MissingCircle);
}

TEST_CASE("layout placement bookkeeping") {
    Layout layout;
    layout.place(1, {0, 0});
    CHECK_THROWS_AS(layout.place(1, {1, 1}), DuplicateId);
    CHECK_THROWS_AS(layout.at(2), MissingCircle);
    CHECK_THROWS_AS(layout.remove(2), MissingCircle);
    layout.remove(1);
    CHECK(layout.empty());
}
