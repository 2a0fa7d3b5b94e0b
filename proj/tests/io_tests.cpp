#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "lop/errors.hpp"
#include "lop/generator.hpp"
#include "lop/io.hpp"
#include "lop/permutation.hpp"
#include "lop/svg.hpp"
#include "lop/verify.hpp"

using namespace lop;

namespace {

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
    std::size_t count = 0;
    for (std::size_t pos = text.find(needle); pos != std::string::npos;
         pos = text.find(needle, pos + needle.size())) {
        ++count;
    }
    return count;
}

SolutionDocument solved_document(int size, int b) {
    const auto inst = generate_instance(reference_family(size));
    const auto perm = sample_permutations(make_scheme(inst, b, 5), 1)[0];
    SolutionDocument doc;
    doc.instance_name = inst.name();
    doc.solution = solve(inst, perm, SolverConfig{});
    doc.block_b = b;
    return doc;
}

}  // namespace

TEST_CASE("minimal instance file parses with defaults") {
    const std::string text = R"({
      "format": "lop-instance",
      "version": 1,
      "circles": [
        {"id": 1, "radius": 1.0, "mass": 1.0},
        {"id": 2, "radius": 1.0, "mass": 1.0},
        {"id": 3, "radius": 1.0, "mass": 1.0},
        {"id": 4, "radius": 1.0, "mass": 1.0}
      ]
    })";
    const auto inst = parse_instance(text);
    CHECK(inst.n() == 4);
    CHECK(inst.lambda() == 0.5);
    CHECK(inst.beta() == 0.5);
    CHECK(inst.omega() == 1.0);
}

TEST_CASE("instance parse failures carry diagnostics") {
    CHECK_THROWS_AS(parse_instance("{ not json"), ParseError);
    try {
        parse_instance("{\n\"format\": \"lop-instance\",\n\"version\": 1,\nbad\n}");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("line") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_instance(R"({"format":"other","version":1})"), ParseError);
    CHECK_THROWS_AS(
        parse_instance(R"({"format":"lop-instance","version":2,"circles":[]})"),
        ParseError);

    const std::string dup = R"({
      "format": "lop-instance", "version": 1,
      "circles": [{"id": 1, "radius": 1, "mass": 1}, {"id": 1, "radius": 2, "mass": 1}]
    })";
    CHECK_THROWS_AS(parse_instance(dup), ValidationError);

    const std::string zero_radius = R"({
      "format": "lop-instance", "version": 1,
      "circles": [{"id": 1, "radius": 0, "mass": 1}]
    })";
    CHECK_THROWS_AS(parse_instance(zero_radius), ValidationError);
}

TEST_CASE("instance write/parse round-trip preserves exact values") {
    const auto inst = generate_instance(reference_family(10));
    const auto again = parse_instance(write_instance(inst));
    REQUIRE(again.n() == inst.n());
    for (std::size_t i = 0; i < inst.n(); ++i) {
        CHECK(again.circles()[i].id == inst.circles()[i].id);
        CHECK(again.circles()[i].radius == inst.circles()[i].radius);
        CHECK(again.circles()[i].mass == inst.circles()[i].mass);
    }
    CHECK(write_instance(again) == write_instance(inst));
}

TEST_CASE("solution file round-trips losslessly") {
    const auto doc = solved_document(7, 1);
    const std::string text = write_solution(doc);
    const auto parsed = parse_solution(text);

    CHECK(parsed.instance_name == doc.instance_name);
    CHECK(same_solution(parsed.solution, doc.solution));
    CHECK(parsed.solution.stats.elapsed_seconds == doc.solution.stats.elapsed_seconds);
    CHECK(write_solution(parsed) == text);

    // A reloaded solution still verifies against its instance.
    const auto inst = generate_instance(reference_family(7));
    CHECK(verify_solution(inst, parsed.solution, 1e-6).feasible());
}

TEST_CASE("solution parser rejects foreign documents") {
    CHECK_THROWS_AS(parse_solution(R"({"format":"lop-solution","version":9})"),
                    ParseError);
    CHECK_THROWS_AS(parse_solution(R"({"format":"lop-instance","version":1})"),
                    ParseError);
    CHECK_THROWS_AS(parse_solution("[1,2,3]"), ParseError);
}

TEST_CASE("svg output contains one circle per placement plus the container") {
    const auto inst = generate_instance(reference_family(7));
    const auto perm = sample_permutations(make_scheme(inst, 1, 5), 1)[0];
    Solution s = solve(inst, perm, SolverConfig{});

    const std::string svg = render_svg(s, inst, false);
    CHECK(count_occurrences(svg, "<circle") == inst.n() + 1);
    CHECK(count_occurrences(svg, "<line") == 0);
    CHECK(count_occurrences(svg, "<text") == inst.n());

    const std::string overlay = render_svg(s, inst, true);
    CHECK(count_occurrences(overlay, "<line") == s.border_ring.size());
}

TEST_CASE("tampered solutions fail verification after reload") {
    auto doc = solved_document(7, 1);
    const auto inst = generate_instance(reference_family(7));

    auto moved = doc.solution.positions.begin();
    const auto second = std::next(moved);
    moved->second = second->second;  // force an exact overlap
    const std::string text = write_solution(doc);
    const auto parsed = parse_solution(text);
    CHECK_FALSE(verify_solution(inst, parsed.solution, 1e-6).feasible());
}
