#include "lop/io.hpp"

#include <algorithm>
#include <string>

#include <json.hpp>

#include "lop/errors.hpp"

namespace lop {

namespace {

using json = nlohmann::ordered_json;

constexpr int kInstanceVersion = 1;
constexpr int kSolutionVersion = 1;

std::size_t line_of_byte(const std::string& text, std::size_t byte) {
    return 1 + static_cast<std::size_t>(
                   std::count(text.begin(),
                              text.begin() + static_cast<std::ptrdiff_t>(
                                                 std::min(byte, text.size())),
                              '\n'));
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError("line " + std::to_string(line_of_byte(text, e.byte)) +
                         ": " + e.what());
    }
}

void expect_format(const json& j, const std::string& format, int version) {
    if (!j.is_object()) throw ParseError("top level must be an object");
    if (!j.contains("format") || j["format"] != format) {
        throw ParseError("expected format \"" + format + "\"");
    }
    if (!j.contains("version") || !j["version"].is_number_integer() ||
        j["version"].get<int>() != version) {
        throw ParseError("unsupported " + format + " version (want " +
                         std::to_string(version) + ")");
    }
}

double number_field(const json& j, const std::string& key) {
    if (!j.contains(key) || !j[key].is_number()) {
        throw ParseError("field \"" + key + "\" missing or not a number");
    }
    return j[key].get<double>();
}

const char* policy_name(PairPolicy p) {
    return p == PairPolicy::SeededRandom ? "seeded-random" : "nearest-cm";
}

PairPolicy policy_from(const std::string& s) {
    if (s == "nearest-cm") return PairPolicy::NearestCenterOfMass;
    if (s == "seeded-random") return PairPolicy::SeededRandom;
    throw ParseError("unknown pair policy \"" + s + "\"");
}

}  // namespace

ProblemInstance parse_instance(const std::string& text) {
    const json j = parse_json(text);
    expect_format(j, "lop-instance", kInstanceVersion);

    if (!j.contains("circles") || !j["circles"].is_array() || j["circles"].empty()) {
        throw ParseError("field \"circles\" missing or empty");
    }
    std::vector<CircleSpec> circles;
    circles.reserve(j["circles"].size());
    for (const auto& c : j["circles"]) {
        if (!c.is_object() || !c.contains("id") || !c["id"].is_number_integer()) {
            throw ParseError("each circle needs an integer \"id\"");
        }
        CircleSpec spec;
        spec.id = c["id"].get<int>();
        spec.radius = number_field(c, "radius");
        spec.mass = number_field(c, "mass");
        circles.push_back(spec);
    }

    const double lambda = j.contains("lambda") ? number_field(j, "lambda") : 0.5;
    const double beta = j.contains("beta") ? number_field(j, "beta") : 0.5;
    const double omega = j.contains("omega") ? number_field(j, "omega") : 1.0;
    const std::string name = j.value("name", std::string{});
    return ProblemInstance(std::move(circles), lambda, beta, omega, name);
}

std::string write_instance(const ProblemInstance& instance) {
    json j;
    j["format"] = "lop-instance";
    j["version"] = kInstanceVersion;
    j["name"] = instance.name();
    j["lambda"] = instance.lambda();
    j["beta"] = instance.beta();
    j["omega"] = instance.omega();
    j["circles"] = json::array();
    for (const CircleSpec& c : instance.circles()) {
        j["circles"].push_back({{"id", c.id}, {"radius", c.radius}, {"mass", c.mass}});
    }
    return j.dump(2) + "\n";
}

std::string write_solution(const SolutionDocument& doc) {
    const Solution& s = doc.solution;
    json j;
    j["format"] = "lop-solution";
    j["version"] = kSolutionVersion;
    j["instance"] = doc.instance_name;
    j["container"] = {{"x", s.container_center.x},
                      {"y", s.container_center.y},
                      {"radius", s.radius}};
    j["placements"] = json::array();
    for (const auto& [id, p] : s.positions) {
        j["placements"].push_back({{"id", id}, {"x", p.x}, {"y", p.y}});
    }
    j["f1"] = s.f1;
    j["f2"] = s.f2;
    j["objective"] = s.objective;
    j["permutation"] = s.permutation;
    j["border"] = s.border_ring;
    j["solver"] = {{"seed", doc.config.seed},
                   {"b", doc.block_b},
                   {"theta", doc.config.theta},
                   {"tolerance", doc.config.tolerance},
                   {"postopt_delta", doc.config.postopt_delta},
                   {"policy", policy_name(doc.config.pair_policy)}};
    j["stats"] = {{"placements_external", s.stats.placements_external},
                  {"placements_internal", s.stats.placements_internal},
                  {"postopt_moves", s.stats.postopt_moves},
                  {"candidate_evals", s.stats.candidate_evals},
                  {"interior_kmax_skips", s.stats.interior_kmax_skips},
                  {"elapsed_seconds", s.stats.elapsed_seconds}};
    return j.dump(2) + "\n";
}

SolutionDocument parse_solution(const std::string& text) {
    const json j = parse_json(text);
    expect_format(j, "lop-solution", kSolutionVersion);

    SolutionDocument doc;
    doc.instance_name = j.value("instance", std::string{});
    Solution& s = doc.solution;

    if (!j.contains("container") || !j["container"].is_object()) {
        throw ParseError("field \"container\" missing");
    }
    s.container_center.x = number_field(j["container"], "x");
    s.container_center.y = number_field(j["container"], "y");
    s.radius = number_field(j["container"], "radius");

    if (!j.contains("placements") || !j["placements"].is_array()) {
        throw ParseError("field \"placements\" missing");
    }
    for (const auto& c : j["placements"]) {
        if (!c.contains("id") || !c["id"].is_number_integer()) {
            throw ParseError("each placement needs an integer \"id\"");
        }
        const int id = c["id"].get<int>();
        if (!s.positions.emplace(id, Point{number_field(c, "x"), number_field(c, "y")})
                 .second) {
            throw ValidationError("placement id " + std::to_string(id) + " repeats");
        }
    }

    s.f1 = number_field(j, "f1");
    s.f2 = number_field(j, "f2");
    s.objective = number_field(j, "objective");
    if (j.contains("permutation")) s.permutation = j["permutation"].get<std::vector<int>>();
    if (j.contains("border")) s.border_ring = j["border"].get<std::vector<int>>();

    if (j.contains("solver") && j["solver"].is_object()) {
        const auto& cfg = j["solver"];
        doc.config.seed = cfg.value("seed", std::uint64_t{0});
        doc.block_b = cfg.value("b", 1);
        doc.config.theta = cfg.value("theta", 0.0);
        doc.config.tolerance = cfg.value("tolerance", kDefaultTolerance);
        doc.config.postopt_delta = cfg.value("postopt_delta", 1e-7);
        doc.config.pair_policy = policy_from(cfg.value("policy", std::string{"nearest-cm"}));
    }
    if (j.contains("stats") && j["stats"].is_object()) {
        const auto& st = j["stats"];
        s.stats.placements_external = st.value("placements_external", std::int64_t{0});
        s.stats.placements_internal = st.value("placements_internal", std::int64_t{0});
        s.stats.postopt_moves = st.value("postopt_moves", std::int64_t{0});
        s.stats.candidate_evals = st.value("candidate_evals", std::int64_t{0});
        s.stats.interior_kmax_skips = st.value("interior_kmax_skips", std::int64_t{0});
        s.stats.elapsed_seconds = st.value("elapsed_seconds", 0.0);
    }
    return doc;
}

}  // namespace lop
