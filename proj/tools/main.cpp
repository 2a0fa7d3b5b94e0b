#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lop/batch.hpp"
#include "lop/errors.hpp"
#include "lop/generator.hpp"
#include "lop/io.hpp"
#include "lop/permutation.hpp"
#include "lop/solver.hpp"
#include "lop/svg.hpp"
#include "lop/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;  // also verification findings
constexpr int kExitParse = 2;       // malformed files or usage
constexpr int kExitSolver = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw lop::ParseError("cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw lop::ParseError("cannot write " + path);
    out << content;
}

unsigned default_parallelism() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? hw : 1;
}

struct SolverFlags {
    double theta = 0.0;
    double tolerance = lop::kDefaultTolerance;
    double postopt_delta = 1e-7;
    std::string policy = "nearest-cm";
    std::uint64_t seed = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--theta", theta, "Seed-pair angle in radians");
        cmd->add_option("--tolerance", tolerance, "Geometric tolerance");
        cmd->add_option("--postopt-delta", postopt_delta,
                        "Relative radius gain required to keep a repositioning");
        cmd->add_option("--policy", policy, "Pair selection policy")
            ->check(CLI::IsMember({"nearest-cm", "seeded-random"}));
        cmd->add_option("--seed", seed, "Seed for sampling and random pair picks");
    }

    lop::SolverConfig to_config() const {
        lop::SolverConfig config;
        config.theta = theta;
        config.tolerance = tolerance;
        config.postopt_delta = postopt_delta;
        config.pair_policy = policy == "seeded-random"
                                 ? lop::PairPolicy::SeededRandom
                                 : lop::PairPolicy::NearestCenterOfMass;
        config.seed = seed;
        return config;
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Balanced circle packing: place unequal circles in a minimal "
                 "rotating container with zero imbalance"};
    app.require_subcommand(1);

    // generate
    auto* generate = app.add_subcommand("generate", "Write a seeded instance file");
    int gen_size = 0;
    double r_min = 0, r_max = 0, m_min = 0, m_max = 0;
    std::uint64_t gen_seed = 0;
    bool gen_seed_given = false;
    bool use_reference = false;
    std::string gen_name;
    std::string gen_out;
    generate->add_option("--size", gen_size, "Number of circles")->required();
    generate->add_flag("--reference", use_reference,
                       "Use the frozen benchmark ranges and seed for this size");
    generate->add_option("--radius-min", r_min, "Smallest radius");
    generate->add_option("--radius-max", r_max, "Largest radius");
    generate->add_option("--mass-min", m_min, "Smallest mass");
    generate->add_option("--mass-max", m_max, "Largest mass");
    generate->add_option("--seed", gen_seed, "Generator seed")
        ->each([&](const std::string&) { gen_seed_given = true; });
    generate->add_option("--name", gen_name, "Instance label");
    generate->add_option("-o,--out", gen_out, "Output instance file")->required();

    // solve
    auto* solve_cmd = app.add_subcommand("solve", "Solve one placement order");
    std::string solve_in, solve_out, solve_perm;
    SolverFlags solve_flags;
    solve_cmd->add_option("-i,--instance", solve_in, "Instance file")->required();
    solve_cmd->add_option("-o,--out", solve_out, "Output solution file")->required();
    solve_cmd->add_option("--permutation", solve_perm,
                          "Comma-separated circle ids (default: radii descending)");
    solve_flags.attach(solve_cmd);

    // batch
    auto* batch_cmd = app.add_subcommand(
        "batch", "Sample many placement orders and keep the best solution");
    std::string batch_in, batch_out;
    std::size_t runs = 5040;
    int block_b = 0;
    unsigned parallelism = default_parallelism();
    bool allow_replacement = false;
    SolverFlags batch_flags;
    batch_cmd->add_option("-i,--instance", batch_in, "Instance file")->required();
    batch_cmd->add_option("-o,--out", batch_out, "Output solution file (best run)");
    batch_cmd->add_option("--runs", runs, "Number of solver executions");
    batch_cmd->add_option("--b", block_b,
                          "Block parameter (default 5 for n >= 10, else 1)");
    batch_cmd->add_option("--parallelism", parallelism, "Worker threads");
    batch_cmd->add_flag("--allow-replacement", allow_replacement,
                        "Permit repeated orders when runs exceed the space");
    batch_flags.attach(batch_cmd);

    // verify
    auto* verify_cmd =
        app.add_subcommand("verify", "Re-check a solution file against its instance");
    std::string verify_inst, verify_sol;
    double verify_tol = 1e-6;
    verify_cmd->add_option("-i,--instance", verify_inst, "Instance file")->required();
    verify_cmd->add_option("-s,--solution", verify_sol, "Solution file")->required();
    verify_cmd->add_option("--tol", verify_tol, "Absolute gap tolerance");

    // render
    auto* render_cmd = app.add_subcommand("render", "Draw a solution as SVG");
    std::string render_inst, render_sol, render_out;
    bool border_overlay = false;
    render_cmd->add_option("-i,--instance", render_inst, "Instance file")->required();
    render_cmd->add_option("-s,--solution", render_sol, "Solution file")->required();
    render_cmd->add_option("-o,--out", render_out, "Output SVG file")->required();
    render_cmd->add_flag("--border", border_overlay, "Overlay the final ring edges");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    if (generate->parsed()) {
        lop::InstanceFamily family;
        if (use_reference) {
            family = lop::reference_family(gen_size);
            if (gen_seed_given) family.seed = gen_seed;
        } else {
            if (r_max <= 0 || m_max <= 0) {
                std::cerr << "generate: give --reference or all of --radius-min/max "
                             "--mass-min/max\n";
                return kExitParse;
            }
            family = {gen_size, {r_min, r_max}, {m_min, m_max}, gen_seed, gen_name};
        }
        if (!gen_name.empty()) family.name = gen_name;
        const auto inst = lop::generate_instance(family);
        write_file(gen_out, lop::write_instance(inst));
        std::cout << "wrote " << gen_out << " (" << inst.n() << " circles)\n";
        return kExitOk;
    }

    if (solve_cmd->parsed()) {
        const auto inst = lop::parse_instance(read_file(solve_in));
        std::vector<int> perm;
        int echo_b;
        if (solve_perm.empty()) {
            perm = lop::descending_order(inst.circles());
            echo_b = static_cast<int>(inst.n());  // the base order is the b=n family
        } else {
            std::stringstream ss(solve_perm);
            for (std::string tok; std::getline(ss, tok, ',');) {
                perm.push_back(std::stoi(tok));
            }
            echo_b = 0;
        }
        const auto config = solve_flags.to_config();
        const lop::Solution solution = lop::solve(inst, perm, config);
        write_file(solve_out,
                   lop::write_solution({inst.name(), solution, config, echo_b}));
        std::cout << "f1 " << solution.f1 << "  f2 " << solution.f2 << "  objective "
                  << solution.objective << "  (" << solution.stats.elapsed_seconds
                  << "s)\n";
        return kExitOk;
    }

    if (batch_cmd->parsed()) {
        const auto inst = lop::parse_instance(read_file(batch_in));
        if (block_b == 0) block_b = inst.n() >= 10 ? 5 : 1;
        const auto config = batch_flags.to_config();
        const auto scheme = lop::make_scheme(inst, block_b, config.seed);
        const auto report =
            lop::run_batch(inst, scheme, runs, parallelism, config, allow_replacement);
        std::cout << lop::summarize(std::vector<lop::BatchReport>{report});
        std::cout << "best run " << report.best_index << ", mean f1 " << report.mean_f1
                  << ", time to best " << report.time_to_best_seconds << "s of "
                  << report.total_elapsed_seconds << "s\n";
        if (!batch_out.empty()) {
            write_file(batch_out, lop::write_solution(
                                      {inst.name(), report.best, config, block_b}));
            std::cout << "wrote " << batch_out << "\n";
        }
        return kExitOk;
    }

    if (verify_cmd->parsed()) {
        const auto inst = lop::parse_instance(read_file(verify_inst));
        const auto doc = lop::parse_solution(read_file(verify_sol));
        const auto report = lop::verify_solution(inst, doc.solution, verify_tol);
        std::cout << report.to_string() << "\n";
        if (!report.feasible()) return kExitValidation;
        // The stored objective must match the recomputation.
        if (std::abs(report.recomputed_f1 - doc.solution.f1) >
            verify_tol * (1.0 + doc.solution.f1)) {
            std::cout << "stored f1 " << doc.solution.f1
                      << " disagrees with recomputed " << report.recomputed_f1 << "\n";
            return kExitValidation;
        }
        return kExitOk;
    }

    if (render_cmd->parsed()) {
        const auto inst = lop::parse_instance(read_file(render_inst));
        const auto doc = lop::parse_solution(read_file(render_sol));
        write_file(render_out, lop::render_svg(doc.solution, inst, border_overlay));
        std::cout << "wrote " << render_out << "\n";
        return kExitOk;
    }
    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const lop::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const lop::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const lop::Error& e) {
        std::cerr << "solver error: " << e.what() << "\n";
        return kExitSolver;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSolver;
    }
}
