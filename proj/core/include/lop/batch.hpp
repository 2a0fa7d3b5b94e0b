#pragma once

#include <span>
#include <string>
#include <vector>

#include "lop/permutation.hpp"
#include "lop/solution.hpp"
#include "lop/solver.hpp"

namespace lop {

struct RunRecord {
    std::size_t index = 0;
    bool ok = false;
    double f1 = 0.0;
    double f2 = 0.0;
    double elapsed_seconds = 0.0;
    std::string error;  // set when the run failed
};

struct BatchReport {
    std::string instance_name;
    std::size_t instance_size = 0;
    Solution best;
    std::size_t best_index = 0;
    std::size_t runs = 0;
    std::size_t failures = 0;
    std::vector<RunRecord> per_run;
    double min_f1 = 0.0;
    double mean_f1 = 0.0;            // over successful runs
    double total_elapsed_seconds = 0.0;   // sum of per-run solve times
    double time_to_best_seconds = 0.0;    // per-run time summed through the best run
};

/// Samples num_runs placement orders from the scheme, solves each one
/// independently, and keeps the best by f1 (ties to the lowest run index).
/// Runs are distributed over `parallelism` worker threads; the reduction is
/// by run index, so the report (timing aside) does not depend on the thread
/// count. Failed runs stay in per_run but never become best; throws
/// AllRunsFailed when nothing succeeds.
BatchReport run_batch(const ProblemInstance& instance, const PermutationScheme& scheme,
                      std::size_t num_runs, unsigned parallelism,
                      const SolverConfig& config, bool allow_replacement = false);

/// One f1/f2/time row per report, ordered by instance size ascending.
std::string summarize(std::span<const BatchReport> reports);

}  // namespace lop
