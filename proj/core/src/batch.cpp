#include "lop/batch.hpp"

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <optional>
#include <sstream>
#include <thread>

#include "lop/errors.hpp"

namespace lop {

BatchReport run_batch(const ProblemInstance& instance, const PermutationScheme& scheme,
                      std::size_t num_runs, unsigned parallelism,
                      const SolverConfig& config, bool allow_replacement) {
    if (num_runs < 1) throw ValidationError("batch: num_runs must be >= 1");
    if (parallelism < 1) parallelism = 1;

    const auto permutations = sample_permutations(scheme, num_runs, allow_replacement);

    std::vector<std::optional<Solution>> solutions(num_runs);
    std::vector<RunRecord> records(num_runs);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= num_runs) return;
            RunRecord rec;
            rec.index = i;
            try {
                Solution s = solve(instance, permutations[i], config);
                rec.ok = true;
                rec.f1 = s.f1;
                rec.f2 = s.f2;
                rec.elapsed_seconds = s.stats.elapsed_seconds;
                solutions[i] = std::move(s);
            } catch (const Error& e) {
                rec.ok = false;
                rec.error = e.what();
            }
            records[i] = std::move(rec);
        }
    };

    if (parallelism == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(parallelism);
        for (unsigned i = 0; i < parallelism; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Deterministic reduction: fold in run-index order.
    BatchReport report;
    report.instance_name = instance.name();
    report.instance_size = instance.n();
    report.runs = num_runs;
    report.per_run = std::move(records);

    std::size_t successes = 0;
    double sum_f1 = 0.0;
    std::optional<std::size_t> best;
    for (std::size_t i = 0; i < num_runs; ++i) {
        const RunRecord& rec = report.per_run[i];
        report.total_elapsed_seconds += rec.elapsed_seconds;
        if (!rec.ok) {
            ++report.failures;
            continue;
        }
        ++successes;
        sum_f1 += rec.f1;
        if (!best || rec.f1 < report.per_run[*best].f1) best = i;
    }
    if (!best) {
        throw AllRunsFailed("batch: all " + std::to_string(num_runs) +
                            " runs failed; first error: " +
                            (num_runs ? report.per_run[0].error : ""));
    }
    report.best = *solutions[*best];
    report.best_index = *best;
    report.min_f1 = report.per_run[*best].f1;
    report.mean_f1 = sum_f1 / static_cast<double>(successes);
    for (std::size_t i = 0; i <= *best; ++i) {
        report.time_to_best_seconds += report.per_run[i].elapsed_seconds;
    }
    return report;
}

std::string summarize(std::span<const BatchReport> reports) {
    if (reports.empty()) throw EmptySet("summarize: no reports");
    std::vector<const BatchReport*> rows;
    rows.reserve(reports.size());
    for (const BatchReport& r : reports) rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(), [](const auto* a, const auto* b) {
        return a->instance_size < b->instance_size;
    });

    std::ostringstream os;
    os << std::left << std::setw(6) << "size" << std::setw(14) << "f1"
       << std::setw(14) << "f2" << std::setw(12) << "t(sec)" << std::setw(8)
       << "runs" << "failures\n";
    for (const BatchReport* r : rows) {
        os << std::left << std::setw(6) << r->instance_size << std::setw(14)
           << std::setprecision(6) << std::fixed << r->best.f1 << std::setw(14)
           << std::setprecision(3) << std::scientific << r->best.f2
           << std::setw(12) << std::setprecision(2) << std::fixed
           << r->total_elapsed_seconds << std::setw(8) << r->runs << r->failures
           << "\n";
    }
    return os.str();
}

}  // namespace lop
