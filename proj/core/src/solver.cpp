#include "lop/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <deque>
#include <limits>
#include <string>

#include "lop/errors.hpp"
#include "lop/placement.hpp"
#include "lop/rng.hpp"

namespace lop {

namespace {

int quadrant_of(double dx, double dy) {
    if (dx == 0.0 && dy == 0.0) return 0;
    if (dx >= 0.0 && dy > 0.0) return 0;
    if (dx < 0.0 && dy >= 0.0) return 1;
    if (dx <= 0.0 && dy < 0.0) return 2;
    return 3;
}

Point pair_midpoint(const std::pair<int, int>& pr, const Layout& layout) {
    const Point a = layout.at(pr.first);
    const Point b = layout.at(pr.second);
    return Point{(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
}

/// Next pair to attempt from a bucket, by configured policy.
std::size_t select_pair(const std::vector<std::pair<int, int>>& bucket,
                        const Layout& layout, Point origin,
                        const SolverConfig& config, Rng& rng) {
    if (config.pair_policy == PairPolicy::SeededRandom) {
        return static_cast<std::size_t>(rng.below(bucket.size()));
    }
    std::size_t best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < bucket.size(); ++i) {
        const double d = distance(pair_midpoint(bucket[i], layout), origin);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

bool is_consecutive(const Border& border, const std::pair<int, int>& pr) {
    const auto pos = border.position_of(pr.first);
    return pos && border.at(*pos + 1) == pr.second;
}

/// Normalizes a tangency span so the removed arc is the short side
/// (swapping p and q when the opposite side has fewer circles between).
/// Returns false when the result cannot satisfy the ring insert bounds.
bool normalize_span(const Border& border, std::size_t& p, std::size_t& q) {
    const std::size_t t = border.size();
    std::size_t s = border_span(border, p, q);
    if (s == 0) return false;
    if (t - s - 1 < s - 1) {
        std::swap(p, q);
        s = t - s;
    }
    return s >= 1 && s <= (t - 2) / 2;
}

std::vector<CircleSpec> remaining_by_radius(const std::deque<int>& queue,
                                            const ProblemInstance& instance) {
    std::vector<CircleSpec> out;
    out.reserve(queue.size());
    for (int id : queue) out.push_back(instance.circle(id));
    std::sort(out.begin(), out.end(), [](const CircleSpec& a, const CircleSpec& b) {
        if (a.radius != b.radius) return a.radius > b.radius;
        return a.id < b.id;
    });
    return out;
}

void drop_pair(QuadrantPartition& part, const std::pair<int, int>& pr) {
    for (auto& bucket : part.buckets) {
        std::erase_if(bucket, [&](const std::pair<int, int>& q) {
            return (q.first == pr.first && q.second == pr.second) ||
                   (q.first == pr.second && q.second == pr.first);
        });
    }
}

}  // namespace

QuadrantPartition cmpt_partition(const Layout& layout, const Border& border,
                                 const ProblemInstance& circles) {
    if (layout.empty()) throw EmptyLayout("cmpt_partition: no circles placed");
    QuadrantPartition part;
    part.origin = center_of_mass(layout, circles).cm;
    for (const auto& pr : border.contact_pairs()) {
        const Point c = layout.at(pr.first);
        const int h = quadrant_of(c.x - part.origin.x, c.y - part.origin.y);
        part.buckets[static_cast<std::size_t>(h)].push_back(pr);
    }
    return part;
}

ConstructionResult construct_layout(const ProblemInstance& instance,
                                    const std::vector<int>& permutation,
                                    const SolverConfig& config,
                                    const StepObserver& on_step) {
    const std::size_t n = instance.n();
    if (n < 4) {
        throw TooFewCircles("construct_layout: the initial ring needs 4 circles, got " +
                            std::to_string(n));
    }
    {
        std::vector<int> sorted = permutation;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> ids;
        ids.reserve(n);
        for (const CircleSpec& c : instance.circles()) ids.push_back(c.id);
        std::sort(ids.begin(), ids.end());
        if (sorted != ids) {
            throw ValidationError("construct_layout: order is not a permutation of the instance ids");
        }
    }

    std::deque<int> queue(permutation.begin(), permutation.end());
    std::array<CircleSpec, 4> seed{};
    for (auto& spec : seed) {
        spec = instance.circle(queue.front());
        queue.pop_front();
    }

    auto [layout, border] = initial_layout(seed, config.theta, config.tolerance);
    SolveStats stats;
    Rng rng(config.seed);
    if (on_step) on_step(layout, border);

    // One committed inclusion: tangent placement, ring update, bucket
    // bookkeeping, then a pocket-fill attempt. Returns false when the pair
    // cannot host the circle.
    auto try_include = [&](std::size_t p_index, QuadrantPartition* part) -> bool {
        const int k_id = queue.front();
        const CircleSpec& k = instance.circle(k_id);
        ExternalPlacement res;
        try {
            res = external_placement(k, p_index, p_index + 1, layout, border,
                                     instance, config.tolerance,
                                     &stats.candidate_evals);
        } catch (const NoFeasibleTangentPlacement&) {
            return false;
        } catch (const Unsolvable&) {
            return false;
        }

        std::size_t p = res.p_index;
        std::size_t q = res.q_index;
        if (!normalize_span(border, p, q)) return false;
        const std::size_t s = border_span(border, p, q);

        std::vector<int> arc;  // ids from p to q inclusive, before the insert
        arc.reserve(s + 1);
        for (std::size_t i = 0; i <= s; ++i) arc.push_back(border.at(p + i));

        Border next = border.inserted(k_id, p, q);
        if (s > 1) {
            // Circles leaving the ring must stay within the reshaped main
            // area, or the result is no Border at all; reject such spans.
            Polygon reshaped;
            reshaped.vertices.reserve(next.size());
            for (int id : next.ring()) {
                reshaped.vertices.push_back(id == k_id ? res.position
                                                       : layout.at(id));
            }
            if (!is_simple_polygon(reshaped, config.tolerance)) return false;
            for (std::size_t i = 1; i + 1 < arc.size(); ++i) {
                if (classify_point(layout.at(arc[i]), reshaped, config.tolerance) ==
                    Region::Outside) {
                    return false;
                }
            }
        }
        layout.place(k_id, res.position);
        queue.pop_front();
        ++stats.placements_external;
        border = std::move(next);
        if (part) {
            for (std::size_t i = 0; i + 1 < arc.size(); ++i) {
                drop_pair(*part, {arc[i], arc[i + 1]});
            }
        }
        if (on_step) on_step(layout, border);

        if (!queue.empty()) {
            std::vector<int> nbar;
            nbar.reserve(arc.size() + 1);
            nbar.push_back(k_id);
            nbar.insert(nbar.end(), arc.begin(), arc.end());
            const auto remaining = remaining_by_radius(queue, instance);
            const auto fill = internal_placement(nbar, remaining, layout, border,
                                                 instance, config.tolerance,
                                                 &stats.candidate_evals);
            if (fill) {
                layout.place(fill->circle_id, fill->position);
                queue.erase(std::find(queue.begin(), queue.end(), fill->circle_id));
                ++stats.placements_internal;
                if (on_step) on_step(layout, border);
            }
        }
        return true;
    };

    while (!queue.empty()) {
        QuadrantPartition part = cmpt_partition(layout, border, instance);
        bool placed_any = false;

        while (!queue.empty() && part.total_pairs() > 0) {
            for (int h = 0; h < 4 && !queue.empty(); ++h) {
                auto& bucket = part.buckets[static_cast<std::size_t>(h)];
                while (!bucket.empty()) {
                    const std::size_t pick =
                        select_pair(bucket, layout, part.origin, config, rng);
                    const auto pr = bucket[pick];
                    if (!is_consecutive(border, pr)) {  // stale after an insert
                        bucket.erase(bucket.begin() + static_cast<std::ptrdiff_t>(pick));
                        continue;
                    }
                    if (try_include(*border.position_of(pr.first), &part)) {
                        placed_any = true;
                        break;
                    }
                    drop_pair(part, pr);  // unusable for this circle
                }
            }
        }

        if (queue.empty()) break;
        if (!placed_any) {
            // Last resort before giving up: offer every current ring pair,
            // closest to the center of mass first.
            const Point cm = center_of_mass(layout, instance).cm;
            auto pairs = border.contact_pairs();
            std::stable_sort(pairs.begin(), pairs.end(),
                             [&](const auto& a, const auto& b) {
                                 return distance(pair_midpoint(a, layout), cm) <
                                        distance(pair_midpoint(b, layout), cm);
                             });
            bool rescued = false;
            for (const auto& pr : pairs) {
                if (try_include(*border.position_of(pr.first), nullptr)) {
                    rescued = true;
                    break;
                }
            }
            if (!rescued) {
                throw ConstructionStuck(
                    "construct_layout: no ring pair can host circle " +
                    std::to_string(queue.front()) + " (" +
                    std::to_string(layout.size()) + "/" + std::to_string(n) +
                    " placed)");
            }
        }
    }

    return ConstructionResult{std::move(layout), std::move(border), stats};
}

PostoptResult postoptimize(const Layout& layout_in, const Border& border_in,
                           const ProblemInstance& instance,
                           const SolverConfig& config) {
    if (layout_in.size() != instance.n()) {
        throw Error("postoptimize: layout is not complete");
    }

    Layout layout = layout_in;
    Border border = border_in;
    SolveStats stats;

    for (;;) {
        const Point cm = center_of_mass(layout, instance).cm;
        const auto env = envelopment_radius(layout, cm, instance);
        const double r_cur = env.radius;

        const auto k_pos = border.position_of(env.k_max);
        if (!k_pos) {
            ++stats.interior_kmax_skips;
            break;
        }
        const std::size_t t = border.size();
        if (t < 4) break;  // removing the circle would break the ring

        const CircleSpec& k = instance.circle(env.k_max);
        const int before_id = border.at(*k_pos + t - 1);
        const int after_id = border.at(*k_pos + 1);

        Layout without = layout;
        without.remove(env.k_max);
        const Border ring = border.erased(*k_pos);

        bool committed = false;
        const auto pairs = ring.contact_pairs();
        for (std::size_t i = 0; i < pairs.size() && !committed; ++i) {
            const auto& pr = pairs[i];
            if (pr.first == before_id && pr.second == after_id) continue;  // its old seat

            ExternalPlacement res;
            try {
                res = external_placement(k, i, i + 1, without, ring, instance,
                                         config.tolerance, &stats.candidate_evals);
            } catch (const NoFeasibleTangentPlacement&) {
                continue;
            } catch (const Unsolvable&) {
                continue;
            }

            std::size_t p = res.p_index;
            std::size_t q = res.q_index;
            if (!normalize_span(ring, p, q)) continue;

            Layout moved = without;
            moved.place(env.k_max, res.position);
            const Point cm_new = center_of_mass(moved, instance).cm;
            const double r_new = envelopment_radius(moved, cm_new, instance).radius;
            if (r_new < r_cur - config.postopt_delta * r_cur) {
                layout = std::move(moved);
                border = ring.inserted(env.k_max, p, q);
                ++stats.postopt_moves;
                committed = true;
            }
        }
        if (!committed) break;  // Step 5.3: keep the saved position
    }

    return PostoptResult{std::move(layout), std::move(border), stats};
}

Solution solve(const ProblemInstance& instance, const std::vector<int>& permutation,
               const SolverConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();

    ConstructionResult built = construct_layout(instance, permutation, config);
    PostoptResult post = postoptimize(built.layout, built.border, instance, config);

    const auto agg = center_of_mass(post.layout, instance);
    const auto env = envelopment_radius(post.layout, agg.cm, instance);
    const double f2 = imbalance_f2(post.layout, agg.cm, instance, instance.omega());

    Solution s;
    s.positions = std::map<int, Point>(post.layout.begin(), post.layout.end());
    s.container_center = agg.cm;
    s.radius = env.radius;
    s.f1 = env.radius;
    s.f2 = f2;
    s.objective = objective(s.f1, s.f2, instance.lambda(), instance.beta());
    s.permutation = permutation;
    s.border_ring = post.border.ring();
    s.stats.placements_external = built.stats.placements_external;
    s.stats.placements_internal = built.stats.placements_internal;
    s.stats.postopt_moves = post.stats.postopt_moves;
    s.stats.candidate_evals = built.stats.candidate_evals + post.stats.candidate_evals;
    s.stats.interior_kmax_skips = post.stats.interior_kmax_skips;
    s.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return s;
}

}  // namespace lop
