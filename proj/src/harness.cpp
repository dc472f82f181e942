#include "plum/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <deque>
#include <set>
#include <string_view>
#include <thread>
#include <utility>

namespace plum {

TrialStats compute_stats(const std::vector<double>& finals, bool sample) {
    if (finals.empty()) return {std::nan(""), std::nan("")};
    long double sum = 0.0L;
    for (double f : finals) sum += f;
    const long double mean = sum / static_cast<long double>(finals.size());
    long double sq = 0.0L;
    for (double f : finals) {
        const long double d = static_cast<long double>(f) - mean;
        sq += d * d;
    }
    long double var = 0.0L;
    if (sample) {
        if (finals.size() > 1) var = sq / static_cast<long double>(finals.size() - 1);
    } else {
        var = sq / static_cast<long double>(finals.size());
    }
    return {static_cast<double>(mean), static_cast<double>(std::sqrt(var))};
}

std::string format_mean_std(double mean, double std_dev) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.2f±%.2f", mean, std_dev);
    return buf;
}

namespace {

TrialRow run_one(const RunConfig& base, std::uint64_t seed, std::optional<RunOutcome>& outcome) {
    TrialRow row;
    row.seed = seed;
    RunConfig cfg = base;
    cfg.seed = seed;
    const auto t0 = std::chrono::steady_clock::now();
    try {
        RunOutcome out = execute_run(cfg);
        row.final_score = out.result_score;
        row.result = render_prompt(out.result);
        row.iterations = out.iterations_run;
        row.calls = out.calls_used;
        row.stop_reason = out.stop_reason;
        outcome = std::move(out);
    } catch (const std::exception& e) {
        row.ok = false;
        row.error = e.what();
        row.final_score = std::nan("");
        outcome = std::nullopt;
    }
    row.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return row;
}

}  // namespace

TrialReport run_trials(const RunConfig& base, const std::vector<std::uint64_t>& seeds, int jobs,
                       bool sample_std, std::vector<std::optional<RunOutcome>>* outcomes) {
    TrialReport report;
    report.sample_std = sample_std;
    report.per_seed.resize(seeds.size());
    std::vector<std::optional<RunOutcome>> local(seeds.size());

    if (jobs <= 1 || seeds.size() <= 1) {
        for (std::size_t i = 0; i < seeds.size(); ++i)
            report.per_seed[i] = run_one(base, seeds[i], local[i]);
    } else {
        std::atomic<std::size_t> next{0};
        const std::size_t workers =
            std::min<std::size_t>(static_cast<std::size_t>(jobs), seeds.size());
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) {
            threads.emplace_back([&] {
                for (;;) {
                    const std::size_t i = next.fetch_add(1);
                    if (i >= seeds.size()) return;
                    report.per_seed[i] = run_one(base, seeds[i], local[i]);
                }
            });
        }
        for (auto& t : threads) t.join();
    }

    std::vector<double> finals;
    finals.reserve(seeds.size());
    for (const TrialRow& row : report.per_seed) {
        if (!row.ok) {
            ++report.failures;
            continue;
        }
        if (std::isfinite(row.final_score)) finals.push_back(row.final_score);
    }
    const TrialStats stats = compute_stats(finals, sample_std);
    report.mean = stats.mean;
    report.std_dev = stats.std_dev;

    if (outcomes) *outcomes = std::move(local);
    return report;
}

nlohmann::json report_json(const TrialReport& report) {
    nlohmann::json rows = nlohmann::json::array();
    for (const TrialRow& row : report.per_seed) {
        nlohmann::json j;
        j["seed"] = row.seed;
        j["ok"] = row.ok;
        if (row.ok) {
            if (std::isfinite(row.final_score))
                j["final_score"] = row.final_score;
            else
                j["final_score"] = nullptr;
            j["result"] = row.result;
            j["iterations"] = row.iterations;
            j["calls"] = row.calls;
            j["stop_reason"] = std::string(to_string(row.stop_reason));
        } else {
            j["error"] = row.error;
        }
        rows.push_back(std::move(j));
    }
    nlohmann::json out;
    out["per_seed"] = std::move(rows);
    if (std::isfinite(report.mean)) {
        out["mean"] = report.mean;
        out["std"] = report.std_dev;
    } else {
        out["mean"] = nullptr;
        out["std"] = nullptr;
    }
    out["failures"] = report.failures;
    return out;
}

std::string report_csv(const TrialReport& report) {
    std::string out = "seed,final_score,calls\n";
    char buf[64];
    for (const TrialRow& row : report.per_seed) {
        out += std::to_string(row.seed);
        out += ',';
        if (row.ok && std::isfinite(row.final_score)) {
            std::snprintf(buf, sizeof(buf), "%.17g", row.final_score);
            out += buf;
        }
        out += ',';
        out += std::to_string(row.calls);
        out += '\n';
    }
    return out;
}

namespace {

// the pool component is kept as a sorted set of distinct segments: multiset
// multiplicity never changes which prompts an add can produce
using PoolSet = std::set<Segment>;
using SearchState = std::pair<Prompt, PoolSet>;

// enumerate_neighborhood descriptors are "op[args]"; only deletions change
// the pool, depositing the segment at the deleted index
std::optional<std::size_t> deleted_index(const std::string& descriptor) {
    constexpr std::string_view prefix = "delete[";
    if (descriptor.rfind(prefix, 0) != 0) return std::nullopt;
    return static_cast<std::size_t>(
        std::stoull(descriptor.substr(prefix.size(), descriptor.size() - prefix.size() - 1)));
}

}  // namespace

ReachableSet enumerate_reachable(const Prompt& init, const EnumerationConfig& ec, int depth) {
    ReachableSet out;
    out.node_cap = ec.node_cap;

    PoolSet init_pool(ec.pool_initial.begin(), ec.pool_initial.end());
    SearchState start{init, std::move(init_pool)};

    std::set<SearchState> visited;
    std::set<Prompt> seen_prompts;
    std::deque<std::pair<SearchState, int>> queue;

    visited.insert(start);
    seen_prompts.insert(init);
    out.prompts.push_back(init);
    queue.emplace_back(std::move(start), 0);

    while (!queue.empty()) {
        auto [state, d] = std::move(queue.front());
        queue.pop_front();
        if (d >= depth) continue;

        PhrasePool pool(std::vector<Segment>(state.second.begin(), state.second.end()));
        const std::vector<EditResult> children =
            enumerate_neighborhood(state.first, ec.ops, pool, *ec.provider);

        for (const EditResult& er : children) {
            PoolSet child_pool = state.second;
            if (const auto idx = deleted_index(er.descriptor))
                child_pool.insert(state.first.segments[*idx]);

            SearchState child{er.prompt, std::move(child_pool)};
            if (visited.contains(child)) continue;
            if (visited.size() >= ec.node_cap) {
                out.complete = false;
                return out;
            }
            if (seen_prompts.insert(child.first).second) out.prompts.push_back(child.first);
            queue.emplace_back(child, d + 1);
            visited.insert(std::move(child));
        }
    }
    return out;
}

std::pair<Prompt, double> oracle_optimum(const ReachableSet& set, const Scorer& scorer) {
    Prompt best;
    double best_score = -1.0;
    bool first = true;
    for (const Prompt& p : set.prompts) {
        const double s = scorer.score_unbudgeted(p);
        if (first || s > best_score) {
            best = p;
            best_score = s;
            first = false;
        }
    }
    return {best, best_score};
}

}  // namespace plum
