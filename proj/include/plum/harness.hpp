#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "plum/config.hpp"
#include "plum/edits.hpp"
#include "plum/scoring.hpp"
#include "plum/search.hpp"

namespace plum {

struct TrialRow {
    std::uint64_t seed = 0;
    bool ok = true;
    std::string error;
    double final_score = 0.0;  // NaN when the run never scored anything
    std::string result;
    int iterations = 0;
    std::uint64_t calls = 0;
    double wall_seconds = 0.0;
    StopReason stop_reason = StopReason::iterations;
};

struct TrialReport {
    std::vector<TrialRow> per_seed;
    double mean = 0.0;
    double std_dev = 0.0;
    bool sample_std = false;  // population std by default
    std::size_t failures = 0;
};

struct TrialStats {
    double mean;
    double std_dev;
};

// long-double accumulation; population std divides by N, sample by N-1
// (0 when N < 2)
TrialStats compute_stats(const std::vector<double>& finals, bool sample);

// "0.60±0.08" style, two decimals
std::string format_mean_std(double mean, double std_dev);

// One run per seed (the base config with its seed replaced). Failed trials
// are recorded, flagged and excluded from the aggregate. jobs > 1 runs trials
// in parallel; each trial owns its ledger, trace and RNG, and rows/outcomes
// always come back in seed order. When `outcomes` is given it receives the
// per-seed RunOutcome (nullopt for failures), e.g. for trace emission.
TrialReport run_trials(const RunConfig& base, const std::vector<std::uint64_t>& seeds,
                       int jobs = 1, bool sample_std = false,
                       std::vector<std::optional<RunOutcome>>* outcomes = nullptr);

// {"per_seed": [...], "mean": ..., "std": ...}
nlohmann::json report_json(const TrialReport& report);

// header + one line per seed: seed,final_score,calls
std::string report_csv(const TrialReport& report);

struct EnumerationConfig {
    std::vector<EditKind> ops = all_edit_kinds();
    std::vector<Segment> pool_initial;
    ParaphraseProvider* provider = nullptr;  // required
    std::size_t node_cap = 1000000;
};

// Prompts in first-discovery order, the initial prompt first.
// complete == false means the node cap aborted the closure and the set is
// partial.
struct ReachableSet {
    std::vector<Prompt> prompts;
    bool complete = true;
    std::size_t node_cap = 0;
};

// Breadth-first closure of every deterministic edit outcome up to `depth`
// edits: every choice point is expanded, never sampled. A search state is
// (prompt, set of distinct pool segments); deletions extend the pool on the
// edge, so the closure covers anything a sampled run could reach.
ReachableSet enumerate_reachable(const Prompt& init, const EnumerationConfig& ec, int depth);

// Exhaustive argmax over the set with the first-discovered winner on ties.
// Never consumes search budget (local scorers only).
std::pair<Prompt, double> oracle_optimum(const ReachableSet& set, const Scorer& scorer);

}  // namespace plum
