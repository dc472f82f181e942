#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "plum/budget.hpp"
#include "plum/edits.hpp"
#include "plum/prompt.hpp"
#include "plum/rng.hpp"
#include "plum/scoring.hpp"
#include "plum/trace.hpp"

namespace plum {

enum class AlgorithmId { hc, sa, ga_m, ga_c, ts, hs };

// "hc" / "sa" / "ga-m" / "ga-c" / "ts" / "hs"
std::string_view to_string(AlgorithmId a);
std::optional<AlgorithmId> algorithm_from_string(std::string_view s);

struct Candidate {
    Prompt prompt;
    double score = 0.0;
    std::string origin;  // edit descriptor, or "initial" / "crossover" / "harmony"
};

struct TemperatureSchedule {
    enum class Kind { exponential, constant };
    Kind kind = Kind::exponential;
    double t0 = 10.0;   // exponential: t0 * exp(-i/tau)
    double tau = 5.0;
    double value = 0.0; // constant
    double at(int i) const;
};

// the package default, 10 * exp(-i/5)
double default_temperature(int i);

struct SearchConfig {
    int max_iterations = 50;
    int candidates = 5;                 // m; also harmony's per-iteration k
    std::vector<int> num_compose = {1, 2};
    int patience = 7;
    std::optional<std::uint64_t> budget;
    std::optional<double> wall_clock_seconds;
    // score the full deterministic single-edit neighborhood instead of m
    // sampled candidates (hc/sa/ga-m/ts); num_compose is ignored
    bool exhaustive = false;

    TemperatureSchedule schedule;       // sa
    int tournament_k = 3;               // ga-m
    std::optional<std::size_t> archive_cap;  // ga-m, off by default
    int population = 10;                // ga-c N_p
    int offspring = 5;                  // ga-c N_offspring
    double p_mutation = 0.5;            // ga-c
    int tabu_capacity = 5;              // ts N_tabu
    double tabu_temp = 0.1;             // ts aspiration probability
    int memory_capacity = 10;           // hs N_H
    int harmony_segments = 5;           // hs k_s
    double hmcr = 0.4;                  // hs
    double par = 0.5;                   // hs
};

// The move generator N(p): operator set, segment inventory, paraphrase source.
struct Neighborhood {
    std::vector<EditKind> ops = all_edit_kinds();
    PhrasePool pool;
    ParaphraseProvider* provider = nullptr;  // non-owning, required
};

struct RunOutcome {
    Prompt result;
    double result_score;  // NaN when the initial prompt was never scored
    StopReason stop_reason;
    SearchTrace trace;    // header left null; callers may attach one
    std::uint64_t calls_used = 0;
    int iterations_run = 0;
    std::vector<Segment> final_pool;  // committed pool at exit
};

// ---- helpers shared by the runners (exposed for unit tests) ----

// Acceptance rule shared by SA: accept when strictly better, otherwise with
// probability exp((s_best - s_base)/T). T == 0 defines the probability as 0
// and consumes no draw, which is what makes the zero-temperature trajectory
// identical to hill climbing.
bool sa_accept(double s_best, double s_base, double temperature, RandomSource& acceptance);

// k draws with replacement; max score wins, ties to the earliest-inserted
// (lowest index).
std::size_t tournament_select(const std::vector<Candidate>& archive, int k, RandomSource& rng);

// FIFO of rendered prompts with capacity enforced on every push.
class TabuList {
public:
    explicit TabuList(std::size_t capacity) : capacity_(capacity) {}
    void push(std::string rendered);
    bool contains(const std::string& rendered) const;
    std::size_t size() const { return items_.size(); }
    std::size_t capacity() const { return capacity_; }
    const std::deque<std::string>& items() const { return items_; }

private:
    std::size_t capacity_;
    std::deque<std::string> items_;
};

enum class TabuDecision { allowed, blocked };

// Member of T: allowed with probability TEMP (draw u, allowed iff TEMP >= u);
// TEMP == 0 blocks without consuming a draw. Non-members are always allowed.
TabuDecision tabu_predicate(const TabuList& tabu, const std::string& rendered, double temp,
                            RandomSource& acceptance);

// 0-based inclusive slice bounds of the j-th of k_s balanced runs over
// 0..L-1, computed with the effective k_s = min(k_s, L):
//   start = ceil((j-1)/k_s * L), end = ceil(j/k_s * L) - 1.
// Requires 1 <= j <= effective k_s.
std::pair<std::size_t, std::size_t> harmony_segment_bounds(int j, int k_s, std::size_t L);

// Builds one candidate from the memory, slice by slice. Draw order per slice
// j = 1..k_s: memory index (selection); if j exceeds the sampled prompt's
// effective slice count the slice is skipped with no further draws; HMCR u
// (selection); on keep, PAR u (selection) deciding a small-pitch edit from
// omega_small; otherwise a big change from omega. Edit composition draws
// (including the per-edit l) come from the edits stream. An empty
// concatenation falls back to the top memory prompt.
Prompt harmony_generate_candidate(const std::vector<Candidate>& memory,
                                  const std::vector<EditKind>& omega_small,
                                  const std::vector<EditKind>& omega, double hmcr, double par,
                                  int k_s, const std::vector<int>& num_compose, PhrasePool& pool,
                                  ParaphraseProvider& provider, RandomSource& selection,
                                  RandomSource& edits);

// Patience bookkeeping shared by ga-m/ga-c/ts/hs: strict improvement adopts
// the pool's best and refreshes patience to patience_reset; otherwise decrement
// or, at zero, stop.
struct ResultState {
    Candidate best;
    int patience;
};
// returns true when the run must stop
bool update_result(ResultState& state, const Candidate& pool_best, int patience_reset);

// ---- the six runners ----

RunOutcome run_hill_climbing(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                             Scorer& scorer, BudgetLedger& ledger, RngBundle& rng);
RunOutcome run_simulated_annealing(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                                   Scorer& scorer, BudgetLedger& ledger, RngBundle& rng);
RunOutcome run_ga_mutation(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                           Scorer& scorer, BudgetLedger& ledger, RngBundle& rng);
RunOutcome run_ga_crossover(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                            Scorer& scorer, BudgetLedger& ledger, RngBundle& rng);
RunOutcome run_tabu(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                    Scorer& scorer, BudgetLedger& ledger, RngBundle& rng);
RunOutcome run_harmony(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                       Scorer& scorer, BudgetLedger& ledger, RngBundle& rng);

RunOutcome run_algorithm(AlgorithmId id, const Prompt& init, const SearchConfig& cfg,
                         Neighborhood& nbhd, Scorer& scorer, BudgetLedger& ledger, RngBundle& rng);

}  // namespace plum
