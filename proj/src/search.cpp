#include "plum/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace plum {

std::string_view to_string(AlgorithmId a) {
    switch (a) {
    case AlgorithmId::hc: return "hc";
    case AlgorithmId::sa: return "sa";
    case AlgorithmId::ga_m: return "ga-m";
    case AlgorithmId::ga_c: return "ga-c";
    case AlgorithmId::ts: return "ts";
    case AlgorithmId::hs: return "hs";
    }
    return "?";
}

std::optional<AlgorithmId> algorithm_from_string(std::string_view s) {
    if (s == "hc") return AlgorithmId::hc;
    if (s == "sa") return AlgorithmId::sa;
    if (s == "ga-m") return AlgorithmId::ga_m;
    if (s == "ga-c") return AlgorithmId::ga_c;
    if (s == "ts") return AlgorithmId::ts;
    if (s == "hs") return AlgorithmId::hs;
    return std::nullopt;
}

double default_temperature(int i) {
    return 10.0 * std::exp(-static_cast<double>(i) / 5.0);
}

double TemperatureSchedule::at(int i) const {
    switch (kind) {
    case Kind::exponential: return t0 * std::exp(-static_cast<double>(i) / tau);
    case Kind::constant: return value;
    }
    return 0.0;
}

bool sa_accept(double s_best, double s_base, double temperature, RandomSource& acceptance) {
    if (s_best > s_base) return true;
    if (temperature <= 0.0) return false;  // probability defined as 0, no draw
    double p = std::exp((s_best - s_base) / temperature);
    return p >= acceptance.real();
}

namespace {

// draw k indices with replacement; max score wins, ties to the lowest index
template <class ScoreAt>
std::size_t tournament_idx(std::size_t n, int k, ScoreAt score_at, RandomSource& rng) {
    std::size_t best = n;
    for (int d = 0; d < k; ++d) {
        std::size_t i = rng.pick(n);
        if (best == n || score_at(i) > score_at(best) ||
            (score_at(i) == score_at(best) && i < best)) {
            best = i;
        }
    }
    return best;
}

}  // namespace

std::size_t tournament_select(const std::vector<Candidate>& archive, int k, RandomSource& rng) {
    assert(!archive.empty() && k >= 1);
    return tournament_idx(archive.size(), k, [&](std::size_t i) { return archive[i].score; }, rng);
}

void TabuList::push(std::string rendered) {
    items_.push_back(std::move(rendered));
    while (items_.size() > capacity_) items_.pop_front();
}

bool TabuList::contains(const std::string& rendered) const {
    return std::find(items_.begin(), items_.end(), rendered) != items_.end();
}

TabuDecision tabu_predicate(const TabuList& tabu, const std::string& rendered, double temp,
                            RandomSource& acceptance) {
    if (!tabu.contains(rendered)) return TabuDecision::allowed;
    if (temp <= 0.0) return TabuDecision::blocked;  // no draw
    return temp >= acceptance.real() ? TabuDecision::allowed : TabuDecision::blocked;
}

std::pair<std::size_t, std::size_t> harmony_segment_bounds(int j, int k_s, std::size_t L) {
    assert(L >= 1 && k_s >= 1 && j >= 1);
    std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(k_s), L);
    assert(static_cast<std::size_t>(j) <= k);
    auto ju = static_cast<std::size_t>(j);
    std::size_t start = ((ju - 1) * L + k - 1) / k;  // ceil((j-1)L/k)
    std::size_t end = (ju * L + k - 1) / k - 1;      // ceil(jL/k) - 1
    return {start, end};
}

bool update_result(ResultState& state, const Candidate& pool_best, int patience_reset) {
    if (pool_best.score > state.best.score) {
        state.best = pool_best;
        state.patience = patience_reset;
        return false;
    }
    if (state.patience > 0) {
        --state.patience;
        return false;
    }
    return true;
}

namespace {

int draw_compose_length(const std::vector<int>& choices, RandomSource& edits) {
    assert(!choices.empty());
    if (choices.size() == 1) return choices[0];
    return choices[edits.pick(choices.size())];
}

std::size_t argmax_score(const std::vector<Candidate>& v) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i].score > v[best].score) best = i;
    }
    return best;
}

std::vector<EditKind> intersect_small(const std::vector<EditKind>& omega) {
    std::vector<EditKind> out;
    if (std::find(omega.begin(), omega.end(), EditKind::par) != omega.end()) {
        out.push_back(EditKind::par);
    }
    return out;
}

using Clock = std::chrono::steady_clock;

struct Runner {
    Runner(const SearchConfig& c, Neighborhood& n, Scorer& s, BudgetLedger& l, RngBundle& r)
        : cfg(c), nbhd(n), scorer(s), ledger(l), rng(r) {}

    const SearchConfig& cfg;
    Neighborhood& nbhd;
    Scorer& scorer;
    BudgetLedger& ledger;
    RngBundle& rng;

    SearchTrace trace;
    Candidate best_ever;
    bool best_set = false;
    Clock::time_point started = Clock::now();

    bool wall_exceeded() const {
        if (!cfg.wall_clock_seconds) return false;
        return std::chrono::duration<double>(Clock::now() - started).count() >
               *cfg.wall_clock_seconds;
    }

    std::optional<Candidate> score(const Prompt& p, std::string origin) {
        auto s = scorer.score(p, ledger);
        if (!s) return std::nullopt;
        Candidate c{p, *s, std::move(origin)};
        if (!best_set || c.score > best_ever.score) {
            best_ever = c;
            best_set = true;
        }
        return c;
    }

    std::vector<EditResult> batch(const Prompt& base) {
        if (cfg.exhaustive) {
            return enumerate_neighborhood(base, nbhd.ops, nbhd.pool, *nbhd.provider);
        }
        return sample_neighborhood(base, cfg.candidates, cfg.num_compose, nbhd.ops, nbhd.pool,
                                   *nbhd.provider, rng.edits);
    }

    bool score_batch(const std::vector<EditResult>& edits, std::vector<Candidate>& out) {
        out.clear();
        out.reserve(edits.size());
        for (const EditResult& er : edits) {
            auto c = score(er.prompt, er.descriptor);
            if (!c) return false;
            out.push_back(std::move(*c));
        }
        return true;
    }

    void record(int iter, const Candidate& accepted, const std::vector<Candidate>& cands,
                int patience) {
        IterationRecord rec;
        rec.iter = iter;
        rec.best_score = best_ever.score;
        rec.accepted = render_prompt(accepted.prompt);
        rec.candidates.reserve(cands.size());
        for (const Candidate& c : cands) rec.candidates.push_back({render_prompt(c.prompt), c.score});
        rec.budget_used = ledger.calls_used;
        rec.patience = patience;
        trace.iterations.push_back(std::move(rec));
    }

    RunOutcome finish(StopReason stop, const Candidate& result) {
        nbhd.pool.commit();
        trace.result = render_prompt(result.prompt);
        trace.result_score = result.score;
        trace.stop_reason = stop;
        RunOutcome out;
        out.result = result.prompt;
        out.result_score = result.score;
        out.stop_reason = stop;
        out.calls_used = ledger.calls_used;
        out.iterations_run = static_cast<int>(trace.iterations.size());
        out.final_pool = nbhd.pool.available();
        out.trace = std::move(trace);
        return out;
    }

    // the budget refused even the initial scoring: the run returns the
    // initial prompt unscored
    RunOutcome finish_unscored(const Prompt& init) {
        nbhd.pool.commit();
        trace.result = render_prompt(init);
        trace.result_score = std::numeric_limits<double>::quiet_NaN();
        trace.stop_reason = StopReason::budget;
        RunOutcome out;
        out.result = init;
        out.result_score = std::numeric_limits<double>::quiet_NaN();
        out.stop_reason = StopReason::budget;
        out.calls_used = ledger.calls_used;
        out.iterations_run = 0;
        out.final_pool = nbhd.pool.available();
        out.trace = std::move(trace);
        return out;
    }
};

// scored candidate plus its insertion order, for stable truncation
struct Ranked {
    Candidate cand;
    std::uint64_t seq;
};

void sort_ranked(std::vector<Ranked>& v) {
    std::sort(v.begin(), v.end(), [](const Ranked& a, const Ranked& b) {
        if (a.cand.score != b.cand.score) return a.cand.score > b.cand.score;
        return a.seq < b.seq;
    });
}

void truncate_top(std::vector<Ranked>& v, std::size_t cap) {
    sort_ranked(v);
    if (v.size() > cap) v.resize(cap);
}

std::vector<Candidate> strip_ranks(const std::vector<Ranked>& v) {
    std::vector<Candidate> out;
    out.reserve(v.size());
    for (const Ranked& r : v) out.push_back(r.cand);
    return out;
}

RunOutcome climb(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd, Scorer& scorer,
                 BudgetLedger& ledger, RngBundle& rng, bool annealed) {
    Runner r{cfg, nbhd, scorer, ledger, rng};
    auto s0 = r.score(init, "initial");
    if (!s0) return r.finish_unscored(init);
    Candidate base = *s0;
    int rho = cfg.patience;
    for (int i = 1; i <= cfg.max_iterations; ++i) {
        if (r.wall_exceeded()) return r.finish(StopReason::budget, r.best_ever);
        std::vector<Candidate> cands;
        if (!r.score_batch(r.batch(base.prompt), cands)) {
            return r.finish(StopReason::budget, r.best_ever);
        }
        bool adopted = false;
        if (!cands.empty()) {
            std::size_t k = argmax_score(cands);
            bool take = annealed
                            ? sa_accept(cands[k].score, base.score, cfg.schedule.at(i), rng.acceptance)
                            : cands[k].score > base.score;
            if (take) {
                base = cands[k];
                adopted = true;
            }
        }
        bool stop = false;
        if (adopted) {
            rho = cfg.patience;
        } else if (rho > 0) {
            --rho;
        } else {
            stop = true;
        }
        r.record(i, base, cands, rho);
        nbhd.pool.commit();
        if (stop) return r.finish(StopReason::patience, r.best_ever);
    }
    return r.finish(StopReason::iterations, r.best_ever);
}

}  // namespace

RunOutcome run_hill_climbing(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                             Scorer& scorer, BudgetLedger& ledger, RngBundle& rng) {
    return climb(init, cfg, nbhd, scorer, ledger, rng, false);
}

RunOutcome run_simulated_annealing(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                                   Scorer& scorer, BudgetLedger& ledger, RngBundle& rng) {
    return climb(init, cfg, nbhd, scorer, ledger, rng, true);
}

RunOutcome run_ga_mutation(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                           Scorer& scorer, BudgetLedger& ledger, RngBundle& rng) {
    Runner r{cfg, nbhd, scorer, ledger, rng};
    auto s0 = r.score(init, "initial");
    if (!s0) return r.finish_unscored(init);
    std::vector<Candidate> archive{*s0};
    ResultState rs{*s0, cfg.patience};
    for (int i = 1; i <= cfg.max_iterations; ++i) {
        if (r.wall_exceeded()) return r.finish(StopReason::budget, r.best_ever);
        std::size_t bidx = tournament_select(archive, cfg.tournament_k, rng.selection);
        std::vector<Candidate> cands;
        if (!r.score_batch(r.batch(archive[bidx].prompt), cands)) {
            return r.finish(StopReason::budget, r.best_ever);
        }
        bool stop = false;
        Candidate accepted = rs.best;
        if (cands.empty()) {
            if (rs.patience > 0) --rs.patience;
            else stop = true;
        } else {
            std::size_t k = argmax_score(cands);
            archive.push_back(cands[k]);
            if (cfg.archive_cap && archive.size() > *cfg.archive_cap) {
                // evict the worst member; among equals the most recent goes
                std::size_t worst = 0;
                for (std::size_t w = 1; w < archive.size(); ++w) {
                    if (archive[w].score <= archive[worst].score) worst = w;
                }
                archive.erase(archive.begin() + static_cast<std::ptrdiff_t>(worst));
            }
            accepted = cands[k];
            stop = update_result(rs, cands[k], cfg.patience);
        }
        r.record(i, accepted, cands, rs.patience);
        nbhd.pool.commit();
        if (stop) return r.finish(StopReason::patience, rs.best);
    }
    return r.finish(StopReason::iterations, rs.best);
}

RunOutcome run_ga_crossover(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                            Scorer& scorer, BudgetLedger& ledger, RngBundle& rng) {
    Runner r{cfg, nbhd, scorer, ledger, rng};
    auto s0 = r.score(init, "initial");
    if (!s0) return r.finish_unscored(init);

    std::uint64_t seq = 0;
    std::vector<Ranked> pop;
    pop.reserve(static_cast<std::size_t>(cfg.population));
    // N_p structural copies sharing the single initial evaluation
    for (int c = 0; c < cfg.population; ++c) pop.push_back({*s0, seq++});
    ResultState rs{*s0, cfg.patience};

    auto contains = [](const std::vector<Ranked>& v, const Prompt& p) {
        return std::any_of(v.begin(), v.end(),
                           [&](const Ranked& m) { return m.cand.prompt == p; });
    };

    for (int gen = 1; gen <= cfg.max_iterations; ++gen) {
        if (r.wall_exceeded()) return r.finish(StopReason::budget, r.best_ever);
        std::vector<Candidate> scored_this_gen;

        // crossover phase: parents from the generation-start population,
        // dedup against the growing one
        std::vector<Ranked> snapshot = pop;
        std::vector<Candidate> parents = strip_ranks(snapshot);
        for (int j = 0; j < cfg.offspring; ++j) {
            std::size_t a = tournament_select(parents, 2, rng.selection);
            std::size_t b = tournament_select(parents, 2, rng.selection);
            Prompt off = crossover(parents[a].prompt, parents[b].prompt, rng.selection);
            if (contains(pop, off)) continue;  // not scored, not inserted
            auto c = r.score(off, "crossover");
            if (!c) return r.finish(StopReason::budget, r.best_ever);
            pop.push_back({*c, seq++});
            scored_this_gen.push_back(*c);
        }
        truncate_top(pop, static_cast<std::size_t>(cfg.population));
        bool stop = update_result(rs, pop.front().cand, cfg.patience);
        if (stop) {
            r.record(gen, pop.front().cand, scored_this_gen, rs.patience);
            nbhd.pool.commit();
            return r.finish(StopReason::patience, rs.best);
        }

        // mutation phase over the truncated population
        std::vector<Ranked> members = pop;
        for (const Ranked& m : members) {
            if (cfg.p_mutation < rng.selection.real()) continue;
            int l = draw_compose_length(cfg.num_compose, rng.edits);
            EditResult er = compose_edits(m.cand.prompt, l, nbhd.ops, nbhd.pool, *nbhd.provider,
                                          rng.edits);
            auto c = r.score(er.prompt, er.descriptor);
            if (!c) return r.finish(StopReason::budget, r.best_ever);
            pop.push_back({*c, seq++});
            scored_this_gen.push_back(*c);
        }
        truncate_top(pop, static_cast<std::size_t>(cfg.population));
        stop = update_result(rs, pop.front().cand, cfg.patience);
        r.record(gen, pop.front().cand, scored_this_gen, rs.patience);
        nbhd.pool.commit();
        if (stop) return r.finish(StopReason::patience, rs.best);
    }
    return r.finish(StopReason::iterations, rs.best);
}

RunOutcome run_tabu(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                    Scorer& scorer, BudgetLedger& ledger, RngBundle& rng) {
    Runner r{cfg, nbhd, scorer, ledger, rng};
    auto s0 = r.score(init, "initial");
    if (!s0) return r.finish_unscored(init);
    Candidate base = *s0;
    ResultState rs{*s0, cfg.patience};
    TabuList tabu(static_cast<std::size_t>(cfg.tabu_capacity));
    tabu.push(render_prompt(init));

    for (int i = 1; i <= cfg.max_iterations; ++i) {
        if (r.wall_exceeded()) return r.finish(StopReason::budget, rs.best);
        std::vector<Candidate> cands;
        if (!r.score_batch(r.batch(base.prompt), cands)) {
            return r.finish(StopReason::budget, rs.best);
        }
        // predicate draws happen in candidate index order
        std::vector<std::size_t> allowed;
        for (std::size_t c = 0; c < cands.size(); ++c) {
            if (tabu_predicate(tabu, render_prompt(cands[c].prompt), cfg.tabu_temp,
                               rng.acceptance) == TabuDecision::allowed) {
                allowed.push_back(c);
            }
        }
        bool stop = false;
        if (allowed.empty()) {
            // everything blocked: nothing adopted, a non-improving iteration
            if (rs.patience > 0) --rs.patience;
            else stop = true;
            r.record(i, base, cands, rs.patience);
        } else {
            std::size_t k = allowed[0];
            for (std::size_t c : allowed) {
                if (cands[c].score > cands[k].score) k = c;
            }
            base = cands[k];
            tabu.push(render_prompt(base.prompt));
            stop = update_result(rs, cands[k], cfg.patience);
            r.record(i, base, cands, rs.patience);
        }
        nbhd.pool.commit();
        if (stop) return r.finish(StopReason::patience, rs.best);
    }
    return r.finish(StopReason::iterations, rs.best);
}

Prompt harmony_generate_candidate(const std::vector<Candidate>& memory,
                                  const std::vector<EditKind>& omega_small,
                                  const std::vector<EditKind>& omega, double hmcr, double par,
                                  int k_s, const std::vector<int>& num_compose, PhrasePool& pool,
                                  ParaphraseProvider& provider, RandomSource& selection,
                                  RandomSource& edits) {
    assert(!memory.empty());
    Prompt out;
    for (int j = 1; j <= k_s; ++j) {
        std::size_t widx = selection.pick(memory.size());
        const Prompt& w = memory[widx].prompt;
        std::size_t k_eff = std::min<std::size_t>(static_cast<std::size_t>(k_s), w.size());
        // the sampled prompt is too short to own a j-th slice: the draw is
        // consumed but the slice contributes nothing
        if (static_cast<std::size_t>(j) > k_eff) continue;
        auto [start, end] = harmony_segment_bounds(j, k_s, w.size());
        Prompt slice;
        slice.segments.assign(w.segments.begin() + static_cast<std::ptrdiff_t>(start),
                              w.segments.begin() + static_cast<std::ptrdiff_t>(end) + 1);
        double u = selection.real();
        if (hmcr >= u) {
            double u2 = selection.real();
            if (par >= u2 && !omega_small.empty()) {
                int l = draw_compose_length(num_compose, edits);
                slice = compose_edits(slice, l, omega_small, pool, provider, edits).prompt;
            }
        } else {
            int l = draw_compose_length(num_compose, edits);
            slice = compose_edits(slice, l, omega, pool, provider, edits).prompt;
        }
        out.segments.insert(out.segments.end(), slice.segments.begin(), slice.segments.end());
    }
    if (out.empty()) return memory.front().prompt;
    return out;
}

RunOutcome run_harmony(const Prompt& init, const SearchConfig& cfg, Neighborhood& nbhd,
                       Scorer& scorer, BudgetLedger& ledger, RngBundle& rng) {
    Runner r{cfg, nbhd, scorer, ledger, rng};
    auto s0 = r.score(init, "initial");
    if (!s0) return r.finish_unscored(init);

    std::uint64_t seq = 0;
    std::vector<Ranked> memory{{*s0, seq++}};
    ResultState rs{*s0, cfg.patience};
    std::vector<EditKind> omega_small = intersect_small(nbhd.ops);

    for (int i = 1; i <= cfg.max_iterations; ++i) {
        if (r.wall_exceeded()) return r.finish(StopReason::budget, r.best_ever);
        std::vector<Candidate> memory_view = strip_ranks(memory);
        std::vector<Candidate> news;
        for (int c = 0; c < cfg.candidates; ++c) {
            Prompt g = harmony_generate_candidate(memory_view, omega_small, nbhd.ops, cfg.hmcr,
                                                  cfg.par, cfg.harmony_segments, cfg.num_compose,
                                                  nbhd.pool, *nbhd.provider, rng.selection,
                                                  rng.edits);
            auto cand = r.score(g, "harmony");
            if (!cand) return r.finish(StopReason::budget, r.best_ever);
            news.push_back(std::move(*cand));
        }
        std::size_t k = argmax_score(news);
        // best of memory ∪ news; ties stay with the (older) memory member
        const Candidate& union_best =
            news[k].score > memory.front().cand.score ? news[k] : memory.front().cand;
        bool stop = update_result(rs, news[k], cfg.patience);
        r.record(i, union_best, news, rs.patience);
        if (stop) {
            nbhd.pool.commit();
            return r.finish(StopReason::patience, rs.best);
        }
        for (Candidate& c : news) memory.push_back({std::move(c), seq++});
        truncate_top(memory, static_cast<std::size_t>(cfg.memory_capacity));
        nbhd.pool.commit();
    }
    return r.finish(StopReason::iterations, rs.best);
}

RunOutcome run_algorithm(AlgorithmId id, const Prompt& init, const SearchConfig& cfg,
                         Neighborhood& nbhd, Scorer& scorer, BudgetLedger& ledger, RngBundle& rng) {
    switch (id) {
    case AlgorithmId::hc: return run_hill_climbing(init, cfg, nbhd, scorer, ledger, rng);
    case AlgorithmId::sa: return run_simulated_annealing(init, cfg, nbhd, scorer, ledger, rng);
    case AlgorithmId::ga_m: return run_ga_mutation(init, cfg, nbhd, scorer, ledger, rng);
    case AlgorithmId::ga_c: return run_ga_crossover(init, cfg, nbhd, scorer, ledger, rng);
    case AlgorithmId::ts: return run_tabu(init, cfg, nbhd, scorer, ledger, rng);
    case AlgorithmId::hs: return run_harmony(init, cfg, nbhd, scorer, ledger, rng);
    }
    throw std::logic_error("unknown algorithm id");
}

}  // namespace plum
