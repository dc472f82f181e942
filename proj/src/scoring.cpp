#include "plum/scoring.hpp"

#include <algorithm>
#include <set>

#include "plum/remote.hpp"

namespace plum {

std::string_view to_string(ScorerKind k) {
    switch (k) {
    case ScorerKind::keyword: return "keyword";
    case ScorerKind::target_distance: return "target-distance";
    case ScorerKind::accuracy_remote: return "accuracy-remote";
    case ScorerKind::table_lookup: return "table-lookup";
    }
    return "?";
}

std::optional<ScorerKind> scorer_kind_from_string(std::string_view s) {
    if (s == "keyword") return ScorerKind::keyword;
    if (s == "target-distance") return ScorerKind::target_distance;
    if (s == "accuracy-remote") return ScorerKind::accuracy_remote;
    if (s == "table-lookup") return ScorerKind::table_lookup;
    return std::nullopt;
}

double score_keyword(const Prompt& p, const std::vector<std::string>& targets) {
    std::set<std::string> wanted(targets.begin(), targets.end());
    if (wanted.empty()) return 0.0;
    std::set<std::string> present;
    for (const Segment& seg : p.segments) {
        for (const Token& tok : seg) present.insert(tok);
    }
    std::size_t hits = 0;
    for (const std::string& t : wanted) hits += present.count(t);
    return static_cast<double>(hits) / static_cast<double>(wanted.size());
}

double score_target_distance(const Prompt& p, const Prompt& target) {
    const std::size_t a = p.size(), b = target.size();
    std::size_t max_d = std::max(a, b);
    if (max_d == 0) return 1.0;
    // segment-level Levenshtein, two-row DP
    std::vector<std::size_t> prev(b + 1), cur(b + 1);
    for (std::size_t j = 0; j <= b; ++j) prev[j] = j;
    for (std::size_t i = 1; i <= a; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= b; ++j) {
            std::size_t sub = prev[j - 1] + (p.segments[i - 1] == target.segments[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    double s = 1.0 - static_cast<double>(prev[b]) / static_cast<double>(max_d);
    return std::clamp(s, 0.0, 1.0);
}

Scorer::Scorer(ScorerSpec spec) : spec_(std::move(spec)) {
    if (spec_.kind == ScorerKind::accuracy_remote) {
        remote_ = std::make_unique<RemoteScoreClient>(spec_.endpoint, spec_.meta,
                                                      spec_.remote_attempts, spec_.remote_retry_base_ms,
                                                      spec_.remote_timeout_ms,
                                                      remote_bearer_token_from_env());
    }
}

Scorer::~Scorer() = default;

double Scorer::compute_local(const Prompt& p) const {
    switch (spec_.kind) {
    case ScorerKind::keyword:
        return score_keyword(p, spec_.targets);
    case ScorerKind::target_distance:
        return score_target_distance(p, spec_.target);
    case ScorerKind::table_lookup: {
        auto it = spec_.table.find(render_prompt(p));
        return it == spec_.table.end() ? spec_.table_default : it->second;
    }
    case ScorerKind::accuracy_remote:
        break;
    }
    throw ScoringError("remote scorer has no local computation");
}

double Scorer::score_unbudgeted(const Prompt& p) const {
    return compute_local(p);
}

std::optional<double> Scorer::score(const Prompt& p, BudgetLedger& ledger) {
    std::string key = render_prompt(p);
    if (spec_.cache_enabled) {
        auto it = cache_.entries.find(key);
        if (it != cache_.entries.end()) {
            if (spec_.cached_hits_consume_budget && !ledger.record(1)) return std::nullopt;
            return it->second;
        }
    }
    double s;
    if (spec_.kind == ScorerKind::accuracy_remote) {
        // do not spend a real API call when the ledger cannot take it
        if (ledger.exhausted()) return std::nullopt;
        RemoteScore r = remote_->score(key);
        if (r.calls_consumed > 0 && !ledger.record(r.calls_consumed)) return std::nullopt;
        s = r.score;
    } else {
        if (!ledger.record(1)) return std::nullopt;
        s = compute_local(p);
    }
    if (spec_.cache_enabled) cache_.entries.emplace(std::move(key), s);
    return s;
}

}  // namespace plum
