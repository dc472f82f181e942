#pragma once

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

#include "plum/budget.hpp"
#include "plum/prompt.hpp"

namespace plum {

// A labeled evaluation example; remote scorers receive them via `meta`.
struct Example {
    std::string input;
    std::string label;
};

enum class ScorerKind { keyword, target_distance, accuracy_remote, table_lookup };

// "keyword" / "target-distance" / "accuracy-remote" / "table-lookup"
std::string_view to_string(ScorerKind k);
std::optional<ScorerKind> scorer_kind_from_string(std::string_view s);

struct ScorerSpec {
    ScorerKind kind = ScorerKind::keyword;

    // keyword: fraction of targets present among the prompt's tokens
    std::vector<std::string> targets;

    // target-distance: 1 - levenshtein(p, target)/max(|p|, |target|)
    Prompt target;

    // table-lookup: rendered prompt -> score, default for misses
    std::map<std::string, double> table;
    double table_default = 0.0;

    // accuracy-remote
    std::string endpoint;
    nlohmann::json meta = nlohmann::json::object();
    int remote_attempts = 3;
    int remote_retry_base_ms = 100;
    int remote_timeout_ms = 5000;

    bool cache_enabled = true;
    bool cached_hits_consume_budget = false;
};

double score_keyword(const Prompt& p, const std::vector<std::string>& targets);
double score_target_distance(const Prompt& p, const Prompt& target);

// remote call failed for good (retries exhausted, or a non-retryable status)
struct ScoringError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// the endpoint answered but violated the wire contract
struct ProtocolError : ScoringError {
    using ScoringError::ScoringError;
};

struct ScoreCache {
    std::unordered_map<std::string, double> entries;  // rendered prompt -> score
};

class RemoteScoreClient;

// The objective f(p). Wraps one ScorerSpec plus its cache; all budget
// accounting funnels through score().
class Scorer {
public:
    explicit Scorer(ScorerSpec spec);
    ~Scorer();
    Scorer(const Scorer&) = delete;
    Scorer& operator=(const Scorer&) = delete;

    // nullopt = budget exhausted; the ledger is left unchanged and the caller
    // must stop, returning its best-so-far. Cache misses on local kinds record
    // exactly 1 call; remote kinds record the reported calls_consumed.
    // Throws ScoringError/ProtocolError on remote failure.
    std::optional<double> score(const Prompt& p, BudgetLedger& ledger);

    // Oracle path: no ledger, no cache interaction. Local kinds only.
    double score_unbudgeted(const Prompt& p) const;

    bool is_local() const { return spec_.kind != ScorerKind::accuracy_remote; }
    const ScorerSpec& spec() const { return spec_; }
    const ScoreCache& cache() const { return cache_; }

private:
    double compute_local(const Prompt& p) const;

    ScorerSpec spec_;
    ScoreCache cache_;
    std::unique_ptr<RemoteScoreClient> remote_;
};

}  // namespace plum
