#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "plum/paraphrase.hpp"
#include "plum/prompt.hpp"
#include "plum/scoring.hpp"
#include "plum/search.hpp"

namespace plum {

// invalid configuration; the CLI maps this to the usage exit code
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParaphraseConfig {
    enum class Kind { none, table, remote };
    Kind kind = Kind::none;
    std::map<std::string, std::vector<std::string>> entries;  // table
    std::string endpoint;                                     // remote
    int timeout_ms = 5000;
    std::string record_path;  // optional JSONL record/replay file
};

// Fully resolved run description. parse_config validates every numeric range
// and rejects unknown keys at every nesting level before anything is scored.
struct RunConfig {
    AlgorithmId algorithm = AlgorithmId::hc;
    std::string initial_prompt;  // resolved text (files are read at parse time)
    SegmenterConfig segmenter;
    ScorerSpec scorer;
    SearchConfig search;
    std::vector<EditKind> ops = all_edit_kinds();
    ParaphraseConfig paraphrase;
    std::vector<std::string> pool_extra;       // extra pool phrases
    bool seed_pool_from_initial = true;
    std::uint64_t seed = 0;
};

RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config_file(const std::string& path);

// Canonical JSON with every default resolved. parse_config(config_echo(c))
// reproduces c, and re-echoing is byte-stable; traces embed this as their
// header so they are self-reproducing. Contains no output paths.
nlohmann::json config_echo(const RunConfig& cfg);

// Command-line overrides; flags beat file values.
struct Overrides {
    std::optional<std::string> algorithm;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> budget;
    std::optional<std::string> initial_prompt;
    std::optional<int> max_iterations;
    std::optional<int> candidates;
    std::optional<int> patience;

    void apply(RunConfig& cfg) const;  // throws ConfigError
};

std::unique_ptr<ParaphraseProvider> make_provider(const ParaphraseConfig& pc);

// segments the configured initial prompt; throws ConfigError when empty
Prompt initial_prompt_of(const RunConfig& cfg);

// pool = initial prompt segments (when seed_pool_from_initial) + extras
std::vector<Segment> initial_pool_of(const RunConfig& cfg);

// Builds everything and executes one run. with_header attaches
// {"config": config_echo(cfg)} as the trace header.
RunOutcome execute_run(const RunConfig& cfg, bool with_header = true);

}  // namespace plum
