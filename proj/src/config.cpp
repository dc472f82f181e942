#include "plum/config.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include "plum/remote.hpp"

namespace plum {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) {
    throw ConfigError(msg);
}

void expect_object(const json& v, const std::string& ctx) {
    if (!v.is_object()) fail(ctx + " must be a JSON object");
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& ctx) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!allowed.count(it.key())) fail("unknown key '" + it.key() + "' in " + ctx);
    }
}

std::string get_string(const json& obj, const char* key, const std::string& ctx) {
    const json& v = obj.at(key);
    if (!v.is_string()) fail(ctx + "." + key + " must be a string");
    return v.get<std::string>();
}

int get_int(const json& obj, const char* key, const std::string& ctx, int lo,
            int hi = std::numeric_limits<int>::max()) {
    const json& v = obj.at(key);
    if (!v.is_number_integer()) fail(ctx + "." + key + " must be an integer");
    long long x = v.get<long long>();
    if (x < lo || x > hi) {
        fail(ctx + "." + key + " out of range (" + std::to_string(lo) + ".." +
             (hi == std::numeric_limits<int>::max() ? std::string("inf") : std::to_string(hi)) +
             ")");
    }
    return static_cast<int>(x);
}

double get_real(const json& obj, const char* key, const std::string& ctx, double lo, double hi) {
    const json& v = obj.at(key);
    if (!v.is_number()) fail(ctx + "." + key + " must be a number");
    double x = v.get<double>();
    if (!(x >= lo && x <= hi)) {
        fail(ctx + "." + key + " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) +
             "]");
    }
    return x;
}

bool get_bool(const json& obj, const char* key, const std::string& ctx) {
    const json& v = obj.at(key);
    if (!v.is_boolean()) fail(ctx + "." + key + " must be a boolean");
    return v.get<bool>();
}

std::uint64_t get_u64(const json& obj, const char* key, const std::string& ctx) {
    const json& v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0)) {
        fail(ctx + "." + key + " must be a non-negative integer");
    }
    return v.get<std::uint64_t>();
}

void parse_segmenter(const json& obj, SegmenterConfig& out) {
    expect_object(obj, "segmenter");
    reject_unknown(obj, {"mode", "delimiter", "tokens_per_segment"}, "segmenter");
    if (obj.contains("mode")) {
        std::string mode = get_string(obj, "mode", "segmenter");
        if (mode == "whitespace") out.mode = SegmentMode::whitespace;
        else if (mode == "delimiter") out.mode = SegmentMode::delimiter;
        else if (mode == "fixed_width") out.mode = SegmentMode::fixed_width;
        else fail("segmenter.mode must be whitespace, delimiter or fixed_width");
    }
    if (obj.contains("delimiter")) out.delimiter = get_string(obj, "delimiter", "segmenter");
    if (obj.contains("tokens_per_segment")) {
        out.tokens_per_segment = get_int(obj, "tokens_per_segment", "segmenter", 1);
    }
    if (out.mode == SegmentMode::delimiter && out.delimiter.empty()) {
        fail("segmenter.delimiter must be non-empty in delimiter mode");
    }
}

void parse_scorer(const json& obj, const SegmenterConfig& seg, ScorerSpec& out) {
    expect_object(obj, "scorer");
    if (!obj.contains("kind")) fail("scorer.kind is required");
    std::string kind = get_string(obj, "kind", "scorer");
    auto parsed = scorer_kind_from_string(kind);
    if (!parsed) fail("scorer.kind must be keyword, target-distance, accuracy-remote or table-lookup");
    out.kind = *parsed;

    std::set<std::string> allowed{"kind", "cache", "cached_hits_consume_budget"};
    switch (out.kind) {
    case ScorerKind::keyword: allowed.insert("targets"); break;
    case ScorerKind::target_distance: allowed.insert("target"); break;
    case ScorerKind::table_lookup: allowed.insert({"table", "default"}); break;
    case ScorerKind::accuracy_remote:
        allowed.insert({"endpoint", "meta", "attempts", "retry_base_ms", "timeout_ms"});
        break;
    }
    reject_unknown(obj, allowed, "scorer");

    switch (out.kind) {
    case ScorerKind::keyword: {
        if (!obj.contains("targets")) fail("scorer.targets is required for keyword");
        const json& t = obj["targets"];
        if (!t.is_array() || t.empty()) fail("scorer.targets must be a non-empty array");
        for (const auto& v : t) {
            if (!v.is_string() || v.get<std::string>().empty()) {
                fail("scorer.targets entries must be non-empty strings");
            }
            out.targets.push_back(v.get<std::string>());
        }
        break;
    }
    case ScorerKind::target_distance: {
        if (!obj.contains("target")) fail("scorer.target is required for target-distance");
        out.target = segment_prompt(get_string(obj, "target", "scorer"), seg);
        if (out.target.empty()) fail("scorer.target must be non-empty");
        break;
    }
    case ScorerKind::table_lookup: {
        if (!obj.contains("table")) fail("scorer.table is required for table-lookup");
        const json& t = obj["table"];
        if (!t.is_object()) fail("scorer.table must be an object");
        for (auto it = t.begin(); it != t.end(); ++it) {
            if (!it.value().is_number()) fail("scorer.table values must be numbers");
            double s = it.value().get<double>();
            if (s < 0.0 || s > 1.0) fail("scorer.table values must lie in [0,1]");
            out.table[it.key()] = s;
        }
        if (obj.contains("default")) out.table_default = get_real(obj, "default", "scorer", 0.0, 1.0);
        break;
    }
    case ScorerKind::accuracy_remote: {
        if (!obj.contains("endpoint")) fail("scorer.endpoint is required for accuracy-remote");
        out.endpoint = get_string(obj, "endpoint", "scorer");
        if (out.endpoint.empty()) fail("scorer.endpoint must be non-empty");
        if (obj.contains("meta")) {
            if (!obj["meta"].is_object()) fail("scorer.meta must be an object");
            out.meta = obj["meta"];
        }
        if (obj.contains("attempts")) out.remote_attempts = get_int(obj, "attempts", "scorer", 1);
        if (obj.contains("retry_base_ms")) {
            out.remote_retry_base_ms = get_int(obj, "retry_base_ms", "scorer", 0);
        }
        if (obj.contains("timeout_ms")) out.remote_timeout_ms = get_int(obj, "timeout_ms", "scorer", 1);
        break;
    }
    }
    if (obj.contains("cache")) out.cache_enabled = get_bool(obj, "cache", "scorer");
    if (obj.contains("cached_hits_consume_budget")) {
        out.cached_hits_consume_budget = get_bool(obj, "cached_hits_consume_budget", "scorer");
    }
}

void parse_search(const json& obj, SearchConfig& out) {
    expect_object(obj, "search");
    reject_unknown(obj,
                   {"max_iterations", "candidates", "num_compose", "patience", "budget",
                    "wall_clock_seconds", "exhaustive"},
                   "search");
    if (obj.contains("max_iterations")) out.max_iterations = get_int(obj, "max_iterations", "search", 1);
    if (obj.contains("candidates")) out.candidates = get_int(obj, "candidates", "search", 1);
    if (obj.contains("num_compose")) {
        const json& nc = obj["num_compose"];
        if (!nc.is_array() || nc.empty()) fail("search.num_compose must be a non-empty array");
        out.num_compose.clear();
        for (const auto& v : nc) {
            if (!v.is_number_integer() || v.get<int>() < 1) {
                fail("search.num_compose entries must be integers >= 1");
            }
            out.num_compose.push_back(v.get<int>());
        }
    }
    if (obj.contains("patience")) out.patience = get_int(obj, "patience", "search", 0);
    if (obj.contains("budget") && !obj["budget"].is_null()) {
        out.budget = get_u64(obj, "budget", "search");
    }
    if (obj.contains("wall_clock_seconds") && !obj["wall_clock_seconds"].is_null()) {
        out.wall_clock_seconds = get_real(obj, "wall_clock_seconds", "search", 0.0, 1e9);
        if (*out.wall_clock_seconds <= 0.0) fail("search.wall_clock_seconds must be > 0");
    }
    if (obj.contains("exhaustive")) out.exhaustive = get_bool(obj, "exhaustive", "search");
}

void parse_schedule(const json& obj, TemperatureSchedule& out) {
    expect_object(obj, "algo.schedule");
    reject_unknown(obj, {"kind", "t0", "tau", "value"}, "algo.schedule");
    std::string kind = obj.contains("kind") ? get_string(obj, "kind", "algo.schedule") : "exponential";
    if (kind == "exponential") {
        out.kind = TemperatureSchedule::Kind::exponential;
        if (obj.contains("value")) fail("algo.schedule.value only applies to the constant kind");
        if (obj.contains("t0")) out.t0 = get_real(obj, "t0", "algo.schedule", 0.0, 1e9);
        if (obj.contains("tau")) {
            out.tau = get_real(obj, "tau", "algo.schedule", 1e-9, 1e9);
        }
    } else if (kind == "constant") {
        out.kind = TemperatureSchedule::Kind::constant;
        if (obj.contains("t0") || obj.contains("tau")) {
            fail("algo.schedule.t0/tau only apply to the exponential kind");
        }
        if (obj.contains("value")) out.value = get_real(obj, "value", "algo.schedule", 0.0, 1e9);
    } else {
        fail("algo.schedule.kind must be exponential or constant");
    }
}

void parse_algo(const json& obj, AlgorithmId id, SearchConfig& out) {
    expect_object(obj, "algo");
    switch (id) {
    case AlgorithmId::hc:
        reject_unknown(obj, {}, "algo (hc takes no options)");
        break;
    case AlgorithmId::sa:
        reject_unknown(obj, {"schedule"}, "algo");
        if (obj.contains("schedule")) parse_schedule(obj["schedule"], out.schedule);
        break;
    case AlgorithmId::ga_m:
        reject_unknown(obj, {"tournament_k", "archive_cap"}, "algo");
        if (obj.contains("tournament_k")) out.tournament_k = get_int(obj, "tournament_k", "algo", 1);
        if (obj.contains("archive_cap") && !obj["archive_cap"].is_null()) {
            std::uint64_t cap = get_u64(obj, "archive_cap", "algo");
            if (cap < 1) fail("algo.archive_cap must be >= 1");
            out.archive_cap = static_cast<std::size_t>(cap);
        }
        break;
    case AlgorithmId::ga_c:
        reject_unknown(obj, {"population", "offspring", "p_mutation"}, "algo");
        if (obj.contains("population")) out.population = get_int(obj, "population", "algo", 1);
        if (obj.contains("offspring")) out.offspring = get_int(obj, "offspring", "algo", 0);
        if (obj.contains("p_mutation")) out.p_mutation = get_real(obj, "p_mutation", "algo", 0.0, 1.0);
        break;
    case AlgorithmId::ts:
        reject_unknown(obj, {"tabu_capacity", "tabu_temp"}, "algo");
        if (obj.contains("tabu_capacity")) out.tabu_capacity = get_int(obj, "tabu_capacity", "algo", 0);
        if (obj.contains("tabu_temp")) out.tabu_temp = get_real(obj, "tabu_temp", "algo", 0.0, 1.0);
        break;
    case AlgorithmId::hs:
        reject_unknown(obj, {"memory", "segments", "hmcr", "par"}, "algo");
        if (obj.contains("memory")) out.memory_capacity = get_int(obj, "memory", "algo", 1);
        if (obj.contains("segments")) out.harmony_segments = get_int(obj, "segments", "algo", 1);
        if (obj.contains("hmcr")) out.hmcr = get_real(obj, "hmcr", "algo", 0.0, 1.0);
        if (obj.contains("par")) out.par = get_real(obj, "par", "algo", 0.0, 1.0);
        break;
    }
}

void parse_paraphrase(const json& obj, ParaphraseConfig& out) {
    expect_object(obj, "edits.paraphrase");
    if (!obj.contains("kind")) fail("edits.paraphrase.kind is required");
    std::string kind = get_string(obj, "kind", "edits.paraphrase");
    if (kind == "none") {
        reject_unknown(obj, {"kind"}, "edits.paraphrase");
        out.kind = ParaphraseConfig::Kind::none;
    } else if (kind == "table") {
        reject_unknown(obj, {"kind", "entries"}, "edits.paraphrase");
        out.kind = ParaphraseConfig::Kind::table;
        if (obj.contains("entries")) {
            const json& e = obj["entries"];
            if (!e.is_object()) fail("edits.paraphrase.entries must be an object");
            for (auto it = e.begin(); it != e.end(); ++it) {
                if (!it.value().is_array()) {
                    fail("edits.paraphrase.entries values must be arrays of strings");
                }
                std::vector<std::string> alts;
                for (const auto& a : it.value()) {
                    if (!a.is_string()) fail("edits.paraphrase.entries values must be arrays of strings");
                    alts.push_back(a.get<std::string>());
                }
                out.entries[it.key()] = std::move(alts);
            }
        }
    } else if (kind == "remote") {
        reject_unknown(obj, {"kind", "endpoint", "timeout_ms", "record"}, "edits.paraphrase");
        out.kind = ParaphraseConfig::Kind::remote;
        if (!obj.contains("endpoint")) fail("edits.paraphrase.endpoint is required for remote");
        out.endpoint = get_string(obj, "endpoint", "edits.paraphrase");
        if (out.endpoint.empty()) fail("edits.paraphrase.endpoint must be non-empty");
        if (obj.contains("timeout_ms")) {
            out.timeout_ms = get_int(obj, "timeout_ms", "edits.paraphrase", 1);
        }
        if (obj.contains("record")) out.record_path = get_string(obj, "record", "edits.paraphrase");
    } else {
        fail("edits.paraphrase.kind must be none, table or remote");
    }
}

void parse_edits(const json& obj, RunConfig& out) {
    expect_object(obj, "edits");
    reject_unknown(obj, {"ops", "paraphrase", "pool", "seed_pool_from_initial"}, "edits");
    if (obj.contains("ops")) {
        const json& ops = obj["ops"];
        if (!ops.is_array() || ops.empty()) fail("edits.ops must be a non-empty array");
        out.ops.clear();
        for (const auto& v : ops) {
            if (!v.is_string()) fail("edits.ops entries must be strings");
            auto kind = edit_kind_from_string(v.get<std::string>());
            if (!kind) fail("edits.ops entries must be delete, add, swap or paraphrase");
            if (std::find(out.ops.begin(), out.ops.end(), *kind) != out.ops.end()) {
                fail("edits.ops entries must be distinct");
            }
            out.ops.push_back(*kind);
        }
    }
    if (obj.contains("paraphrase")) parse_paraphrase(obj["paraphrase"], out.paraphrase);
    if (obj.contains("pool")) {
        const json& pool = obj["pool"];
        if (!pool.is_array()) fail("edits.pool must be an array of phrases");
        for (const auto& v : pool) {
            if (!v.is_string()) fail("edits.pool entries must be strings");
            if (make_segment(v.get<std::string>()).empty()) {
                fail("edits.pool entries must contain at least one token");
            }
            out.pool_extra.push_back(v.get<std::string>());
        }
    }
    if (obj.contains("seed_pool_from_initial")) {
        out.seed_pool_from_initial = get_bool(obj, "seed_pool_from_initial", "edits");
    }
}

}  // namespace

RunConfig parse_config(const nlohmann::json& doc) {
    expect_object(doc, "config");
    reject_unknown(doc,
                   {"algorithm", "initial_prompt", "initial_prompt_file", "segmenter", "scorer",
                    "search", "algo", "edits", "seed"},
                   "config");
    RunConfig cfg;

    if (doc.contains("algorithm")) {
        std::string a = get_string(doc, "algorithm", "config");
        auto id = algorithm_from_string(a);
        if (!id) fail("unknown algorithm id '" + a + "' (expected hc, sa, ga-m, ga-c, ts or hs)");
        cfg.algorithm = *id;
    }

    if (doc.contains("initial_prompt") && doc.contains("initial_prompt_file")) {
        fail("give either initial_prompt or initial_prompt_file, not both");
    }
    if (doc.contains("initial_prompt")) {
        cfg.initial_prompt = get_string(doc, "initial_prompt", "config");
    } else if (doc.contains("initial_prompt_file")) {
        std::string path = get_string(doc, "initial_prompt_file", "config");
        std::ifstream in(path);
        if (!in) fail("cannot read initial_prompt_file: " + path);
        std::stringstream buf;
        buf << in.rdbuf();
        cfg.initial_prompt = buf.str();
    } else {
        fail("initial_prompt is required");
    }

    if (doc.contains("segmenter")) parse_segmenter(doc["segmenter"], cfg.segmenter);

    if (!doc.contains("scorer")) fail("scorer is required");
    parse_scorer(doc["scorer"], cfg.segmenter, cfg.scorer);

    if (doc.contains("search")) parse_search(doc["search"], cfg.search);
    if (doc.contains("algo")) parse_algo(doc["algo"], cfg.algorithm, cfg.search);
    if (doc.contains("edits")) parse_edits(doc["edits"], cfg);
    if (doc.contains("seed")) cfg.seed = get_u64(doc, "seed", "config");

    // the initial prompt must segment to something non-empty before any scoring
    if (segment_prompt(cfg.initial_prompt, cfg.segmenter).empty()) {
        fail("initial prompt is empty after segmentation");
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot read config file: " + path);
    nlohmann::json doc = nlohmann::json::parse(in, nullptr, false);
    if (doc.is_discarded()) fail("config file is not valid JSON: " + path);
    return parse_config(doc);
}

nlohmann::json config_echo(const RunConfig& cfg) {
    json scorer;
    scorer["kind"] = std::string(to_string(cfg.scorer.kind));
    switch (cfg.scorer.kind) {
    case ScorerKind::keyword:
        scorer["targets"] = cfg.scorer.targets;
        break;
    case ScorerKind::target_distance:
        scorer["target"] = render_prompt(cfg.scorer.target);
        break;
    case ScorerKind::table_lookup:
        scorer["table"] = cfg.scorer.table;
        scorer["default"] = cfg.scorer.table_default;
        break;
    case ScorerKind::accuracy_remote:
        scorer["endpoint"] = cfg.scorer.endpoint;
        scorer["meta"] = cfg.scorer.meta;
        scorer["attempts"] = cfg.scorer.remote_attempts;
        scorer["retry_base_ms"] = cfg.scorer.remote_retry_base_ms;
        scorer["timeout_ms"] = cfg.scorer.remote_timeout_ms;
        break;
    }
    scorer["cache"] = cfg.scorer.cache_enabled;
    scorer["cached_hits_consume_budget"] = cfg.scorer.cached_hits_consume_budget;

    json search;
    search["max_iterations"] = cfg.search.max_iterations;
    search["candidates"] = cfg.search.candidates;
    search["num_compose"] = cfg.search.num_compose;
    search["patience"] = cfg.search.patience;
    search["budget"] = cfg.search.budget ? json(*cfg.search.budget) : json(nullptr);
    search["wall_clock_seconds"] =
        cfg.search.wall_clock_seconds ? json(*cfg.search.wall_clock_seconds) : json(nullptr);
    search["exhaustive"] = cfg.search.exhaustive;

    json algo = json::object();
    switch (cfg.algorithm) {
    case AlgorithmId::hc:
        break;
    case AlgorithmId::sa: {
        json sched;
        if (cfg.search.schedule.kind == TemperatureSchedule::Kind::exponential) {
            sched["kind"] = "exponential";
            sched["t0"] = cfg.search.schedule.t0;
            sched["tau"] = cfg.search.schedule.tau;
        } else {
            sched["kind"] = "constant";
            sched["value"] = cfg.search.schedule.value;
        }
        algo["schedule"] = std::move(sched);
        break;
    }
    case AlgorithmId::ga_m:
        algo["tournament_k"] = cfg.search.tournament_k;
        algo["archive_cap"] =
            cfg.search.archive_cap ? json(static_cast<std::uint64_t>(*cfg.search.archive_cap))
                                   : json(nullptr);
        break;
    case AlgorithmId::ga_c:
        algo["population"] = cfg.search.population;
        algo["offspring"] = cfg.search.offspring;
        algo["p_mutation"] = cfg.search.p_mutation;
        break;
    case AlgorithmId::ts:
        algo["tabu_capacity"] = cfg.search.tabu_capacity;
        algo["tabu_temp"] = cfg.search.tabu_temp;
        break;
    case AlgorithmId::hs:
        algo["memory"] = cfg.search.memory_capacity;
        algo["segments"] = cfg.search.harmony_segments;
        algo["hmcr"] = cfg.search.hmcr;
        algo["par"] = cfg.search.par;
        break;
    }

    json paraphrase;
    switch (cfg.paraphrase.kind) {
    case ParaphraseConfig::Kind::none:
        paraphrase["kind"] = "none";
        break;
    case ParaphraseConfig::Kind::table:
        paraphrase["kind"] = "table";
        paraphrase["entries"] = cfg.paraphrase.entries;
        break;
    case ParaphraseConfig::Kind::remote:
        paraphrase["kind"] = "remote";
        paraphrase["endpoint"] = cfg.paraphrase.endpoint;
        paraphrase["timeout_ms"] = cfg.paraphrase.timeout_ms;
        if (!cfg.paraphrase.record_path.empty()) paraphrase["record"] = cfg.paraphrase.record_path;
        break;
    }

    std::vector<std::string> ops;
    ops.reserve(cfg.ops.size());
    for (EditKind k : cfg.ops) ops.emplace_back(to_string(k));

    json edits;
    edits["ops"] = ops;
    edits["paraphrase"] = std::move(paraphrase);
    edits["pool"] = cfg.pool_extra;
    edits["seed_pool_from_initial"] = cfg.seed_pool_from_initial;

    json out;
    out["algorithm"] = std::string(to_string(cfg.algorithm));
    out["initial_prompt"] = cfg.initial_prompt;
    out["segmenter"] = {{"mode", cfg.segmenter.mode == SegmentMode::whitespace  ? "whitespace"
                                 : cfg.segmenter.mode == SegmentMode::delimiter ? "delimiter"
                                                                                : "fixed_width"},
                        {"delimiter", cfg.segmenter.delimiter},
                        {"tokens_per_segment", cfg.segmenter.tokens_per_segment}};
    out["scorer"] = std::move(scorer);
    out["search"] = std::move(search);
    out["algo"] = std::move(algo);
    out["edits"] = std::move(edits);
    out["seed"] = cfg.seed;
    return out;
}

void Overrides::apply(RunConfig& cfg) const {
    if (algorithm) {
        auto id = algorithm_from_string(*algorithm);
        if (!id) fail("unknown algorithm id '" + *algorithm + "' (expected hc, sa, ga-m, ga-c, ts or hs)");
        cfg.algorithm = *id;
    }
    if (seed) cfg.seed = *seed;
    if (budget) cfg.search.budget = *budget;
    if (initial_prompt) {
        cfg.initial_prompt = *initial_prompt;
        if (segment_prompt(cfg.initial_prompt, cfg.segmenter).empty()) {
            fail("initial prompt is empty after segmentation");
        }
    }
    if (max_iterations) {
        if (*max_iterations < 1) fail("max_iterations must be >= 1");
        cfg.search.max_iterations = *max_iterations;
    }
    if (candidates) {
        if (*candidates < 1) fail("candidates must be >= 1");
        cfg.search.candidates = *candidates;
    }
    if (patience) {
        if (*patience < 0) fail("patience must be >= 0");
        cfg.search.patience = *patience;
    }
}

std::unique_ptr<ParaphraseProvider> make_provider(const ParaphraseConfig& pc) {
    switch (pc.kind) {
    case ParaphraseConfig::Kind::none:
        return std::make_unique<NullParaphraseProvider>();
    case ParaphraseConfig::Kind::table:
        return std::make_unique<TableParaphraseProvider>(pc.entries);
    case ParaphraseConfig::Kind::remote:
        return std::make_unique<RemoteParaphraseProvider>(pc.endpoint, pc.timeout_ms,
                                                          remote_bearer_token_from_env(),
                                                          pc.record_path);
    }
    return std::make_unique<NullParaphraseProvider>();
}

Prompt initial_prompt_of(const RunConfig& cfg) {
    Prompt init = segment_prompt(cfg.initial_prompt, cfg.segmenter);
    if (init.empty()) fail("initial prompt is empty after segmentation");
    return init;
}

std::vector<Segment> initial_pool_of(const RunConfig& cfg) {
    std::vector<Segment> pool;
    if (cfg.seed_pool_from_initial) {
        Prompt init = initial_prompt_of(cfg);
        pool = init.segments;
    }
    for (const std::string& phrase : cfg.pool_extra) {
        Segment seg = make_segment(phrase);
        if (!seg.empty()) pool.push_back(std::move(seg));
    }
    return pool;
}

RunOutcome execute_run(const RunConfig& cfg, bool with_header) {
    Prompt init = initial_prompt_of(cfg);
    auto provider = make_provider(cfg.paraphrase);
    Neighborhood nbhd;
    nbhd.ops = cfg.ops;
    nbhd.pool = PhrasePool(initial_pool_of(cfg));
    nbhd.provider = provider.get();
    Scorer scorer(cfg.scorer);
    BudgetLedger ledger;
    ledger.max_calls = cfg.search.budget;
    RngBundle rng(cfg.seed);
    RunOutcome out = run_algorithm(cfg.algorithm, init, cfg.search, nbhd, scorer, ledger, rng);
    if (with_header) out.trace.header = nlohmann::json{{"config", config_echo(cfg)}};
    return out;
}

}  // namespace plum
