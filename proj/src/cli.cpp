#include "plum/cli.hpp"

#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "plum/harness.hpp"
#include "plum/trace.hpp"

namespace plum {

namespace {

std::uint64_t parse_u64(const std::string& s) {
    if (s.empty()) throw ConfigError("empty number in seed spec");
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw ConfigError("invalid seed spec: '" + s + "'");
    return std::stoull(s);
}

bool refuse_existing(const std::filesystem::path& path, bool force, std::ostream& err) {
    if (!force && std::filesystem::exists(path)) {
        err << "error: refusing to overwrite " << path.string() << " (use --force)\n";
        return true;
    }
    return false;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::string fmt_number(double v) { return nlohmann::json(v).dump(); }

}  // namespace

std::vector<std::uint64_t> parse_seed_spec(const std::string& spec) {
    const auto dots = spec.find("..");
    std::vector<std::uint64_t> seeds;
    if (dots == std::string::npos) {
        const std::uint64_t n = parse_u64(spec);
        seeds.reserve(n);
        for (std::uint64_t s = 0; s < n; ++s) seeds.push_back(s);
        return seeds;
    }
    const std::uint64_t lo = parse_u64(spec.substr(0, dots));
    const std::uint64_t hi = parse_u64(spec.substr(dots + 2));
    if (lo > hi) throw ConfigError("seed range is empty: '" + spec + "'");
    seeds.reserve(hi - lo + 1);
    for (std::uint64_t s = lo;; ++s) {
        seeds.push_back(s);
        if (s == hi) break;
    }
    return seeds;
}

int cmd_run(const RunFlags& flags, const Overrides& ov, std::ostream& out, std::ostream& err) {
    try {
        RunConfig cfg = load_config_file(flags.config_path);
        ov.apply(cfg);
        if (!flags.output_path.empty() && refuse_existing(flags.output_path, flags.force, err))
            return exit_usage;

        RunOutcome outcome = execute_run(cfg);
        if (!flags.output_path.empty()) emit_trace(outcome.trace, flags.output_path);

        out << "result: " << render_prompt(outcome.result) << "\n";
        out << "score: "
            << (std::isnan(outcome.result_score) ? std::string("n/a")
                                                 : fmt_number(outcome.result_score))
            << "\n";
        out << "calls: " << outcome.calls_used << "\n";
        out << "stop: " << to_string(outcome.stop_reason) << "\n";
        return exit_ok;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}

int cmd_sweep(const SweepFlags& flags, const Overrides& ov, std::ostream& out, std::ostream& err) {
    try {
        RunConfig cfg = load_config_file(flags.config_path);
        ov.apply(cfg);

        const std::vector<std::uint64_t> seeds = parse_seed_spec(flags.seeds);
        if (seeds.empty()) throw ConfigError("seed spec names no seeds: '" + flags.seeds + "'");

        if (!flags.report_path.empty() && refuse_existing(flags.report_path, flags.force, err))
            return exit_usage;
        if (!flags.csv_path.empty() && refuse_existing(flags.csv_path, flags.force, err))
            return exit_usage;
        if (!flags.trace_dir.empty()) {
            std::filesystem::create_directories(flags.trace_dir);
            for (std::uint64_t s : seeds) {
                const auto p = std::filesystem::path(flags.trace_dir) /
                               ("trace-" + std::to_string(s) + ".jsonl");
                if (refuse_existing(p, flags.force, err)) return exit_usage;
            }
        }

        std::vector<std::optional<RunOutcome>> outcomes;
        const TrialReport report =
            run_trials(cfg, seeds, flags.jobs, flags.sample_std, &outcomes);

        for (const TrialRow& row : report.per_seed)
            if (!row.ok) err << "seed " << row.seed << " failed: " << row.error << "\n";

        if (!flags.report_path.empty())
            write_text_file(flags.report_path, report_json(report).dump(2) + "\n");
        if (!flags.csv_path.empty()) write_text_file(flags.csv_path, report_csv(report));
        if (!flags.trace_dir.empty()) {
            for (std::size_t i = 0; i < seeds.size(); ++i) {
                if (!outcomes[i]) continue;
                const auto p = std::filesystem::path(flags.trace_dir) /
                               ("trace-" + std::to_string(seeds[i]) + ".jsonl");
                emit_trace(outcomes[i]->trace, p);
            }
        }

        if (report.failures == report.per_seed.size()) {
            err << "error: all " << report.per_seed.size() << " trials failed\n";
            return exit_runtime;
        }
        out << format_mean_std(report.mean, report.std_dev) << "\n";
        return exit_ok;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}

int cmd_oracle(const OracleFlags& flags, const Overrides& ov, std::ostream& out,
               std::ostream& err) {
    try {
        RunConfig cfg = load_config_file(flags.config_path);
        ov.apply(cfg);
        if (cfg.scorer.kind == ScorerKind::accuracy_remote)
            throw ConfigError("oracle requires a local scorer");
        if (cfg.paraphrase.kind == ParaphraseConfig::Kind::remote)
            throw ConfigError("oracle requires a deterministic paraphrase source");
        if (flags.depth < 0) throw ConfigError("depth must be >= 0");

        const Prompt init = initial_prompt_of(cfg);
        const auto provider = make_provider(cfg.paraphrase);

        EnumerationConfig ec;
        ec.ops = cfg.ops;
        ec.pool_initial = initial_pool_of(cfg);
        ec.provider = provider.get();
        ec.node_cap = flags.node_cap;

        const ReachableSet set = enumerate_reachable(init, ec, flags.depth);
        if (!set.complete) {
            err << "error: node cap exceeded: " << set.node_cap << "\n";
            return exit_runtime;
        }

        Scorer scorer(cfg.scorer);
        const auto [best, best_score] = oracle_optimum(set, scorer);
        out << "reachable: " << set.prompts.size() << "\n";
        out << "optimum: " << render_prompt(best) << "\n";
        out << "optimum_score: " << fmt_number(best_score) << "\n";
        return exit_ok;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}

int cmd_replay(const ReplayFlags& flags, std::ostream& out, std::ostream& err) {
    try {
        if (flags.output_path.empty() && !flags.check)
            throw ConfigError("replay needs --output and/or --check");

        std::ifstream in(flags.trace_path, std::ios::binary);
        if (!in) throw std::runtime_error("cannot open " + flags.trace_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        const std::string original = buf.str();

        std::istringstream lines(original);
        std::string first_line;
        if (!std::getline(lines, first_line) || first_line.empty())
            throw ConfigError("trace is empty: " + flags.trace_path);

        nlohmann::json header = nlohmann::json::parse(first_line, nullptr, false);
        if (header.is_discarded() || !header.is_object() || !header.contains("config"))
            throw ConfigError("trace has no config header; cannot replay");

        RunConfig cfg = parse_config(header.at("config"));
        if (!flags.output_path.empty() && refuse_existing(flags.output_path, flags.force, err))
            return exit_usage;

        const RunOutcome outcome = execute_run(cfg);
        const std::string replayed = trace_to_string(outcome.trace);

        if (!flags.output_path.empty()) write_text_file(flags.output_path, replayed);
        if (flags.check) {
            if (replayed != original) {
                err << "error: replay mismatch: re-emitted trace differs from "
                    << flags.trace_path << "\n";
                return exit_runtime;
            }
            out << "replay matches: " << flags.trace_path << "\n";
        }
        return exit_ok;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_runtime;
    }
}

}  // namespace plum
