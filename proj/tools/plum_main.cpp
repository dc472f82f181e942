#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "plum/cli.hpp"

namespace {

void add_override_flags(CLI::App& cmd, plum::Overrides& ov) {
    cmd.add_option("--algorithm", ov.algorithm, "Algorithm id: hc, sa, ga-m, ga-c, ts, hs");
    cmd.add_option("--seed", ov.seed, "RNG seed");
    cmd.add_option("--budget", ov.budget, "Scorer call budget");
    cmd.add_option("--initial-prompt", ov.initial_prompt, "Initial prompt text");
    cmd.add_option("--max-iterations", ov.max_iterations, "Iteration cap");
    cmd.add_option("--candidates", ov.candidates, "Candidates per iteration");
    cmd.add_option("--patience", ov.patience, "Non-improving iterations tolerated");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"plum: discrete prompt search over segment edits"};
    app.require_subcommand(1);

    plum::RunFlags run_flags;
    plum::Overrides run_ov;
    CLI::App* run = app.add_subcommand("run", "Execute one search run");
    run->add_option("--config", run_flags.config_path, "Config JSON path")->required();
    run->add_option("--output", run_flags.output_path, "Trace JSONL output path");
    run->add_flag("--force", run_flags.force, "Overwrite existing outputs");
    add_override_flags(*run, run_ov);

    plum::SweepFlags sweep_flags;
    plum::Overrides sweep_ov;
    CLI::App* sweep = app.add_subcommand("sweep", "Run one seed per trial and aggregate");
    sweep->add_option("--config", sweep_flags.config_path, "Config JSON path")->required();
    sweep->add_option("--seeds", sweep_flags.seeds, "Seed spec: N (0..N-1) or A..B inclusive");
    sweep->add_option("--report", sweep_flags.report_path, "Trial report JSON path");
    sweep->add_option("--trace-dir", sweep_flags.trace_dir, "Directory for per-seed traces");
    sweep->add_option("--csv", sweep_flags.csv_path, "Per-seed CSV path");
    sweep->add_option("--jobs", sweep_flags.jobs, "Parallel trials (default 1)");
    sweep->add_flag("--sample-std", sweep_flags.sample_std, "Use sample (n-1) std dev");
    sweep->add_flag("--force", sweep_flags.force, "Overwrite existing outputs");
    add_override_flags(*sweep, sweep_ov);

    plum::OracleFlags oracle_flags;
    plum::Overrides oracle_ov;
    CLI::App* oracle = app.add_subcommand("oracle", "Enumerate reachable prompts and print the optimum");
    oracle->add_option("--config", oracle_flags.config_path, "Config JSON path")->required();
    oracle->add_option("--depth", oracle_flags.depth, "Edit depth to enumerate (default 2)");
    oracle->add_option("--cap", oracle_flags.node_cap, "Search-state cap (default 1000000)");
    add_override_flags(*oracle, oracle_ov);

    plum::ReplayFlags replay_flags;
    CLI::App* replay = app.add_subcommand("replay", "Re-run a trace from its embedded config");
    replay->add_option("--trace", replay_flags.trace_path, "Trace JSONL to replay")->required();
    replay->add_option("--output", replay_flags.output_path, "Where to write the re-emitted trace");
    replay->add_flag("--check", replay_flags.check, "Compare the re-emission with the input bytes");
    replay->add_flag("--force", replay_flags.force, "Overwrite existing outputs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? plum::exit_ok : plum::exit_usage;
    }

    if (run->parsed()) return plum::cmd_run(run_flags, run_ov, std::cout, std::cerr);
    if (sweep->parsed()) return plum::cmd_sweep(sweep_flags, sweep_ov, std::cout, std::cerr);
    if (oracle->parsed()) return plum::cmd_oracle(oracle_flags, oracle_ov, std::cout, std::cerr);
    if (replay->parsed()) return plum::cmd_replay(replay_flags, std::cout, std::cerr);
    return plum::exit_usage;
}
