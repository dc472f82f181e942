#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "plum/config.hpp"

namespace plum {

inline constexpr int exit_ok = 0;
inline constexpr int exit_usage = 2;
inline constexpr int exit_runtime = 3;

// "12" -> seeds 0..11; "3..7" -> 3,4,5,6,7 (inclusive). Throws ConfigError on
// anything else.
std::vector<std::uint64_t> parse_seed_spec(const std::string& spec);

struct RunFlags {
    std::string config_path;
    std::string output_path;  // trace JSONL; empty = no trace file
    bool force = false;
};

struct SweepFlags {
    std::string config_path;
    std::string seeds = "10";
    std::string report_path;  // TrialReport JSON
    std::string trace_dir;    // per-seed trace-<seed>.jsonl
    std::string csv_path;
    int jobs = 1;             // serial by default for stable output ordering
    bool sample_std = false;
    bool force = false;
};

struct OracleFlags {
    std::string config_path;
    int depth = 2;
    std::size_t node_cap = 1000000;
};

struct ReplayFlags {
    std::string trace_path;
    std::string output_path;  // re-emitted trace
    bool check = false;       // compare re-emission with the input bytes
    bool force = false;
};

// All human-readable output goes to `out`, diagnostics to `err`. Exit codes:
// 0 success, 2 usage/config, 3 runtime (scoring/IO/mismatch).
int cmd_run(const RunFlags& flags, const Overrides& ov, std::ostream& out, std::ostream& err);
int cmd_sweep(const SweepFlags& flags, const Overrides& ov, std::ostream& out, std::ostream& err);
int cmd_oracle(const OracleFlags& flags, const Overrides& ov, std::ostream& out,
               std::ostream& err);
int cmd_replay(const ReplayFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace plum
