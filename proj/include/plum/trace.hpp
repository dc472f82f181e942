#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

namespace plum {

enum class StopReason { iterations, patience, budget };
std::string_view to_string(StopReason r);

struct TraceCandidate {
    std::string prompt;  // rendered
    double score;
};

struct IterationRecord {
    int iter;                // 1-based
    double best_score;       // running max over everything scored so far
    std::string accepted;    // rendered prompt the iteration settled on
    std::vector<TraceCandidate> candidates;
    std::uint64_t budget_used;
    int patience;            // remaining after the iteration's decision
};

// Append-only per-run record. `header` is an optional config echo emitted as
// the first line; result_score is NaN when the run ended before the initial
// prompt could be scored (serialized as null).
struct SearchTrace {
    nlohmann::json header;  // null = no header line
    std::vector<IterationRecord> iterations;
    std::string result;
    double result_score = std::numeric_limits<double>::quiet_NaN();
    StopReason stop_reason = StopReason::iterations;
};

nlohmann::json to_json(const IterationRecord& rec);
nlohmann::json final_record_json(const SearchTrace& t);

// One JSON object per line: optional header, one line per iteration, final
// line with result/result_score/stop_reason.
std::string trace_to_string(const SearchTrace& t);

// Writes trace_to_string; throws std::runtime_error with the path in the
// message on I/O failure.
void emit_trace(const SearchTrace& t, const std::filesystem::path& path);

}  // namespace plum
