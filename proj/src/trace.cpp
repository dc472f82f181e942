#include "plum/trace.hpp"

#include <cmath>
#include <fstream>

namespace plum {

std::string_view to_string(StopReason r) {
    switch (r) {
    case StopReason::iterations: return "iterations";
    case StopReason::patience: return "patience";
    case StopReason::budget: return "budget";
    }
    return "?";
}

nlohmann::json to_json(const IterationRecord& rec) {
    nlohmann::json cands = nlohmann::json::array();
    for (const TraceCandidate& c : rec.candidates) {
        cands.push_back({{"prompt", c.prompt}, {"score", c.score}});
    }
    return nlohmann::json{{"iter", rec.iter},
                          {"best_score", rec.best_score},
                          {"accepted", rec.accepted},
                          {"candidates", std::move(cands)},
                          {"budget_used", rec.budget_used},
                          {"patience", rec.patience}};
}

nlohmann::json final_record_json(const SearchTrace& t) {
    nlohmann::json out;
    out["result"] = t.result;
    if (std::isnan(t.result_score)) {
        out["result_score"] = nullptr;
    } else {
        out["result_score"] = t.result_score;
    }
    out["stop_reason"] = to_string(t.stop_reason);
    return out;
}

std::string trace_to_string(const SearchTrace& t) {
    std::string out;
    if (!t.header.is_null()) {
        out += t.header.dump();
        out += '\n';
    }
    for (const IterationRecord& rec : t.iterations) {
        out += to_json(rec).dump();
        out += '\n';
    }
    out += final_record_json(t).dump();
    out += '\n';
    return out;
}

void emit_trace(const SearchTrace& t, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open trace file for writing: " + path.string());
    out << trace_to_string(t);
    out.flush();
    if (!out) throw std::runtime_error("failed writing trace file: " + path.string());
}

}  // namespace plum
