#pragma once

#include <cstdint>
#include <memory>
#include <string>

#include "json.hpp"

namespace plum {

struct RemoteScore {
    double score;
    std::uint64_t calls_consumed;  // reported by the endpoint, default 1
};

// Client for POST /v1/score {"prompt": string, "meta": object} ->
// {"score": number, "calls_consumed": int optional}. Transient failures
// (unreachable, timeout, 5xx) are retried with exponential backoff up to
// `attempts` total tries; 4xx and contract violations fail immediately.
class RemoteScoreClient {
public:
    RemoteScoreClient(std::string endpoint, nlohmann::json meta, int attempts, int retry_base_ms,
                      int timeout_ms, std::string bearer_token);
    ~RemoteScoreClient();

    // throws ScoringError / ProtocolError
    RemoteScore score(const std::string& rendered_prompt);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

// PLUM_REMOTE_TOKEN, or "" when unset
std::string remote_bearer_token_from_env();

}  // namespace plum
