#include "plum/remote.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <thread>
#include <unordered_map>

#include "httplib.h"

#include "plum/paraphrase.hpp"
#include "plum/scoring.hpp"

namespace plum {

std::string remote_bearer_token_from_env() {
    const char* tok = std::getenv("PLUM_REMOTE_TOKEN");
    return tok ? tok : "";
}

namespace {

httplib::Headers auth_headers(const std::string& bearer) {
    httplib::Headers h;
    if (!bearer.empty()) h.emplace("Authorization", "Bearer " + bearer);
    return h;
}

void configure(httplib::Client& cli, int timeout_ms) {
    cli.set_connection_timeout(std::chrono::milliseconds(timeout_ms));
    cli.set_read_timeout(std::chrono::milliseconds(timeout_ms));
    cli.set_write_timeout(std::chrono::milliseconds(timeout_ms));
}

bool transient(const httplib::Result& res) {
    if (!res) return true;              // connect failure, timeout, reset
    return res->status >= 500;
}

}  // namespace

struct RemoteScoreClient::Impl {
    std::string endpoint;
    nlohmann::json meta;
    int attempts;
    int retry_base_ms;
    int timeout_ms;
    std::string bearer;
};

RemoteScoreClient::RemoteScoreClient(std::string endpoint, nlohmann::json meta, int attempts,
                                     int retry_base_ms, int timeout_ms, std::string bearer_token)
    : impl_(new Impl{std::move(endpoint), std::move(meta), attempts < 1 ? 1 : attempts,
                     retry_base_ms, timeout_ms, std::move(bearer_token)}) {}

RemoteScoreClient::~RemoteScoreClient() = default;

RemoteScore RemoteScoreClient::score(const std::string& rendered_prompt) {
    nlohmann::json body{{"prompt", rendered_prompt}, {"meta", impl_->meta}};
    std::string payload = body.dump();

    httplib::Result res;
    for (int attempt = 1; attempt <= impl_->attempts; ++attempt) {
        httplib::Client cli(impl_->endpoint);
        configure(cli, impl_->timeout_ms);
        res = cli.Post("/v1/score", auth_headers(impl_->bearer), payload, "application/json");
        if (!transient(res)) break;
        if (attempt == impl_->attempts) {
            throw ScoringError("remote scorer failed after " + std::to_string(impl_->attempts) +
                               " attempts: " + (res ? "status " + std::to_string(res->status)
                                                    : httplib::to_string(res.error())));
        }
        std::this_thread::sleep_for(std::chrono::milliseconds(
            static_cast<long long>(impl_->retry_base_ms) << (attempt - 1)));
    }

    if (res->status < 200 || res->status >= 300) {
        throw ScoringError("remote scorer rejected the request: status " +
                           std::to_string(res->status));
    }
    nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
    if (reply.is_discarded() || !reply.is_object() || !reply.contains("score") ||
        !reply["score"].is_number()) {
        throw ProtocolError("remote scorer returned a malformed body");
    }
    double s = reply["score"].get<double>();
    if (s < 0.0 || s > 1.0) {
        throw ProtocolError("remote scorer returned a score outside [0,1]: " + std::to_string(s));
    }
    std::uint64_t consumed = 1;
    if (reply.contains("calls_consumed")) {
        const auto& cc = reply["calls_consumed"];
        if (!cc.is_number_integer() || cc.get<long long>() < 0) {
            throw ProtocolError("remote scorer returned an invalid calls_consumed");
        }
        consumed = cc.get<std::uint64_t>();
    }
    return RemoteScore{s, consumed};
}

struct RemoteParaphraseProvider::Impl {
    std::string endpoint;
    int timeout_ms;
    std::string bearer;
    std::string record_path;
    std::unordered_map<std::string, std::vector<Segment>> memo;

    void load_record() {
        if (record_path.empty()) return;
        std::ifstream in(record_path);
        if (!in) return;
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            nlohmann::json row = nlohmann::json::parse(line, nullptr, false);
            if (row.is_discarded() || !row.is_object() || !row.contains("phrase")) continue;
            std::vector<Segment> alts;
            if (row.contains("candidates") && row["candidates"].is_array()) {
                for (const auto& c : row["candidates"]) {
                    if (!c.is_string()) continue;
                    Segment seg = make_segment(c.get<std::string>());
                    if (!seg.empty()) alts.push_back(std::move(seg));
                }
            }
            memo[row["phrase"].get<std::string>()] = std::move(alts);
        }
    }

    void append_record(const std::string& phrase, const std::vector<Segment>& alts) {
        if (record_path.empty()) return;
        nlohmann::json row;
        row["phrase"] = phrase;
        nlohmann::json arr = nlohmann::json::array();
        for (const Segment& s : alts) arr.push_back(render_prompt(Prompt{{s}}));
        row["candidates"] = std::move(arr);
        std::ofstream out(record_path, std::ios::app);
        out << row.dump() << '\n';
    }

    std::vector<Segment> fetch(const std::string& phrase) {
        httplib::Client cli(endpoint);
        configure(cli, timeout_ms);
        nlohmann::json body{{"phrase", phrase}};
        httplib::Result res =
            cli.Post("/v1/paraphrase", auth_headers(bearer), body.dump(), "application/json");
        // any failure means "no alternatives", never an error
        if (!res || res->status < 200 || res->status >= 300) return {};
        nlohmann::json reply = nlohmann::json::parse(res->body, nullptr, false);
        if (reply.is_discarded() || !reply.is_object() || !reply.contains("candidates") ||
            !reply["candidates"].is_array()) {
            return {};
        }
        std::vector<Segment> alts;
        for (const auto& c : reply["candidates"]) {
            if (!c.is_string()) continue;
            Segment seg = make_segment(c.get<std::string>());
            if (!seg.empty()) alts.push_back(std::move(seg));
        }
        return alts;
    }
};

RemoteParaphraseProvider::RemoteParaphraseProvider(std::string endpoint, int timeout_ms,
                                                   std::string bearer_token, std::string record_path)
    : impl_(new Impl{std::move(endpoint), timeout_ms, std::move(bearer_token),
                     std::move(record_path), {}}) {
    impl_->load_record();
}

RemoteParaphraseProvider::~RemoteParaphraseProvider() = default;

std::vector<Segment> RemoteParaphraseProvider::alternatives(const Segment& s) {
    std::string phrase = render_prompt(Prompt{{s}});
    auto it = impl_->memo.find(phrase);
    if (it != impl_->memo.end()) return it->second;
    std::vector<Segment> alts = impl_->fetch(phrase);
    impl_->memo.emplace(phrase, alts);
    impl_->append_record(phrase, alts);
    return alts;
}

}  // namespace plum
