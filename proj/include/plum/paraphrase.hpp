#pragma once

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "plum/prompt.hpp"

namespace plum {

// Source of alternatives for the paraphrase operator. Implementations must be
// deterministic for the lifetime of a run: same segment, same answer.
class ParaphraseProvider {
public:
    virtual ~ParaphraseProvider() = default;
    // zero or more non-empty replacement segments, in a stable order
    virtual std::vector<Segment> alternatives(const Segment& s) = 0;
};

// No alternatives, ever. The default when a config names no provider.
class NullParaphraseProvider final : public ParaphraseProvider {
public:
    std::vector<Segment> alternatives(const Segment&) override { return {}; }
};

// Static synonym table keyed on the rendered segment. Entry order is the
// insertion order of the alternatives.
class TableParaphraseProvider final : public ParaphraseProvider {
public:
    TableParaphraseProvider() = default;
    explicit TableParaphraseProvider(const std::map<std::string, std::vector<std::string>>& entries);

    // phrase and alternatives are whitespace-split into segments; blank
    // alternatives are dropped
    void add_entry(std::string_view phrase, const std::vector<std::string>& alts);

    std::vector<Segment> alternatives(const Segment& s) override;

private:
    std::map<std::string, std::vector<Segment>> table_;
};

// Remote provider speaking POST /v1/paraphrase {"phrase": string} ->
// {"candidates": [string, ...]}. Unreachable endpoint, non-2xx status or a
// malformed body all mean "no alternatives", never an error. Responses are
// memoized for the process lifetime and optionally appended to a JSONL record
// file that is preloaded on construction, so a recorded run replays without
// the network.
class RemoteParaphraseProvider final : public ParaphraseProvider {
public:
    RemoteParaphraseProvider(std::string endpoint, int timeout_ms, std::string bearer_token,
                             std::string record_path = {});
    ~RemoteParaphraseProvider() override;

    std::vector<Segment> alternatives(const Segment& s) override;

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace plum
