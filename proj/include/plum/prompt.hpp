#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace plum {

using Token = std::string;
// A segment is an ordered, non-empty list of tokens. Tokens are non-empty and
// carry no internal whitespace after normalization.
using Segment = std::vector<Token>;

// The search point: an ordered list of segments. Zero segments is legal only
// as an intermediate value (crossover); algorithms never emit it as a result.
struct Prompt {
    std::vector<Segment> segments;

    std::size_t size() const { return segments.size(); }
    bool empty() const { return segments.empty(); }

    friend bool operator==(const Prompt&, const Prompt&) = default;
    friend auto operator<=>(const Prompt&, const Prompt&) = default;
};

// Tokens joined by single spaces in segment order. Segment boundaries are not
// recoverable from the rendered form; the empty prompt renders as "".
std::string render_prompt(const Prompt& p);

std::size_t token_count(const Prompt& p);

// One segment from a phrase: whitespace-split tokens. Blank input gives an
// empty (invalid) segment; callers decide whether to drop it.
Segment make_segment(std::string_view text);

enum class SegmentMode { whitespace, delimiter, fixed_width };

struct SegmenterConfig {
    SegmentMode mode = SegmentMode::whitespace;
    std::string delimiter = ",";
    // whitespace mode: tokens per segment (n-gram size).
    // fixed_width mode: desired segment count; tokens are split into that many
    // balanced contiguous runs (clamped to the token count).
    int tokens_per_segment = 1;
};

// Deterministic for a fixed config; never produces empty segments.
// Empty or whitespace-only text yields the empty Prompt.
Prompt segment_prompt(std::string_view text, const SegmenterConfig& cfg = {});

// True when every segment is non-empty and every token is a non-empty string
// without whitespace.
bool prompt_valid(const Prompt& p);

}  // namespace plum
