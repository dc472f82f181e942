#pragma once

// Shared fixtures for the test binaries. Header-only and doctest-free so the
// acceptance binary can use it too.

#include <cstdint>
#include <deque>
#include <initializer_list>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "plum/paraphrase.hpp"
#include "plum/prompt.hpp"
#include "plum/rng.hpp"
#include "plum/scoring.hpp"

namespace plum::testing {

inline Segment S(const std::string& text) { return make_segment(text); }

// each string is one segment, whitespace-split into tokens
inline Prompt P(std::initializer_list<std::string> segs) {
    Prompt p;
    for (const auto& s : segs) p.segments.push_back(make_segment(s));
    return p;
}

// Replays scripted draws and fails loudly when the code under test draws a
// different count or kind than expected.
class ScriptedSource final : public RandomSource {
public:
    std::deque<std::uint64_t> picks;
    std::deque<double> reals;

    ScriptedSource() = default;
    ScriptedSource(std::deque<std::uint64_t> p, std::deque<double> r)
        : picks(std::move(p)), reals(std::move(r)) {}

    std::uint64_t pick(std::uint64_t n) override {
        if (picks.empty()) throw std::logic_error("ScriptedSource: pick() beyond script");
        const std::uint64_t v = picks.front();
        picks.pop_front();
        if (v >= n) throw std::logic_error("ScriptedSource: scripted pick out of range");
        return v;
    }

    double real() override {
        if (reals.empty()) throw std::logic_error("ScriptedSource: real() beyond script");
        const double v = reals.front();
        reals.pop_front();
        return v;
    }

    bool drained() const { return picks.empty() && reals.empty(); }
};

inline TableParaphraseProvider table_provider(
    const std::map<std::string, std::vector<std::string>>& entries) {
    return TableParaphraseProvider(entries);
}

inline ScorerSpec keyword_spec(std::vector<std::string> targets) {
    ScorerSpec spec;
    spec.kind = ScorerKind::keyword;
    spec.targets = std::move(targets);
    return spec;
}

inline ScorerSpec table_spec(std::map<std::string, double> table, double fallback = 0.0) {
    ScorerSpec spec;
    spec.kind = ScorerKind::table_lookup;
    spec.table = std::move(table);
    spec.table_default = fallback;
    return spec;
}

// deterministic word soup for fuzz-style cases
inline Prompt random_prompt(RandomSource& rng, const std::vector<std::string>& vocab,
                            std::size_t max_segments, std::size_t max_tokens_per_segment = 1) {
    Prompt p;
    const std::size_t n_seg = 1 + rng.pick(max_segments);
    for (std::size_t i = 0; i < n_seg; ++i) {
        Segment s;
        const std::size_t n_tok = 1 + rng.pick(max_tokens_per_segment);
        for (std::size_t j = 0; j < n_tok; ++j) s.push_back(vocab[rng.pick(vocab.size())]);
        p.segments.push_back(std::move(s));
    }
    return p;
}

}  // namespace plum::testing
