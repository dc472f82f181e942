#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plum/paraphrase.hpp"
#include "plum/prompt.hpp"
#include "plum/rng.hpp"

namespace plum {

enum class EditKind { del, add, swap, par };

// "delete" / "add" / "swap" / "paraphrase"
std::string_view to_string(EditKind k);
std::optional<EditKind> edit_kind_from_string(std::string_view s);

inline std::vector<EditKind> all_edit_kinds() {
    return {EditKind::del, EditKind::add, EditKind::swap, EditKind::par};
}

// Segments available to the add operator (a multiset). Deletions deposit into
// a pending buffer; commit() publishes pending deposits, which the search loop
// calls between iterations so that all candidates of one iteration sample the
// same pool snapshot.
class PhrasePool {
public:
    PhrasePool() = default;
    explicit PhrasePool(std::vector<Segment> initial) : available_(std::move(initial)) {}

    void deposit(Segment s) { pending_.push_back(std::move(s)); }
    void commit();

    bool empty() const { return available_.empty(); }
    std::size_t size() const { return available_.size(); }
    const Segment& at(std::size_t i) const { return available_[i]; }
    const std::vector<Segment>& available() const { return available_; }
    const std::vector<Segment>& pending() const { return pending_; }

private:
    std::vector<Segment> available_;
    std::vector<Segment> pending_;
};

struct EditResult {
    Prompt prompt;
    // e.g. "delete[1]", "swap[0,2]", compositions joined with '+';
    // "identity" when no edit could be applied
    std::string descriptor;
};

// One edit of the given kind. Feasibility is checked before any draw:
//   delete     needs >= 2 segments; removes a uniform segment, deposits it
//   add        needs a non-empty pool; uniform pool segment, uniform position
//              in 0..len inclusive
//   swap       needs >= 2 segments; two distinct uniform positions, drawn
//              without replacement
//   paraphrase needs >= 1 segment with provider alternatives; uniform among
//              those segments, then a uniform alternative
// Infeasible kinds return nullopt having consumed no draws. The input prompt
// is never modified.
std::optional<EditResult> apply_edit(const Prompt& p, EditKind kind, PhrasePool& pool,
                                     ParaphraseProvider& provider, RandomSource& rng);

// l sequential edits; each step samples a kind uniformly from ops, resampling
// among the kinds not yet tried this step when infeasible. When every kind is
// infeasible at some step the prompt accumulated so far is returned.
EditResult compose_edits(const Prompt& p, int l, const std::vector<EditKind>& ops,
                         PhrasePool& pool, ParaphraseProvider& provider, RandomSource& rng);

// Exactly m prompts, each an independent compose_edits draw from base with l
// drawn uniformly from compose_choices (no draw when it has one entry).
// Duplicates permitted; dedup is the caller's business.
std::vector<EditResult> sample_neighborhood(const Prompt& base, int m,
                                            const std::vector<int>& compose_choices,
                                            const std::vector<EditKind>& ops, PhrasePool& pool,
                                            ParaphraseProvider& provider, RandomSource& rng);

// Every single-edit neighbor, deterministically ordered (ops in the given
// order; positions ascending), consuming no randomness. Deleted segments are
// still deposited into the pool. Adds enumerate distinct pool segments once
// each (multiset multiplicity only repeats outcomes).
std::vector<EditResult> enumerate_neighborhood(const Prompt& base, const std::vector<EditKind>& ops,
                                               PhrasePool& pool, ParaphraseProvider& provider);

// Prefix of p1 up to the split, suffix of p2 after it. split is drawn
// uniformly from {0..max(L1,L2)}; result = first min(split, L1) segments of
// p1, then p2's segments with index >= split. An empty result is replaced by
// p1 so that algorithms never score an empty prompt.
Prompt crossover(const Prompt& p1, const Prompt& p2, RandomSource& rng);

// Deterministic core of crossover for a known split, used by the brute-force
// oracle tests.
Prompt crossover_at(const Prompt& p1, const Prompt& p2, std::size_t split);

}  // namespace plum
