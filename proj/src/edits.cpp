#include "plum/edits.hpp"

#include <algorithm>
#include <set>

namespace plum {

std::string_view to_string(EditKind k) {
    switch (k) {
    case EditKind::del: return "delete";
    case EditKind::add: return "add";
    case EditKind::swap: return "swap";
    case EditKind::par: return "paraphrase";
    }
    return "?";
}

std::optional<EditKind> edit_kind_from_string(std::string_view s) {
    if (s == "delete") return EditKind::del;
    if (s == "add") return EditKind::add;
    if (s == "swap") return EditKind::swap;
    if (s == "paraphrase") return EditKind::par;
    return std::nullopt;
}

void PhrasePool::commit() {
    for (Segment& s : pending_) available_.push_back(std::move(s));
    pending_.clear();
}

namespace {

std::string idx1(std::string_view name, std::size_t i) {
    std::string out(name);
    out += '[';
    out += std::to_string(i);
    out += ']';
    return out;
}

std::string idx2(std::string_view name, std::size_t i, std::size_t j) {
    std::string out(name);
    out += '[';
    out += std::to_string(i);
    out += ',';
    out += std::to_string(j);
    out += ']';
    return out;
}

}  // namespace

std::optional<EditResult> apply_edit(const Prompt& p, EditKind kind, PhrasePool& pool,
                                     ParaphraseProvider& provider, RandomSource& rng) {
    const std::size_t L = p.size();
    switch (kind) {
    case EditKind::del: {
        if (L < 2) return std::nullopt;
        std::size_t i = rng.pick(L);
        Prompt out = p;
        pool.deposit(out.segments[i]);
        out.segments.erase(out.segments.begin() + static_cast<std::ptrdiff_t>(i));
        return EditResult{std::move(out), idx1("delete", i)};
    }
    case EditKind::add: {
        if (pool.empty()) return std::nullopt;
        std::size_t which = rng.pick(pool.size());
        std::size_t pos = rng.pick(L + 1);
        Prompt out = p;
        out.segments.insert(out.segments.begin() + static_cast<std::ptrdiff_t>(pos), pool.at(which));
        return EditResult{std::move(out), idx1("add", pos)};
    }
    case EditKind::swap: {
        if (L < 2) return std::nullopt;
        std::size_t i = rng.pick(L);
        std::size_t j = rng.pick(L - 1);
        if (j >= i) ++j;
        Prompt out = p;
        std::swap(out.segments[i], out.segments[j]);
        return EditResult{std::move(out), idx2("swap", i, j)};
    }
    case EditKind::par: {
        std::vector<std::size_t> where;
        for (std::size_t i = 0; i < L; ++i) {
            if (!provider.alternatives(p.segments[i]).empty()) where.push_back(i);
        }
        if (where.empty()) return std::nullopt;
        std::size_t i = where[rng.pick(where.size())];
        std::vector<Segment> alts = provider.alternatives(p.segments[i]);
        Prompt out = p;
        out.segments[i] = alts[rng.pick(alts.size())];
        return EditResult{std::move(out), idx1("paraphrase", i)};
    }
    }
    return std::nullopt;
}

EditResult compose_edits(const Prompt& p, int l, const std::vector<EditKind>& ops,
                         PhrasePool& pool, ParaphraseProvider& provider, RandomSource& rng) {
    Prompt cur = p;
    std::string descriptor;
    for (int step = 0; step < l; ++step) {
        std::vector<EditKind> untried = ops;
        bool applied = false;
        while (!untried.empty()) {
            std::size_t k = rng.pick(untried.size());
            EditKind kind = untried[k];
            if (auto res = apply_edit(cur, kind, pool, provider, rng)) {
                cur = std::move(res->prompt);
                if (!descriptor.empty()) descriptor += '+';
                descriptor += res->descriptor;
                applied = true;
                break;
            }
            untried.erase(untried.begin() + static_cast<std::ptrdiff_t>(k));
        }
        // every kind infeasible: keep what has been accumulated so far
        if (!applied) break;
    }
    if (descriptor.empty()) descriptor = "identity";
    return EditResult{std::move(cur), std::move(descriptor)};
}

std::vector<EditResult> sample_neighborhood(const Prompt& base, int m,
                                            const std::vector<int>& compose_choices,
                                            const std::vector<EditKind>& ops, PhrasePool& pool,
                                            ParaphraseProvider& provider, RandomSource& rng) {
    std::vector<EditResult> out;
    out.reserve(static_cast<std::size_t>(m));
    for (int c = 0; c < m; ++c) {
        int l = compose_choices.size() == 1
                    ? compose_choices[0]
                    : compose_choices[rng.pick(compose_choices.size())];
        out.push_back(compose_edits(base, l, ops, pool, provider, rng));
    }
    return out;
}

std::vector<EditResult> enumerate_neighborhood(const Prompt& base, const std::vector<EditKind>& ops,
                                               PhrasePool& pool, ParaphraseProvider& provider) {
    std::vector<EditResult> out;
    const std::size_t L = base.size();
    for (EditKind kind : ops) {
        switch (kind) {
        case EditKind::del: {
            if (L < 2) break;
            for (std::size_t i = 0; i < L; ++i) {
                Prompt child = base;
                pool.deposit(child.segments[i]);
                child.segments.erase(child.segments.begin() + static_cast<std::ptrdiff_t>(i));
                out.push_back({std::move(child), idx1("delete", i)});
            }
            break;
        }
        case EditKind::add: {
            std::set<Segment> seen;
            for (const Segment& seg : pool.available()) {
                if (!seen.insert(seg).second) continue;
                for (std::size_t pos = 0; pos <= L; ++pos) {
                    Prompt child = base;
                    child.segments.insert(child.segments.begin() + static_cast<std::ptrdiff_t>(pos), seg);
                    out.push_back({std::move(child), idx1("add", pos)});
                }
            }
            break;
        }
        case EditKind::swap: {
            for (std::size_t i = 0; i + 1 < L; ++i) {
                for (std::size_t j = i + 1; j < L; ++j) {
                    Prompt child = base;
                    std::swap(child.segments[i], child.segments[j]);
                    out.push_back({std::move(child), idx2("swap", i, j)});
                }
            }
            break;
        }
        case EditKind::par: {
            for (std::size_t i = 0; i < L; ++i) {
                for (const Segment& alt : provider.alternatives(base.segments[i])) {
                    Prompt child = base;
                    child.segments[i] = alt;
                    out.push_back({std::move(child), idx1("paraphrase", i)});
                }
            }
            break;
        }
        }
    }
    return out;
}

Prompt crossover_at(const Prompt& p1, const Prompt& p2, std::size_t split) {
    Prompt out;
    std::size_t take = std::min(split, p1.size());
    out.segments.assign(p1.segments.begin(), p1.segments.begin() + static_cast<std::ptrdiff_t>(take));
    if (split < p2.size()) {
        out.segments.insert(out.segments.end(),
                            p2.segments.begin() + static_cast<std::ptrdiff_t>(split),
                            p2.segments.end());
    }
    if (out.empty()) return p1;
    return out;
}

Prompt crossover(const Prompt& p1, const Prompt& p2, RandomSource& rng) {
    std::size_t hi = std::max(p1.size(), p2.size());
    std::size_t split = rng.pick(hi + 1);
    return crossover_at(p1, p2, split);
}

}  // namespace plum
