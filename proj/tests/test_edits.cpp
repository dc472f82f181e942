#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "plum/edits.hpp"
#include "support.hpp"

using namespace plum;
using plum::testing::P;
using plum::testing::S;
using plum::testing::ScriptedSource;

namespace {

std::multiset<Segment> segment_bag(const Prompt& p) {
    return {p.segments.begin(), p.segments.end()};
}

}  // namespace

TEST_CASE("paraphrase swaps in a table alternative") {
    TableParaphraseProvider provider(
        std::map<std::string, std::vector<std::string>>{{"think", {"brainstorm"}}});
    PhrasePool pool;
    // one eligible position, one alternative
    ScriptedSource rng({0, 0}, {});
    const auto res =
        apply_edit(P({"Let", "us", "think"}), EditKind::par, pool, provider, rng);
    REQUIRE(res.has_value());
    CHECK(res->prompt == P({"Let", "us", "brainstorm"}));
    CHECK(res->descriptor == "paraphrase[2]");
    CHECK(rng.drained());
}

TEST_CASE("paraphrase picks only among segments that have alternatives") {
    TableParaphraseProvider provider({{"a", {"x", "y"}}, {"c", {"z"}}});
    PhrasePool pool;
    // eligible positions are {0, 2}; choose the second, then alternative 0
    ScriptedSource rng({1, 0}, {});
    const auto res = apply_edit(P({"a", "b", "c"}), EditKind::par, pool, provider, rng);
    REQUIRE(res.has_value());
    CHECK(res->prompt == P({"a", "b", "z"}));
    CHECK(res->descriptor == "paraphrase[2]");
}

TEST_CASE("swap exchanges two distinct positions") {
    NullParaphraseProvider provider;
    PhrasePool pool;

    ScriptedSource rng({0, 0}, {});  // i=0, j=0 shifted past i -> 1
    auto res = apply_edit(P({"A", "B"}), EditKind::swap, pool, provider, rng);
    REQUIRE(res.has_value());
    CHECK(res->prompt == P({"B", "A"}));
    CHECK(res->descriptor == "swap[0,1]");

    ScriptedSource rng2({2, 1}, {});  // i=2, j=1 stays below i
    res = apply_edit(P({"a", "b", "c"}), EditKind::swap, pool, provider, rng2);
    REQUIRE(res.has_value());
    CHECK(res->prompt == P({"a", "c", "b"}));
    CHECK(res->descriptor == "swap[2,1]");
}

TEST_CASE("delete removes the drawn segment and deposits it") {
    NullParaphraseProvider provider;
    PhrasePool pool;
    ScriptedSource rng({1}, {});
    const auto res = apply_edit(P({"A", "B"}), EditKind::del, pool, provider, rng);
    REQUIRE(res.has_value());
    CHECK(res->prompt == P({"A"}));
    CHECK(res->descriptor == "delete[1]");
    // deposits are pending until commit
    CHECK(pool.available().empty());
    REQUIRE(pool.pending().size() == 1);
    CHECK(pool.pending()[0] == S("B"));
    pool.commit();
    CHECK(pool.size() == 1);
    CHECK(pool.at(0) == S("B"));
}

TEST_CASE("add inserts a pool segment at the drawn position") {
    NullParaphraseProvider provider;
    PhrasePool pool({S("X"), S("Y")});
    ScriptedSource rng({1, 0}, {});  // segment Y, position 0
    const auto res = apply_edit(P({"A"}), EditKind::add, pool, provider, rng);
    REQUIRE(res.has_value());
    CHECK(res->prompt == P({"Y", "A"}));
    CHECK(res->descriptor == "add[0]");
    CHECK(pool.size() == 2);  // adding copies, never consumes
}

TEST_CASE("infeasible edits return nullopt without consuming draws") {
    NullParaphraseProvider provider;
    PhrasePool empty_pool;
    ScriptedSource rng({}, {});  // any draw would throw

    CHECK_FALSE(apply_edit(P({"solo"}), EditKind::del, empty_pool, provider, rng).has_value());
    CHECK_FALSE(apply_edit(P({"solo"}), EditKind::swap, empty_pool, provider, rng).has_value());
    CHECK_FALSE(apply_edit(P({"solo"}), EditKind::add, empty_pool, provider, rng).has_value());
    CHECK_FALSE(apply_edit(P({"solo"}), EditKind::par, empty_pool, provider, rng).has_value());
}

TEST_CASE("compose applies edits sequentially") {
    NullParaphraseProvider provider;
    PhrasePool pool;
    const std::vector<EditKind> ops{EditKind::del, EditKind::swap};
    // step 1: kind delete (pick 0), delete index 1 of [A,B,C] -> [A,C]
    // step 2: kind swap (pick 1), i=0, j shifted to 1 -> [C,A]
    ScriptedSource rng({0, 1, 1, 0, 0}, {});
    const EditResult res = compose_edits(P({"A", "B", "C"}), 2, ops, pool, provider, rng);
    CHECK(res.prompt == P({"C", "A"}));
    CHECK(res.descriptor == "delete[1]+swap[0,1]");
    CHECK(rng.drained());
}

TEST_CASE("compose resamples among untried kinds when one is infeasible") {
    NullParaphraseProvider provider;
    PhrasePool pool;  // empty: add infeasible
    const std::vector<EditKind> ops{EditKind::add, EditKind::swap};
    // kind draw hits add (index 0), infeasible; retry among {swap} (pick 0);
    // swap draws 0 and 0 -> positions 0,1
    ScriptedSource rng({0, 0, 0, 0}, {});
    const EditResult res = compose_edits(P({"A", "B"}), 1, ops, pool, provider, rng);
    CHECK(res.prompt == P({"B", "A"}));
    CHECK(res.descriptor == "swap[0,1]");
    CHECK(rng.drained());
}

TEST_CASE("compose falls back to identity when nothing applies") {
    NullParaphraseProvider provider;
    PhrasePool pool;
    const std::vector<EditKind> ops{EditKind::del, EditKind::swap};
    ScriptedSource rng({0, 0}, {});  // two kind draws, both infeasible on a 1-segment prompt
    const EditResult res = compose_edits(P({"solo"}), 1, ops, pool, provider, rng);
    CHECK(res.prompt == P({"solo"}));
    CHECK(res.descriptor == "identity");
    CHECK(rng.drained());
}

TEST_CASE("compose keeps a partial chain when a later step dead-ends") {
    NullParaphraseProvider provider;
    PhrasePool pool;
    const std::vector<EditKind> ops{EditKind::del};
    // l=2 on a 2-segment prompt: first delete works ([A]); second is
    // infeasible (single segment) so the chain stops at depth 1
    ScriptedSource rng({0, 1, 0}, {});
    const EditResult res = compose_edits(P({"A", "B"}), 2, ops, pool, provider, rng);
    CHECK(res.prompt == P({"A"}));
    CHECK(res.descriptor == "delete[1]");
    CHECK(rng.drained());
}

TEST_CASE("sample_neighborhood returns exactly m candidates") {
    NullParaphraseProvider provider;
    PhrasePool pool;
    RngStream rng(17, "edits");
    const auto batch = sample_neighborhood(P({"a", "b", "c"}), 7, {1, 2}, all_edit_kinds(), pool,
                                           provider, rng);
    CHECK(batch.size() == 7);
    for (const EditResult& er : batch) CHECK(prompt_valid(er.prompt));
}

TEST_CASE("sample_neighborhood skips the length draw when only one choice exists") {
    NullParaphraseProvider provider;
    PhrasePool pool;
    const std::vector<EditKind> ops{EditKind::del};
    // three candidates, each: kind pick(1)=0 then infeasible on 1-segment
    // prompt; no l draw because compose_choices has a single entry
    ScriptedSource rng({0, 0, 0}, {});
    const auto batch = sample_neighborhood(P({"solo"}), 3, {1}, ops, pool, provider, rng);
    REQUIRE(batch.size() == 3);
    for (const EditResult& er : batch) {
        CHECK(er.prompt == P({"solo"}));
        CHECK(er.descriptor == "identity");
    }
    CHECK(rng.drained());
}

TEST_CASE("edit kinds round-trip through their names") {
    for (EditKind k : all_edit_kinds()) {
        const auto back = edit_kind_from_string(to_string(k));
        REQUIRE(back.has_value());
        CHECK(*back == k);
    }
    CHECK_FALSE(edit_kind_from_string("remove").has_value());
}

TEST_CASE("apply_edit structural properties") {
    TableParaphraseProvider provider({{"alpha", {"omega"}}, {"beta", {"zeta", "eta"}}});
    RngStream rng(31, "edits");
    const std::vector<std::string> vocab{"alpha", "beta", "gamma", "delta"};
    for (int trial = 0; trial < 200; ++trial) {
        const Prompt base = plum::testing::random_prompt(rng, vocab, 5);
        PhrasePool pool({S("gamma"), S("alpha")});
        for (EditKind kind : all_edit_kinds()) {
            const Prompt before = base;
            auto res = apply_edit(base, kind, pool, provider, rng);
            CHECK(base == before);  // input never mutated
            if (!res) continue;
            CHECK(prompt_valid(res->prompt));
            switch (kind) {
            case EditKind::del:
                CHECK(res->prompt.size() == base.size() - 1);
                REQUIRE(!pool.pending().empty());
                break;
            case EditKind::add:
                CHECK(res->prompt.size() == base.size() + 1);
                break;
            case EditKind::swap:
                CHECK(res->prompt.size() == base.size());
                CHECK(segment_bag(res->prompt) == segment_bag(base));
                break;
            case EditKind::par:
                CHECK(res->prompt.size() == base.size());
                break;
            }
        }
    }
}

TEST_CASE("deleted segments are recoverable through the pool") {
    NullParaphraseProvider provider;
    RngStream rng(77, "edits");
    const Prompt base = P({"w1", "w2", "w3", "w4"});
    PhrasePool pool;
    auto res = apply_edit(base, EditKind::del, pool, provider, rng);
    REQUIRE(res.has_value());
    pool.commit();
    // the removed segment is exactly the deposit
    auto bag = segment_bag(res->prompt);
    bag.insert(pool.at(0));
    CHECK(bag == segment_bag(base));
}

TEST_CASE("enumerate_neighborhood lists every single-edit child in stable order") {
    TableParaphraseProvider provider(
        std::map<std::string, std::vector<std::string>>{{"a", {"x"}}});
    PhrasePool pool({S("p")});
    const Prompt base = P({"a", "b"});
    const auto children = enumerate_neighborhood(base, all_edit_kinds(), pool, provider);

    REQUIRE(children.size() == 7);
    CHECK(children[0].prompt == P({"b"}));            // delete[0]
    CHECK(children[1].prompt == P({"a"}));            // delete[1]
    CHECK(children[2].prompt == P({"p", "a", "b"}));  // add[0]
    CHECK(children[3].prompt == P({"a", "p", "b"}));  // add[1]
    CHECK(children[4].prompt == P({"a", "b", "p"}));  // add[2]
    CHECK(children[5].prompt == P({"b", "a"}));       // swap[0,1]
    CHECK(children[6].prompt == P({"x", "b"}));       // paraphrase[0]

    CHECK(children[0].descriptor == "delete[0]");
    CHECK(children[5].descriptor == "swap[0,1]");
    CHECK(children[6].descriptor == "paraphrase[0]");

    // deletions deposited both segments, in index order, still pending
    REQUIRE(pool.pending().size() == 2);
    CHECK(pool.pending()[0] == S("a"));
    CHECK(pool.pending()[1] == S("b"));
}

TEST_CASE("enumerate_neighborhood dedups repeated pool segments") {
    NullParaphraseProvider provider;
    PhrasePool pool({S("p"), S("p"), S("q")});
    const auto children =
        enumerate_neighborhood(P({"a"}), {EditKind::add}, pool, provider);
    // distinct pool segments {p, q} at positions {0, 1} each
    CHECK(children.size() == 4);
}

TEST_CASE("enumerate matches sampling support on a small fixture") {
    // every sampled single edit must appear in the enumerated set
    TableParaphraseProvider provider({{"a", {"x", "y"}}});
    const Prompt base = P({"a", "b", "c"});

    PhrasePool epool({S("z")});
    const auto children = enumerate_neighborhood(base, all_edit_kinds(), epool, provider);
    std::set<std::string> enumerated;
    for (const auto& er : children) enumerated.insert(render_prompt(er.prompt));

    RngStream rng(5, "edits");
    for (int i = 0; i < 500; ++i) {
        PhrasePool spool({S("z")});
        const auto batch =
            sample_neighborhood(base, 1, {1}, all_edit_kinds(), spool, provider, rng);
        REQUIRE(batch.size() == 1);
        if (batch[0].descriptor == "identity") continue;
        CHECK(enumerated.count(render_prompt(batch[0].prompt)) == 1);
    }
}

TEST_CASE("crossover splices a prefix and a suffix") {
    const Prompt p1 = P({"a", "b", "c"});
    const Prompt p2 = P({"w", "x", "y", "z"});

    CHECK(crossover_at(p1, p2, 0) == p2);
    CHECK(crossover_at(p1, p2, 2) == P({"a", "b", "y", "z"}));
    CHECK(crossover_at(p1, p2, 3) == P({"a", "b", "c", "z"}));
    CHECK(crossover_at(p1, p2, 4) == p1);  // suffix empty, prefix clamped to |p1|

    CHECK(crossover_at(P({"a"}), P({"w", "x"}), 1) == P({"a", "x"}));
}

TEST_CASE("crossover falls back to the first parent when the splice is empty") {
    // split beyond both parents with an empty first parent: the natural
    // splice is empty, so p1 comes back unchanged
    const Prompt empty{};
    CHECK(crossover_at(empty, P({"w"}), 1) == empty);
    // nonempty p1 with an exhausted p2 keeps its own prefix instead
    CHECK(crossover_at(P({"a"}), Prompt{}, 1) == P({"a"}));
}

TEST_CASE("crossover draws the split from {0..max(L1,L2)}") {
    const Prompt p1 = P({"a", "b"});
    const Prompt p2 = P({"w", "x", "y"});
    ScriptedSource rng({3}, {});  // pick over 0..3 inclusive (n = 4)
    CHECK(crossover(p1, p2, rng) == crossover_at(p1, p2, 3));
    CHECK(rng.drained());
}

TEST_CASE("crossover equals the brute-force splice for every size and split") {
    const std::vector<std::string> vocab{"t0", "t1", "t2", "t3", "t4", "t5"};
    for (std::size_t l1 = 0; l1 <= 6; ++l1) {
        for (std::size_t l2 = 0; l2 <= 6; ++l2) {
            Prompt p1, p2;
            for (std::size_t i = 0; i < l1; ++i) p1.segments.push_back(S("a" + std::to_string(i)));
            for (std::size_t i = 0; i < l2; ++i) p2.segments.push_back(S("b" + std::to_string(i)));
            const std::size_t hi = std::max(l1, l2);
            for (std::size_t split = 0; split <= hi; ++split) {
                // independent reference: element-by-element splice
                Prompt expect;
                for (std::size_t i = 0; i < l1 && i < split; ++i)
                    expect.segments.push_back(p1.segments[i]);
                for (std::size_t i = split; i < l2; ++i) expect.segments.push_back(p2.segments[i]);
                if (expect.empty()) expect = p1;

                const Prompt got = crossover_at(p1, p2, split);
                CHECK(got == expect);

                // length algebra of the non-degenerate splice
                const std::size_t natural =
                    std::min(split, l1) + (l2 > split ? l2 - split : 0);
                if (natural > 0) CHECK(got.size() == natural);
            }
        }
    }
}
