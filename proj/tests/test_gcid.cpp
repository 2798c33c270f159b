#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "insdel/gcid.hpp"
#include "oracles.hpp"

using namespace insdel;
using oracle::w;

namespace {

// b^n X a^n, then X is deleted in component 3.
ComponentSystem mirror_system() {
    ComponentSystem s;
    s.components = 3;
    s.alphabet = {Symbol("a"), Symbol("b"), Symbol("X")};
    s.terminals = {Symbol("a"), Symbol("b")};
    s.axioms = {w("X")};
    s.initial = 1;
    s.final_component = 3;
    s.rules = {
        {"r1", 1, Rule::ins(w("X"), w("a"), {}), 2},
        {"r2", 2, Rule::ins({}, w("b"), w("X")), 1},
        {"r3", 1, Rule::del({}, w("X"), {}), 3},
    };
    return s;
}

SearchBounds len(std::size_t n) {
    SearchBounds b;
    b.max_len = n;
    return b;
}

ComponentSystem random_system(std::mt19937& rng) {
    const std::vector<Symbol> v{Symbol("a"), Symbol("b"), Symbol("X")};
    ComponentSystem s;
    s.components = 3;
    s.alphabet = {v.begin(), v.end()};
    s.terminals = {Symbol("a"), Symbol("b")};
    s.axioms = {w("X"), w("a X")};
    s.initial = 1;
    s.final_component = 2;
    std::uniform_int_distribution<int> comp(1, 3);
    for (int k = 0; k < 6; ++k)
        s.rules.push_back({"r" + std::to_string(k), comp(rng), oracle::random_rule(rng, v, 1, 2), comp(rng)});
    return s;
}

bool has_rules_in(const ComponentSystem& s, int c) {
    return std::any_of(s.rules.begin(), s.rules.end(), [&](const ComponentRule& r) { return r.source == c; });
}

}  // namespace

TEST_CASE("validation reports structural problems") {
    ComponentSystem s = mirror_system();
    CHECK(validate(s).empty());

    s.rules.push_back({"r1", 1, Rule::ins({}, w("a"), {}), 5});
    s.rules.push_back({"r9", 1, Rule::ins({}, w("Q"), {}), 1});
    s.rules.push_back({"r10", 1, Rule::del({}, {}, {}), 1});
    s.terminals.insert(Symbol("z"));
    const auto ds = validate(s);
    CHECK(has_code(ds, "duplicate-label"));
    CHECK(has_code(ds, "component-out-of-range"));
    CHECK(has_code(ds, "symbol-outside-alphabet"));
    CHECK(has_code(ds, "empty-rule-body"));
    CHECK(has_code(ds, "terminal-outside-alphabet"));

    LabelSystem ls = to_label_form(mirror_system()).system;
    CHECK(validate(ls).empty());
    ls.rules[0].successors.insert("nope");
    CHECK(has_code(validate(ls), "unknown-label"));
}

TEST_CASE("single step follows rule targets") {
    const ComponentSystem s = mirror_system();
    const auto next = step(s, Configuration{1, w("X")});
    REQUIRE(next.size() == 2);
    CHECK(next[0] == Transition{"r1", Configuration{2, w("X a")}, 0});
    CHECK(next[1] == Transition{"r3", Configuration{3, w("eps")}, 0});
    CHECK(step(s, Configuration{3, w("X")}).empty());
}

TEST_CASE("enumeration matches the reachability oracle") {
    const ComponentSystem s = mirror_system();
    const auto r = enumerate(s, len(4));
    CHECK_FALSE(r.exhausted);
    CHECK(oracle::plain(r.words) == (std::set<Word>{w("eps"), w("b a"), w("b b a a")}));
    CHECK(oracle::plain(r.words) == oracle::system_language(s, 4, 10));

    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
        const ComponentSystem rs = random_system(rng);
        SearchBounds b = len(4);
        b.max_intermediate = 6;
        const auto got = enumerate(rs, b);
        REQUIRE_FALSE(got.exhausted);
        REQUIRE(oracle::plain(got.words) == oracle::system_language(rs, 4, 6));
    }
}

TEST_CASE("membership yields a replayable witness") {
    const ComponentSystem s = mirror_system();
    const auto m = member(s, w("b b a a"), len(4));
    REQUIRE(m.found());
    CHECK(replays(s, *m.trace));
    CHECK(m.trace->start == Configuration{1, w("X")});
    CHECK(m.trace->last() == Configuration{3, w("b b a a")});
    CHECK(m.trace->steps.size() == 5);

    const auto miss = member(s, w("a b"), len(4));
    CHECK_FALSE(miss.found());
    CHECK_FALSE(miss.exhausted);

    Trace bogus = *m.trace;
    bogus.steps[0].config.word = w("a X");
    CHECK_FALSE(replays(s, bogus));
}

TEST_CASE("traces do not depend on rule order") {
    std::mt19937 rng(9);
    ComponentSystem base = mirror_system();
    base.rules.push_back({"r0", 1, Rule::ins({}, w("a"), w("X")), 2});
    base.rules.push_back({"r4", 2, Rule::ins(w("a"), w("b"), {}), 1});
    const auto ref = member(base, w("b b a a"), len(4));
    const auto ref_words = enumerate(base, len(4)).words;
    REQUIRE(ref.found());
    for (int k = 0; k < 20; ++k) {
        ComponentSystem shuffled = base;
        std::shuffle(shuffled.rules.begin(), shuffled.rules.end(), rng);
        const auto m = member(shuffled, w("b b a a"), len(4));
        REQUIRE(m.found());
        CHECK(*m.trace == *ref.trace);
        CHECK(enumerate(shuffled, len(4)).words == ref_words);
    }
}

TEST_CASE("restrict_rules keeps only selected labels") {
    const auto s = restrict_rules(mirror_system(), [](const std::string& l) { return l != "r3"; });
    CHECK(s.rules.size() == 2);
    CHECK(enumerate(s, len(4)).words.empty());
}

TEST_CASE("label form conversion preserves the language") {
    const ComponentSystem s = mirror_system();
    const LabelConversion lc = to_label_form(s);
    // component 3 carries no rules
    CHECK(has_code(lc.notes, "empty-final-component"));

    ComponentSystem loop = s;
    loop.rules.push_back({"r5", 3, Rule::ins({}, w("X"), {}), 3});
    const LabelConversion ok = to_label_form(loop);
    CHECK(ok.notes.empty());
    CHECK(ok.system.initial_labels == std::set<std::string>{"r1", "r3"});
    CHECK(ok.system.final_labels == std::set<std::string>{"r5"});
    CHECK(enumerate(ok.system, len(4)).words == enumerate(loop, len(4)).words);

    const ComponentSystem back = to_component_form(ok.system);
    CHECK(validate(back).empty());
    CHECK(enumerate(back, len(4)).words == enumerate(loop, len(4)).words);
}

TEST_CASE("conversion round trips agree on random systems") {
    std::mt19937 rng(21);
    int checked = 0;
    for (int trial = 0; trial < 200 && checked < 60; ++trial) {
        const ComponentSystem s = random_system(rng);
        if (!has_rules_in(s, s.initial) || !has_rules_in(s, s.final_component)) continue;
        SearchBounds b = len(4);
        b.max_intermediate = 6;
        const auto direct = enumerate(s, b);
        const LabelSystem ls = to_label_form(s).system;
        const auto via_labels = enumerate(ls, b);
        const auto round = enumerate(to_component_form(ls), b);
        REQUIRE_FALSE(direct.exhausted);
        REQUIRE(via_labels.words == direct.words);
        REQUIRE(round.words == direct.words);
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("component form conversion rejects what it cannot represent") {
    LabelSystem ls;
    ls.alphabet = {Symbol("a")};
    ls.terminals = {Symbol("a")};
    ls.axioms = {w("a")};
    ls.rules = {{"l", Rule::ins({}, w("a"), {}), {"l"}}};
    CHECK_THROWS_AS(to_component_form(ls), ConversionError);
    ls.initial_labels = {"l"};
    CHECK_THROWS_AS(to_component_form(ls), ConversionError);
    ls.final_labels = {"l"};
    // terminal axiom accepted without a step
    CHECK_THROWS_AS(to_component_form(ls), ConversionError);
    ls.axioms = {w("eps")};
    ls.terminals.clear();
    ls.alphabet.insert(Symbol("X"));
    ls.axioms = {w("X")};
    CHECK_NOTHROW(to_component_form(ls));
}

TEST_CASE("communication graph and its shape") {
    const CommGraph g = communication_graph(mirror_system());
    CHECK(g.nodes == 3);
    CHECK(g.edges == std::set<std::pair<int, int>>{{1, 2}, {2, 1}, {1, 3}});
    // 2 - 1 - 3 is a path
    CHECK(classify_graph(g) == GraphShape::linear_chain);
    CommGraph star{4, {{1, 2}, {1, 3}, {4, 1}}};
    CHECK(classify_graph(star) == GraphShape::tree);

    CommGraph chain{4, {{1, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 3}}};
    CHECK(classify_graph(chain) == GraphShape::linear_chain);
    CommGraph cycle{3, {{1, 2}, {2, 3}, {3, 1}}};
    CHECK(classify_graph(cycle) == GraphShape::general);
    CommGraph split{4, {{1, 2}, {3, 4}}};
    CHECK(classify_graph(split) == GraphShape::general);
    CHECK(to_string(GraphShape::linear_chain) == "linear-chain");

    CHECK(to_dot(CommGraph{3, {{2, 1}, {1, 2}}}) == "digraph G {\n  3;\n  1 -> 2;\n  2 -> 1;\n}\n");
}

TEST_CASE("size of a system") {
    CHECK(size_of(mirror_system()).to_string() == "(1,1,1;1,0,0)");
    CHECK(size_of(to_label_form(mirror_system()).system) == size_of(mirror_system()));
}
