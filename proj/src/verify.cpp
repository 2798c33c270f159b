#include "insdel/verify.hpp"

#include <algorithm>

#include "insdel/text_format.hpp"

namespace insdel {

namespace {

WordSet difference(const WordSet& a, const WordSet& b) {
    WordSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()), ShortLex{});
    return out;
}

std::size_t count_occurrences(const Word& w, const Word& pattern) {
    if (pattern.empty() || pattern.size() > w.size()) return 0;
    std::size_t n = 0;
    for (std::size_t i = 0; i + pattern.size() <= w.size(); ++i)
        if (std::equal(pattern.begin(), pattern.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) ++n;
    return n;
}

ComponentSystem group_system(const CompilationOutput& compiled, const RuleGroup& group) {
    std::set<std::string> keep(group.rule_labels.begin(), group.rule_labels.end());
    return restrict_rules(compiled.system, [&](const std::string& l) { return keep.contains(l); });
}

const RuleGroup& require_group(const CompilationOutput& compiled, std::string_view production) {
    const RuleGroup* g = compiled.group(production);
    if (!g) throw std::invalid_argument("no production labelled '" + std::string(production) + "'");
    return *g;
}

SearchBounds replay_bounds(const Word& form) {
    SearchBounds b;
    b.max_len = form.size();
    b.max_intermediate = form.size() + 8;
    b.max_steps = replay_step_limit;
    return b;
}

}  // namespace

nlohmann::json to_json(const Word& w) {
    nlohmann::json out = nlohmann::json::array();
    for (Symbol s : w) out.push_back(s.name());
    return out;
}

nlohmann::json to_json(const WordSet& words) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& w : words) out.push_back(to_json(w));
    return out;
}

nlohmann::json to_json(const Trace& t) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& s : t.steps)
        steps.push_back({{"rule", s.label}, {"component", s.config.site}, {"word", to_json(s.config.word)}});
    return {{"start", {{"component", t.start.site}, {"word", to_json(t.start.word)}}}, {"steps", steps}};
}

nlohmann::json ComparisonReport::to_json() const {
    return {{"bound", bound},
            {"verdict", equal_up_to_bound() ? "equal-up-to-bound" : "mismatch"},
            {"oracle_words", insdel::to_json(oracle_words)},
            {"system_words", insdel::to_json(system_words)},
            {"missing", insdel::to_json(missing)},
            {"extra", insdel::to_json(extra)},
            {"resource_flags", resource_flags}};
}

ComparisonReport compare(const Grammar& g, const ComponentSystem& sys, const SearchBounds& bounds) {
    ComparisonReport r;
    r.bound = bounds.max_len;
    const EnumerationResult oracle = grammar_enumerate(g, bounds);
    const EnumerationResult system = enumerate(sys, bounds);
    r.oracle_words = oracle.words;
    r.system_words = system.words;
    r.missing = difference(oracle.words, system.words);
    r.extra = difference(system.words, oracle.words);
    if (oracle.exhausted)
        r.resource_flags.push_back("grammar oracle exceeded the visited budget after " +
                                   std::to_string(oracle.visited) + " forms");
    if (system.exhausted)
        r.resource_flags.push_back("system search exceeded the visited budget after " +
                                   std::to_string(system.visited) + " configurations");
    return r;
}

Trace replay_group(const CompilationOutput& compiled, std::string_view production, const Word& form) {
    const RuleGroup& group = require_group(compiled, production);
    if (count_occurrences(form, group.lhs) != 1)
        throw std::invalid_argument("form must contain exactly one occurrence of '" + join_tokens(group.lhs) + "'");
    for (Symbol m : group.markers)
        if (std::find(form.begin(), form.end(), m) != form.end())
            throw std::invalid_argument("form contains marker '" + m.name() + "'");

    Word expected;
    for (std::size_t i = 0; i + group.lhs.size() <= form.size(); ++i) {
        if (!std::equal(group.lhs.begin(), group.lhs.end(), form.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        expected.assign(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(i));
        expected.insert(expected.end(), group.rhs.begin(), group.rhs.end());
        expected.insert(expected.end(), form.begin() + static_cast<std::ptrdiff_t>(i + group.lhs.size()), form.end());
        break;
    }

    const ComponentSystem sub = group_system(compiled, group);
    const int home = compiled.system.initial;
    Configuration start{home, form};
    if (expected == form) return Trace{start, {}};
    auto m = find_trace(
        sub, start, [&](const Configuration& c) { return c.site == home && c.word == expected; },
        replay_bounds(form));
    if (!m.found())
        throw NoCanonicalTrace("no trace for production '" + std::string(production) + "' from '" +
                               format_word(form) + "' within " + std::to_string(replay_step_limit) + " steps");
    return *m.trace;
}

Trace replay_prefix(const ComponentSystem& sys, std::string_view prefix, const Word& form) {
    const std::string head = std::string(prefix) + ".";
    const ComponentSystem sub =
        restrict_rules(sys, [&](const std::string& l) { return l.compare(0, head.size(), head) == 0; });
    if (sub.rules.empty()) throw std::invalid_argument("no rules labelled '" + head + "*'");
    const int home = sys.initial;
    auto m = find_trace(
        sub, Configuration{home, form}, [&](const Configuration& c) { return c.site == home && c.word != form; },
        replay_bounds(form));
    if (!m.found())
        throw NoCanonicalTrace("no trace for rules '" + head + "*' from '" + format_word(form) + "' within " +
                               std::to_string(replay_step_limit) + " steps");
    return *m.trace;
}

WordSet group_exits(const CompilationOutput& compiled, std::string_view production, const Word& form,
                    std::size_t max_steps) {
    const RuleGroup& group = require_group(compiled, production);
    const ComponentSystem sub = group_system(compiled, group);
    SearchBounds b;
    b.max_len = form.size();
    b.max_intermediate = form.size() + max_steps * 2;
    b.max_steps = max_steps;
    auto r = reachable(sub, Configuration{compiled.system.initial, form}, b);
    WordSet out;
    for (const auto& c : r.configs)
        if (c.site == compiled.system.initial) out.insert(c.word);
    return out;
}

const char* grammar_ab_text() {
    return "grammar special-gnf\n"
           "nonterminals: S Z S'\n"
           "terminals: a b\n"
           "special: A B C D\n"
           "start: S\n"
           "rule p1: S -> a Z\n"
           "rule p2: Z -> S b\n"
           "rule p3: Z -> S' b\n"
           "rule e: S' -> eps\n";
}

const char* grammar_empty_text() {
    return "grammar special-gnf\n"
           "nonterminals: S Z S'\n"
           "terminals:\n"
           "special: A B C D\n"
           "start: S\n"
           "rule p1: S -> A Z\n"
           "rule p2: Z -> S B\n"
           "rule p3: Z -> S' B\n"
           "rule e: S' -> eps\n"
           "rule eAB: A B -> eps\n";
}

const Grammar& grammar_ab() {
    static const Grammar g = parse_grammar(grammar_ab_text());
    return g;
}

const Grammar& grammar_empty() {
    static const Grammar g = parse_grammar(grammar_empty_text());
    return g;
}

}  // namespace insdel
