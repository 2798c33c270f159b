#include "insdel/rule.hpp"

#include <algorithm>
#include <stdexcept>

#include "search.hpp"

namespace insdel {

std::vector<Match> apply_rule(const Word& w, const Rule& rule) {
    std::vector<Match> out;
    for_each_match(w, rule, [&](std::size_t pos, Word&& result) { out.push_back(Match{std::move(result), pos}); });
    return out;
}

std::string SizeVector::to_string() const {
    return "(" + std::to_string(n) + "," + std::to_string(m) + "," + std::to_string(m_prime) + ";" +
           std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(q_prime) + ")";
}

namespace {

void widen(SizeVector& s, const Rule& r) {
    if (r.mode == Mode::insertion) {
        s.n = std::max(s.n, r.body.size());
        s.m = std::max(s.m, r.left.size());
        s.m_prime = std::max(s.m_prime, r.right.size());
    } else {
        s.p = std::max(s.p, r.body.size());
        s.q = std::max(s.q, r.left.size());
        s.q_prime = std::max(s.q_prime, r.right.size());
    }
}

}  // namespace

SizeVector size_of(std::span<const Rule> insertions, std::span<const Rule> deletions) {
    SizeVector s;
    for (const auto& r : insertions) widen(s, Rule{Mode::insertion, r.left, r.body, r.right});
    for (const auto& r : deletions) widen(s, Rule{Mode::deletion, r.left, r.body, r.right});
    return s;
}

SizeVector size_of(std::span<const Rule> rules) {
    SizeVector s;
    for (const auto& r : rules) widen(s, r);
    return s;
}

void SearchBounds::check() const {
    if (max_len > intermediate())
        throw std::invalid_argument("max_len (" + std::to_string(max_len) + ") exceeds max_intermediate (" +
                                    std::to_string(intermediate()) + ")");
}

Diagnostics validate(const InsDelSystem& sys) {
    Diagnostics out;
    for (Symbol t : sys.terminals)
        if (!sys.alphabet.contains(t))
            out.push_back({Severity::error, "terminal-outside-alphabet", "terminal '" + t.name() + "' is not in V"});
    for (const auto& a : sys.axioms)
        if (!contains(sys.alphabet, a))
            out.push_back({Severity::error, "symbol-outside-alphabet", "axiom '" + format_word(a) + "'"});
    auto check_rule = [&](const Rule& r, Mode expected, std::size_t index) {
        const std::string where = (expected == Mode::insertion ? "insertion #" : "deletion #") + std::to_string(index);
        if (r.mode != expected)
            out.push_back({Severity::error, "wrong-mode", where + " has the other mode"});
        if (r.body.empty())
            out.push_back({Severity::error, "empty-rule-body", where});
        if (!contains(sys.alphabet, r.left) || !contains(sys.alphabet, r.body) || !contains(sys.alphabet, r.right))
            out.push_back({Severity::error, "symbol-outside-alphabet", where});
    };
    for (std::size_t i = 0; i < sys.insertions.size(); ++i) check_rule(sys.insertions[i], Mode::insertion, i);
    for (std::size_t i = 0; i < sys.deletions.size(); ++i) check_rule(sys.deletions[i], Mode::deletion, i);
    return out;
}

EnumerationResult enumerate_basic(const InsDelSystem& sys, const SearchBounds& bounds) {
    bounds.check();
    std::vector<Rule> rules;
    for (const auto& r : sys.insertions) rules.push_back(Rule{Mode::insertion, r.left, r.body, r.right});
    for (const auto& r : sys.deletions) rules.push_back(Rule{Mode::deletion, r.left, r.body, r.right});

    auto expand = [&](int, const Word& w, std::vector<detail::Successor<int>>& out) {
        for (std::size_t i = 0; i < rules.size(); ++i)
            for_each_match(w, rules[i], [&](std::size_t pos, Word&& next) {
                out.push_back({i, pos, 0, std::move(next)});
            });
    };
    auto ex = detail::breadth_first<int>(detail::starts_for(0, sys.axioms), bounds, expand,
                                         [](const detail::Node<int>&) { return false; });

    EnumerationResult result;
    result.exhausted = ex.exhausted;
    result.visited = ex.nodes.size();
    for (const auto& node : ex.nodes)
        if (node.word.size() <= bounds.max_len && contains(sys.terminals, node.word)) result.words.insert(node.word);
    return result;
}

}  // namespace insdel
