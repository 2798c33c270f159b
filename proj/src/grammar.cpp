#include "insdel/grammar.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace insdel {

SymbolSet Grammar::nonterminal_set() const {
    SymbolSet out(nonterminals.begin(), nonterminals.end());
    out.insert(special.begin(), special.end());
    return out;
}

SymbolSet Grammar::terminal_set() const { return SymbolSet(terminals.begin(), terminals.end()); }

const Production* Grammar::find(std::string_view label) const {
    for (const auto& p : productions)
        if (p.label == label) return &p;
    return nullptr;
}

Diagnostics validate_grammar(const Grammar& g) {
    Diagnostics out;
    const SymbolSet n = g.nonterminal_set();
    const SymbolSet t = g.terminal_set();
    for (Symbol s : t)
        if (n.contains(s)) out.push_back({Severity::error, "overlap", "'" + s.name() + "' is both terminal and nonterminal"});
    if (!g.start.valid() || !n.contains(g.start))
        out.push_back({Severity::error, "bad-start", "start symbol '" + g.start.name() + "' is not a nonterminal"});
    std::set<std::string> labels;
    for (const auto& p : g.productions) {
        if (!labels.insert(p.label).second) out.push_back({Severity::error, "duplicate-label", p.label});
        if (!is_valid_symbol_name(p.label))
            out.push_back({Severity::error, "invalid-label", "label '" + p.label + "' is not a valid token"});
        if (p.lhs.empty()) out.push_back({Severity::error, "empty-lhs", "production " + p.label});
        for (const Word* side : {&p.lhs, &p.rhs})
            for (Symbol s : *side)
                if (!n.contains(s) && !t.contains(s)) {
                    out.push_back({Severity::error, "unknown-symbol",
                                   "production " + p.label + " uses undeclared symbol '" + s.name() + "'"});
                    break;
                }
    }
    return out;
}

namespace {

template <class Fn>
void rewrite_all(const Production& p, const Word& form, Fn&& fn) {
    const std::size_t k = p.lhs.size();
    if (k == 0 || k > form.size()) return;
    for (std::size_t i = 0; i + k <= form.size(); ++i) {
        if (!std::equal(p.lhs.begin(), p.lhs.end(), form.begin() + static_cast<std::ptrdiff_t>(i))) continue;
        Word next(form.begin(), form.begin() + static_cast<std::ptrdiff_t>(i));
        next.insert(next.end(), p.rhs.begin(), p.rhs.end());
        next.insert(next.end(), form.begin() + static_cast<std::ptrdiff_t>(i + k), form.end());
        fn(i, std::move(next));
    }
}

// Plain BFS over sentential forms with parent links.
struct Search {
    struct Entry {
        Word form;
        std::size_t parent;
        std::size_t production;
        std::size_t position;
        std::size_t depth;
    };
    std::vector<Entry> entries;
    bool exhausted = false;
    std::optional<std::size_t> hit;
};

Search run_search(const Grammar& g, const SearchBounds& bounds, const Word* target) {
    Search s;
    const std::size_t cap = bounds.intermediate();
    std::unordered_set<Word, WordHash> seen;
    const Word start{g.start};
    if (start.size() > cap) return s;
    seen.insert(start);
    s.entries.push_back({start, static_cast<std::size_t>(-1), 0, 0, 0});
    if (target && *target == start) {
        s.hit = 0;
        return s;
    }
    for (std::size_t head = 0; head < s.entries.size(); ++head) {
        if (s.entries[head].depth >= bounds.max_steps) continue;
        const Word form = s.entries[head].form;
        const std::size_t depth = s.entries[head].depth;
        for (std::size_t pi = 0; pi < g.productions.size(); ++pi) {
            bool stop = false;
            rewrite_all(g.productions[pi], form, [&](std::size_t pos, Word&& next) {
                if (stop || next.size() > cap || seen.contains(next)) return;
                if (seen.size() >= bounds.visited_budget) {
                    s.exhausted = true;
                    stop = true;
                    return;
                }
                seen.insert(next);
                s.entries.push_back({std::move(next), head, pi, pos, depth + 1});
                if (target && s.entries.back().form == *target) {
                    s.hit = s.entries.size() - 1;
                    stop = true;
                }
            });
            if (stop) return s;
        }
    }
    return s;
}

}  // namespace

WordSet one_step_rewrites(const Production& p, const Word& form) {
    WordSet out;
    rewrite_all(p, form, [&](std::size_t, Word&& next) { out.insert(std::move(next)); });
    return out;
}

FormSearch reachable_forms(const Grammar& g, const SearchBounds& bounds) {
    Search s = run_search(g, bounds, nullptr);
    FormSearch out;
    out.exhausted = s.exhausted;
    for (auto& e : s.entries) out.forms.push_back(std::move(e.form));
    return out;
}

EnumerationResult grammar_enumerate(const Grammar& g, const SearchBounds& bounds) {
    bounds.check();
    Search s = run_search(g, bounds, nullptr);
    const SymbolSet t = g.terminal_set();
    EnumerationResult out;
    out.exhausted = s.exhausted;
    out.visited = s.entries.size();
    for (const auto& e : s.entries)
        if (e.form.size() <= bounds.max_len && contains(t, e.form)) out.words.insert(e.form);
    return out;
}

std::optional<Derivation> derive(const Grammar& g, const Word& target, const SearchBounds& bounds) {
    Search s = run_search(g, bounds, &target);
    if (!s.hit) return std::nullopt;
    std::vector<std::size_t> path;
    for (std::size_t i = *s.hit; i != static_cast<std::size_t>(-1); i = s.entries[i].parent) path.push_back(i);
    std::reverse(path.begin(), path.end());
    Derivation d;
    d.start = s.entries[path.front()].form;
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto& e = s.entries[path[k]];
        d.steps.push_back({g.productions[e.production].label, e.position, e.form});
    }
    return d;
}

}  // namespace insdel
