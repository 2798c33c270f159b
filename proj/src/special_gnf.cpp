#include "insdel/special_gnf.hpp"

#include <map>
#include <optional>

namespace insdel {

namespace {

std::string summarize(const Diagnostics& ds) {
    std::string out = "grammar rejected";
    for (const auto& d : ds)
        if (d.severity == Severity::error) {
            out += ": " + d.code + ": " + d.message;
            break;
        }
    return out;
}

std::string show(const Production& p) {
    return p.label + ": " + join_tokens(p.lhs) + " -> " + format_word(p.rhs);
}

struct Roles {
    SymbolSet primed;
    SymbolSet pair_set;
    SymbolSet terminals;
    std::array<Symbol, 4> pairs;

    bool emittable(Symbol s) const { return terminals.contains(s) || pair_set.contains(s); }
};

// Fills `roles` and reports problems with the pair symbol declaration.
void collect_roles(const Grammar& g, Roles& roles, Diagnostics& out) {
    roles.terminals = g.terminal_set();
    roles.pair_set = SymbolSet(g.special.begin(), g.special.end());
    if (g.special.size() != 4 || roles.pair_set.size() != 4)
        out.push_back({Severity::error, "pair-symbols", "exactly four distinct pair symbols A B C D are required"});
    for (std::size_t i = 0; i < 4 && i < g.special.size(); ++i) roles.pairs[i] = g.special[i];
    for (Symbol s : g.nonterminal_set())
        if (!roles.pair_set.contains(s)) roles.primed.insert(s);
}

std::optional<ClassifiedProduction> classify(const Production& p, const Roles& roles, Symbol s_prime) {
    ClassifiedProduction c{p, Shape::left_linear, {}, {}, {}};
    if (p.lhs.size() == 1 && roles.primed.contains(p.lhs[0])) {
        if (p.rhs.empty() && p.lhs[0] == s_prime) {
            c.shape = Shape::erase_s_prime;
            return c;
        }
        if (p.rhs.size() == 2) {
            c.from = p.lhs[0];
            if (roles.emittable(p.rhs[0]) && roles.primed.contains(p.rhs[1])) {
                c.shape = Shape::left_linear;
                c.emitted = p.rhs[0];
                c.next = p.rhs[1];
                return c;
            }
            if (roles.primed.contains(p.rhs[0]) && roles.emittable(p.rhs[1])) {
                c.shape = Shape::right_linear;
                c.next = p.rhs[0];
                c.emitted = p.rhs[1];
                return c;
            }
        }
        return std::nullopt;
    }
    if (p.lhs.size() == 2 && p.rhs.empty()) {
        if (p.lhs[0] == roles.pairs[0] && p.lhs[1] == roles.pairs[1]) {
            c.shape = Shape::erase_ab;
            return c;
        }
        if (p.lhs[0] == roles.pairs[2] && p.lhs[1] == roles.pairs[3]) {
            c.shape = Shape::erase_cd;
            return c;
        }
    }
    return std::nullopt;
}

// S' is the left-hand side of the single-symbol erasing production.
Symbol find_s_prime(const Grammar& g, const Roles& roles, Diagnostics& out) {
    Symbol s_prime;
    for (const auto& p : g.productions) {
        if (p.lhs.size() != 1 || !p.rhs.empty() || !roles.primed.contains(p.lhs[0])) continue;
        if (!s_prime.valid()) s_prime = p.lhs[0];
    }
    if (!s_prime.valid())
        out.push_back({Severity::error, "missing-sprime-erasure", "no production of the form S' -> eps"});
    else if (s_prime == g.start)
        out.push_back({Severity::error, "sprime-is-start", "the erasable nonterminal must differ from the start symbol"});
    return s_prime;
}

}  // namespace

std::string to_string(Shape shape) {
    switch (shape) {
        case Shape::left_linear: return "left-linear";
        case Shape::right_linear: return "right-linear";
        case Shape::erase_s_prime: return "erase-sprime";
        case Shape::erase_ab: return "erase-ab";
        case Shape::erase_cd: return "erase-cd";
    }
    return "?";
}

const ClassifiedProduction* SpecialGnfGrammar::find(std::string_view label) const {
    for (const auto& r : rules)
        if (r.production.label == label) return &r;
    return nullptr;
}

GrammarError::GrammarError(Diagnostics diagnostics)
    : std::runtime_error(summarize(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::string fresh_name(const std::string& base, std::set<std::string>& used) {
    std::string candidate = base;
    for (int n = 1; used.contains(candidate); ++n) candidate = base + "_" + std::to_string(n);
    used.insert(candidate);
    return candidate;
}

Diagnostics validate_special_gnf(const Grammar& g) {
    Diagnostics out = validate_grammar(g);
    Roles roles;
    collect_roles(g, roles, out);
    if (g.start.valid() && roles.pair_set.contains(g.start))
        out.push_back({Severity::error, "bad-start", "the start symbol cannot be a pair symbol"});
    const Symbol s_prime = find_s_prime(g, roles, out);

    std::map<Word, std::vector<const ClassifiedProduction*>> by_rhs;
    std::vector<ClassifiedProduction> classified;
    classified.reserve(g.productions.size());
    for (const auto& p : g.productions) {
        auto c = classify(p, roles, s_prime);
        if (!c) {
            out.push_back({Severity::error, "shape-error", show(p)});
            continue;
        }
        classified.push_back(*c);
    }
    for (const auto& c : classified) {
        if (c.shape != Shape::left_linear && c.shape != Shape::right_linear) continue;
        if (c.shape == Shape::right_linear && (c.next == g.start || c.next == s_prime)) continue;
        by_rhs[c.production.rhs].push_back(&c);
    }
    for (const auto& [rhs, group] : by_rhs)
        for (std::size_t i = 1; i < group.size(); ++i)
            if (group[i]->from != group[0]->from)
                out.push_back({Severity::warning, "uniqueness-warning",
                               "right-hand side '" + join_tokens(rhs) + "' is shared by " +
                                   group[0]->production.label + " and " + group[i]->production.label});
    return out;
}

SpecialGnfGrammar as_special_gnf(const Grammar& g) {
    Diagnostics ds = validate_special_gnf(g);
    if (has_errors(ds)) throw GrammarError(std::move(ds));
    Roles roles;
    Diagnostics ignored;
    collect_roles(g, roles, ignored);
    SpecialGnfGrammar out;
    out.grammar = g;
    out.s_prime = find_s_prime(g, roles, ignored);
    out.pairs = roles.pairs;
    out.primed = roles.primed;
    for (const auto& p : g.productions) out.rules.push_back(*classify(p, roles, out.s_prime));
    return out;
}

Diagnostics validate_geffert(const Grammar& g) {
    Diagnostics out = validate_grammar(g);
    Roles roles;
    collect_roles(g, roles, out);
    if (roles.primed != SymbolSet{g.start})
        out.push_back({Severity::error, "geffert-nonterminals", "the only non-pair nonterminal must be the start symbol"});
    auto in = [](Symbol s, std::initializer_list<Symbol> set) {
        return std::find(set.begin(), set.end(), s) != set.end();
    };
    const auto [a, b, c, d] = roles.pairs;
    for (const auto& p : g.productions) {
        bool ok = false;
        if (p.lhs == Word{g.start}) {
            auto it = std::find(p.rhs.begin(), p.rhs.end(), g.start);
            if (it != p.rhs.end()) {
                const bool single = std::find(it + 1, p.rhs.end(), g.start) == p.rhs.end();
                const bool left = std::all_of(p.rhs.begin(), it, [&](Symbol s) { return in(s, {a, c}); });
                const bool right = std::all_of(it + 1, p.rhs.end(), [&](Symbol s) { return in(s, {b, d}); });
                ok = single && left && right;
            } else if (p.rhs.empty()) {
                out.push_back({Severity::error, "empty-terminal-rule",
                               show(p) + " (S -> eps has no special-form counterpart; compose it with S' instead)"});
                continue;
            } else {
                ok = std::all_of(p.rhs.begin(), p.rhs.end(), [&](Symbol s) { return roles.emittable(s); });
            }
        } else if (p.rhs.empty() && (p.lhs == Word{a, b} || p.lhs == Word{c, d})) {
            ok = true;
        }
        if (!ok) out.push_back({Severity::error, "shape-error", show(p)});
    }
    return out;
}

SpecialGnfGrammar linearize(const Grammar& g) {
    Diagnostics ds = validate_geffert(g);
    if (has_errors(ds)) throw GrammarError(std::move(ds));

    std::set<std::string> symbols;
    for (Symbol s : g.nonterminal_set()) symbols.insert(s.name());
    for (Symbol s : g.terminals) symbols.insert(s.name());
    std::set<std::string> labels;
    for (const auto& p : g.productions) labels.insert(p.label);

    Grammar out;
    out.kind = GrammarKind::special_gnf;
    out.terminals = g.terminals;
    out.special = g.special;
    out.start = g.start;
    const Symbol s = g.start;
    const Symbol s_prime(fresh_name(s.name() + "'", symbols));
    out.nonterminals = {s, s_prime};

    for (const auto& p : g.productions) {
        if (p.lhs.size() != 1) {
            out.productions.push_back(p);
            continue;
        }
        int step = 0;
        auto emit = [&](Word lhs, Word rhs) {
            out.productions.push_back({fresh_name(p.label + "." + std::to_string(++step), labels), std::move(lhs),
                                       std::move(rhs)});
        };
        auto fresh = [&](const std::string& tag) {
            Symbol n(fresh_name(p.label + "." + tag, symbols));
            out.nonterminals.push_back(n);
            return n;
        };

        auto mid = std::find(p.rhs.begin(), p.rhs.end(), s);
        if (mid != p.rhs.end()) {
            const Word u(p.rhs.begin(), mid);
            const Word v(mid + 1, p.rhs.end());
            if (u.empty() && v.empty()) continue;  // S -> S changes nothing
            Symbol current = s;
            for (std::size_t i = 0; i < u.size(); ++i) {
                const bool last = i + 1 == u.size() && v.empty();
                Symbol next = last ? s : fresh(i + 1 < u.size() ? "Z" + std::to_string(i + 1) : "W0");
                emit({current}, {u[i], next});
                current = next;
            }
            for (std::size_t j = v.size(); j-- > 0;) {
                Symbol next = j == 0 ? s : fresh("W" + std::to_string(v.size() - j));
                emit({current}, {next, v[j]});
                current = next;
            }
        } else {
            Symbol current = s;
            for (std::size_t i = 0; i < p.rhs.size(); ++i) {
                Symbol next = i + 1 == p.rhs.size() ? s_prime : fresh("Z" + std::to_string(i + 1));
                emit({current}, {p.rhs[i], next});
                current = next;
            }
        }
    }
    out.productions.push_back({fresh_name("erase-" + s_prime.name(), labels), {s_prime}, {}});
    return as_special_gnf(out);
}

}  // namespace insdel
