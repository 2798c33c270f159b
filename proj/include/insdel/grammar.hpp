#ifndef INSDEL_GRAMMAR_HPP
#define INSDEL_GRAMMAR_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "insdel/diagnostic.hpp"
#include "insdel/rule.hpp"
#include "insdel/symbol.hpp"

namespace insdel {

struct Production {
    std::string label;
    Word lhs;  // non-empty
    Word rhs;

    friend bool operator==(const Production&, const Production&) = default;
};

enum class GrammarKind { special_gnf, geffert };

/// G = (N, T, P, S). `nonterminals` holds the declared non-pair
/// nonterminals and `special` the four pair symbols A B C D, in that order;
/// N is their union.
struct Grammar {
    GrammarKind kind = GrammarKind::special_gnf;
    std::vector<Symbol> nonterminals;
    std::vector<Symbol> terminals;
    std::vector<Symbol> special;
    Symbol start;
    std::vector<Production> productions;

    SymbolSet nonterminal_set() const;
    SymbolSet terminal_set() const;
    const Production* find(std::string_view label) const;

    friend bool operator==(const Grammar&, const Grammar&) = default;
};

/// Disjointness of N and T, symbol membership, label uniqueness, start in N.
Diagnostics validate_grammar(const Grammar& g);

/// Every word obtained from `form` by one application of `p` at any position.
WordSet one_step_rewrites(const Production& p, const Word& form);

struct FormSearch {
    std::vector<Word> forms;  // BFS discovery order, the start symbol first
    bool exhausted = false;
};

/// Every sentential form reachable from S within max_steps derivation steps
/// and the intermediate length bound.
FormSearch reachable_forms(const Grammar& g, const SearchBounds& bounds);

/// Terminal words of length <= max_len derivable from S within the bounds.
/// This is the reference oracle for compiled systems; it is a plain
/// rewriting search that shares no code with the system engines.
EnumerationResult grammar_enumerate(const Grammar& g, const SearchBounds& bounds);

struct DerivationStep {
    std::string label;
    std::size_t position = 0;
    Word form;
};

struct Derivation {
    Word start;
    std::vector<DerivationStep> steps;
};

/// Shortest derivation S =>* target (ties broken by production order, then
/// position), or nullopt if none exists within the bounds.
std::optional<Derivation> derive(const Grammar& g, const Word& target, const SearchBounds& bounds);

}  // namespace insdel

#endif  // INSDEL_GRAMMAR_HPP
