#ifndef INSDEL_SPECIAL_GNF_HPP
#define INSDEL_SPECIAL_GNF_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "insdel/diagnostic.hpp"
#include "insdel/grammar.hpp"

namespace insdel {

/// The five production shapes of the special Geffert normal form.
enum class Shape {
    left_linear,    // X -> b Y
    right_linear,   // X -> Y b
    erase_s_prime,  // S' -> eps
    erase_ab,       // A B -> eps
    erase_cd,       // C D -> eps
};

std::string to_string(Shape shape);

struct ClassifiedProduction {
    Production production;
    Shape shape = Shape::left_linear;
    // Linear shapes only: X, Y and the emitted symbol b.
    Symbol from;
    Symbol next;
    Symbol emitted;
};

/// A grammar validated against the special Geffert normal form, together
/// with the derived symbol roles. S' is the left-hand side of the unique
/// single-symbol erasing production.
struct SpecialGnfGrammar {
    Grammar grammar;
    Symbol s_prime;
    std::array<Symbol, 4> pairs;  // A, B, C, D
    SymbolSet primed;             // N' = N minus the pair symbols
    std::vector<ClassifiedProduction> rules;

    const ClassifiedProduction* find(std::string_view label) const;
};

/// Throws when a grammar fails validation; carries every diagnostic.
class GrammarError : public std::runtime_error {
public:
    explicit GrammarError(Diagnostics diagnostics);
    const Diagnostics& diagnostics() const noexcept { return diagnostics_; }

private:
    Diagnostics diagnostics_;
};

/// Shape violations are errors; right-hand-side uniqueness violations are
/// warnings ("uniqueness-warning").
Diagnostics validate_special_gnf(const Grammar& g);

/// Validates and classifies. Throws GrammarError if any error is reported.
SpecialGnfGrammar as_special_gnf(const Grammar& g);

/// Checks the Geffert normal form: N' = {S}, rules S -> u S v with
/// u in {A,C}*, v in {B,D}*, S -> x with non-empty x over T and the pair
/// symbols, and the two pair erasers.
Diagnostics validate_geffert(const Grammar& g);

/// Splits each S -> u S v and S -> x into a chain of left- and right-linear
/// rules over fresh nonterminals, introduces S' with S' -> eps, and passes
/// the pair erasers through. Throws GrammarError on non-Geffert input.
SpecialGnfGrammar linearize(const Grammar& g);

/// Returns `base` if unused, otherwise the first unused `base_1`, `base_2`, ...
/// The chosen name is added to `used`.
std::string fresh_name(const std::string& base, std::set<std::string>& used);

}  // namespace insdel

#endif  // INSDEL_SPECIAL_GNF_HPP
