#ifndef INSDEL_VERIFY_HPP
#define INSDEL_VERIFY_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "insdel/compile.hpp"
#include "insdel/gcid.hpp"
#include "insdel/grammar.hpp"

#include "json.hpp"

namespace insdel {

/// Oracle and system languages side by side, up to a length bound.
struct ComparisonReport {
    std::size_t bound = 0;
    WordSet oracle_words;
    WordSet system_words;
    WordSet missing;  // oracle minus system
    WordSet extra;    // system minus oracle
    std::vector<std::string> resource_flags;

    /// True iff nothing is missing or extra and neither side ran out of budget.
    /// This never claims equality of the full languages.
    bool equal_up_to_bound() const { return missing.empty() && extra.empty() && resource_flags.empty(); }

    nlohmann::json to_json() const;
};

ComparisonReport compare(const Grammar& g, const ComponentSystem& sys, const SearchBounds& bounds);

class NoCanonicalTrace : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t replay_step_limit = 12;

/// The minimal deterministic trace from (1, u X v) to (1, u rhs v) that uses
/// only the rules generated for `production`. `form` must contain exactly
/// one occurrence of the production's left-hand side and no marker symbols.
/// Throws NoCanonicalTrace if no such trace exists within 12 steps, and
/// std::invalid_argument on a bad form or unknown production.
Trace replay_group(const CompilationOutput& compiled, std::string_view production, const Word& form);

/// Command-line flavour: only the rules whose labels start with "<prefix>."
/// are used, and the trace ends at the first return to the initial
/// component with a changed word.
Trace replay_prefix(const ComponentSystem& sys, std::string_view prefix, const Word& form);

/// Words w' such that (1, form) =>* (1, w') within `max_steps` transitions
/// using only the rules generated for `production` (form itself included).
WordSet group_exits(const CompilationOutput& compiled, std::string_view production, const Word& form,
                    std::size_t max_steps);

nlohmann::json to_json(const Word& w);
nlohmann::json to_json(const WordSet& words);
nlohmann::json to_json(const Trace& t);

// The two reference grammars.
// G_ab:    p1: S -> a Z, p2: Z -> S b, p3: Z -> S' b, e: S' -> eps     (a^n b^n, n >= 1)
// G_empty: p1: S -> A Z, p2: Z -> S B, p3: Z -> S' B, e: S' -> eps,
//          eAB: A B -> eps                                           ({eps})
const Grammar& grammar_ab();
const Grammar& grammar_empty();
const char* grammar_ab_text();
const char* grammar_empty_text();

}  // namespace insdel

#endif  // INSDEL_VERIFY_HPP
