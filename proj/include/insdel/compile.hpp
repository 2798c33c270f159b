#ifndef INSDEL_COMPILE_HPP
#define INSDEL_COMPILE_HPP

#include <string>
#include <vector>

#include "insdel/gcid.hpp"
#include "insdel/special_gnf.hpp"

namespace insdel {

/// The four 4-component simulations of a special-form grammar, numbered as
/// on the command line. Each produces rules of the stated size.
enum class Construction {
    contextual_insertion = 1,  // (1,1,0;2,0,0), linear communication graph
    left_deletion = 2,         // (1,1,0;1,1,0)
    right_deletion = 3,        // (1,1,0;1,0,1)
    pair_insertion = 4,        // (2,0,0;1,1,0)
};

/// The size vector every system built by `c` has.
SizeVector expected_size(Construction c);

/// What was generated for one grammar production.
struct RuleGroup {
    std::string production;
    Shape shape = Shape::left_linear;
    Word lhs;
    Word rhs;
    std::vector<Symbol> markers;           // p (and p' for construction 1), or K / K'
    std::vector<std::string> rule_labels;  // system rules simulating this production
};

struct CompilationOutput {
    Construction construction = Construction::contextual_insertion;
    ComponentSystem system;
    std::vector<RuleGroup> groups;  // one per production, in grammar order
    std::vector<Symbol> eraser_symbols;
    std::vector<std::string> notes;

    const RuleGroup* group(std::string_view production) const;
};

/// Builds Pi = (4, V, T, {S}, H, 1, 1, R). Marker symbols reuse the production
/// label (p' appends a prime); eraser rules use the label prefix "k". Names
/// that would collide with grammar symbols are suffixed until fresh.
CompilationOutput compile(const SpecialGnfGrammar& g, Construction c);

}  // namespace insdel

#endif  // INSDEL_COMPILE_HPP
