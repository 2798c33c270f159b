#ifndef INSDEL_GCID_HPP
#define INSDEL_GCID_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "insdel/diagnostic.hpp"
#include "insdel/rule.hpp"
#include "insdel/symbol.hpp"

namespace insdel {

/// l : (source, rule, target). Components are numbered from 1.
struct ComponentRule {
    std::string label;
    int source = 1;
    Rule rule;
    int target = 1;

    friend bool operator==(const ComponentRule&, const ComponentRule&) = default;
};

/// Graph-controlled insertion-deletion system with k components,
/// (k, V, T, A, H, i0, if, R). The label set H is the set of rule labels.
struct ComponentSystem {
    int components = 1;
    SymbolSet alphabet;
    SymbolSet terminals;
    WordSet axioms;
    int initial = 1;
    int final_component = 1;
    std::vector<ComponentRule> rules;

    /// Sorts the rules by label. Every operation is order-independent; this
    /// only fixes the printed form.
    void sort_rules();

    std::vector<Rule> plain_rules() const;
};

/// l : (rule, successors).
struct LabelRule {
    std::string label;
    Rule rule;
    std::set<std::string> successors;

    friend bool operator==(const LabelRule&, const LabelRule&) = default;
};

/// (V, T, A, H, I0, If, R) with acceptance on arrival at a final label.
struct LabelSystem {
    SymbolSet alphabet;
    SymbolSet terminals;
    WordSet axioms;
    std::set<std::string> initial_labels;
    std::set<std::string> final_labels;
    std::vector<LabelRule> rules;

    void sort_rules();
    std::vector<Rule> plain_rules() const;
};

/// (site, word); the site is a component number.
struct Configuration {
    int site = 1;
    Word word;

    friend bool operator==(const Configuration&, const Configuration&) = default;
};

struct TraceStep {
    std::string label;
    Configuration config;

    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
    Configuration start;
    std::vector<TraceStep> steps;

    const Configuration& last() const { return steps.empty() ? start : steps.back().config; }
    /// start plus one configuration per step.
    std::vector<Configuration> configurations() const;

    friend bool operator==(const Trace&, const Trace&) = default;
};

struct Transition {
    std::string label;
    Configuration config;
    std::size_t position = 0;

    friend bool operator==(const Transition&, const Transition&) = default;
};

Diagnostics validate(const ComponentSystem& sys);
Diagnostics validate(const LabelSystem& sys);

SizeVector size_of(const ComponentSystem& sys);
SizeVector size_of(const LabelSystem& sys);

/// Every transition out of `c`, ordered by (label, position).
/// Empty when the configuration is halted.
std::vector<Transition> step(const ComponentSystem& sys, const Configuration& c);

/// Label-form transitions out of (label, word): apply that label's rule and
/// move to any successor label. Ordered by (position, successor).
std::vector<std::pair<std::string, Word>> step(const LabelSystem& sys, const std::string& label, const Word& w);

/// Terminal words of length <= max_len situated in the final component and
/// reachable from (i0, axiom) within the bounds. A word counts whether or not
/// further rules would still apply to it.
EnumerationResult enumerate(const ComponentSystem& sys, const SearchBounds& bounds);

/// Label-form language: terminal words reaching a final label.
EnumerationResult enumerate(const LabelSystem& sys, const SearchBounds& bounds);

struct Membership {
    std::optional<Trace> trace;  // set iff found
    bool exhausted = false;
    std::size_t visited = 0;

    bool found() const { return trace.has_value(); }
};

/// Looks for a derivation (i0, axiom) =>* (if, w). A negative answer only
/// means "not found within these bounds". max_len is raised to |w| if needed.
Membership member(const ComponentSystem& sys, const Word& w, SearchBounds bounds);

/// Shortest deterministic trace from `from` to the first configuration
/// satisfying `goal` (checked on discovery; `from` itself may satisfy it).
Membership find_trace(const ComponentSystem& sys, const Configuration& from,
                      const std::function<bool(const Configuration&)>& goal, const SearchBounds& bounds);

struct Reachability {
    std::vector<Configuration> configs;  // BFS discovery order
    std::vector<std::size_t> depths;
    bool exhausted = false;
};

/// Every configuration reachable from `from` within the bounds.
Reachability reachable(const ComponentSystem& sys, const Configuration& from, const SearchBounds& bounds);

/// Replays a trace through step(); true iff every listed configuration is a
/// successor of the previous one under the listed label.
bool replays(const ComponentSystem& sys, const Trace& trace);

/// A subsystem keeping only the rules whose labels satisfy `keep`.
ComponentSystem restrict_rules(const ComponentSystem& sys, const std::function<bool(const std::string&)>& keep);

class ConversionError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct LabelConversion {
    LabelSystem system;
    Diagnostics notes;  // warns when the final component carries no rules
};

/// l:(i, r, j) becomes l:(r, Lab(R_j)); I0 = Lab(R_i0), If = Lab(R_if).
LabelConversion to_label_form(const ComponentSystem& sys);

/// Powerset construction over labels. Components are the non-empty label
/// sets reachable from I0 (component 1 is I0) plus one rule-free sink, which
/// is the final component. A rule whose successor set meets If also gets a
/// copy targeting the sink. Throws ConversionError if I0 or If is empty, or
/// if a terminal axiom would be accepted without any step (the sink cannot
/// hold an axiom).
ComponentSystem to_component_form(const LabelSystem& sys);

struct CommGraph {
    int nodes = 0;
    std::set<std::pair<int, int>> edges;

    friend bool operator==(const CommGraph&, const CommGraph&) = default;
};

CommGraph communication_graph(const ComponentSystem& sys);

enum class GraphShape { linear_chain, tree, general };

std::string to_string(GraphShape shape);

/// Classifies the undirected support of `g` with self-loops removed.
GraphShape classify_graph(const CommGraph& g);

/// `digraph G {` / one `  i -> j;` line per edge in sorted order / `}`.
std::string to_dot(const CommGraph& g);

}  // namespace insdel

#endif  // INSDEL_GCID_HPP
