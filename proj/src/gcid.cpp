#include "insdel/gcid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "search.hpp"

namespace insdel {

namespace {

// Rule indices in label order, grouped per component.
struct ComponentIndex {
    std::vector<const ComponentRule*> sorted;
    std::vector<std::vector<std::size_t>> by_source;  // [component] -> indices into `sorted`

    explicit ComponentIndex(const ComponentSystem& sys) : by_source(static_cast<std::size_t>(sys.components) + 1) {
        for (const auto& r : sys.rules) sorted.push_back(&r);
        std::stable_sort(sorted.begin(), sorted.end(),
                         [](const ComponentRule* a, const ComponentRule* b) { return a->label < b->label; });
        for (std::size_t i = 0; i < sorted.size(); ++i) {
            const int s = sorted[i]->source;
            if (s >= 1 && s <= sys.components) by_source[static_cast<std::size_t>(s)].push_back(i);
        }
    }

    void expand(int site, const Word& w, std::vector<detail::Successor<int>>& out) const {
        if (site < 1 || static_cast<std::size_t>(site) >= by_source.size()) return;
        for (std::size_t i : by_source[static_cast<std::size_t>(site)]) {
            const ComponentRule& r = *sorted[i];
            for_each_match(w, r.rule, [&](std::size_t pos, Word&& next) {
                out.push_back({i, pos, r.target, std::move(next)});
            });
        }
    }
};

Trace make_trace(const detail::Exploration<int>& ex, std::size_t last, const ComponentIndex& index) {
    auto path = ex.path_to(last);
    Trace t;
    t.start = Configuration{ex.nodes[path.front()].site, ex.nodes[path.front()].word};
    for (std::size_t k = 1; k < path.size(); ++k) {
        const auto& n = ex.nodes[path[k]];
        t.steps.push_back({index.sorted[n.rule]->label, Configuration{n.site, n.word}});
    }
    return t;
}

void check_symbols(const SymbolSet& alphabet, const Word& w, const std::string& where, Diagnostics& out) {
    for (Symbol s : w)
        if (!alphabet.contains(s)) {
            out.push_back({Severity::error, "symbol-outside-alphabet", where + ": symbol '" + s.name() + "' is not in V"});
            return;
        }
}

void check_common(const SymbolSet& alphabet, const SymbolSet& terminals, const WordSet& axioms, Diagnostics& out) {
    for (Symbol t : terminals)
        if (!alphabet.contains(t))
            out.push_back({Severity::error, "terminal-outside-alphabet", "terminal '" + t.name() + "' is not in V"});
    for (const auto& a : axioms) check_symbols(alphabet, a, "axiom '" + format_word(a) + "'", out);
}

void check_rule(const SymbolSet& alphabet, const std::string& label, const Rule& r, Diagnostics& out) {
    if (!is_valid_symbol_name(label))
        out.push_back({Severity::error, "invalid-label", "label '" + label + "' is not a valid token"});
    if (r.body.empty()) out.push_back({Severity::error, "empty-rule-body", "rule " + label});
    check_symbols(alphabet, r.left, "rule " + label, out);
    check_symbols(alphabet, r.body, "rule " + label, out);
    check_symbols(alphabet, r.right, "rule " + label, out);
}

}  // namespace

void ComponentSystem::sort_rules() {
    std::stable_sort(rules.begin(), rules.end(),
                     [](const ComponentRule& a, const ComponentRule& b) { return a.label < b.label; });
}

std::vector<Rule> ComponentSystem::plain_rules() const {
    std::vector<Rule> out;
    for (const auto& r : rules) out.push_back(r.rule);
    return out;
}

void LabelSystem::sort_rules() {
    std::stable_sort(rules.begin(), rules.end(),
                     [](const LabelRule& a, const LabelRule& b) { return a.label < b.label; });
}

std::vector<Rule> LabelSystem::plain_rules() const {
    std::vector<Rule> out;
    for (const auto& r : rules) out.push_back(r.rule);
    return out;
}

std::vector<Configuration> Trace::configurations() const {
    std::vector<Configuration> out{start};
    for (const auto& s : steps) out.push_back(s.config);
    return out;
}

Diagnostics validate(const ComponentSystem& sys) {
    Diagnostics out;
    if (sys.components < 1) out.push_back({Severity::error, "no-components", "k must be at least 1"});
    auto in_range = [&](int i) { return i >= 1 && i <= sys.components; };
    if (!in_range(sys.initial))
        out.push_back({Severity::error, "component-out-of-range", "initial component " + std::to_string(sys.initial)});
    if (!in_range(sys.final_component))
        out.push_back(
            {Severity::error, "component-out-of-range", "final component " + std::to_string(sys.final_component)});
    check_common(sys.alphabet, sys.terminals, sys.axioms, out);
    std::set<std::string> labels;
    for (const auto& r : sys.rules) {
        if (!labels.insert(r.label).second)
            out.push_back({Severity::error, "duplicate-label", r.label});
        if (!in_range(r.source))
            out.push_back({Severity::error, "component-out-of-range",
                           "rule " + r.label + " source " + std::to_string(r.source)});
        if (!in_range(r.target))
            out.push_back({Severity::error, "component-out-of-range",
                           "rule " + r.label + " target " + std::to_string(r.target)});
        check_rule(sys.alphabet, r.label, r.rule, out);
    }
    return out;
}

Diagnostics validate(const LabelSystem& sys) {
    Diagnostics out;
    check_common(sys.alphabet, sys.terminals, sys.axioms, out);
    std::set<std::string> labels;
    for (const auto& r : sys.rules) {
        if (!labels.insert(r.label).second) out.push_back({Severity::error, "duplicate-label", r.label});
        check_rule(sys.alphabet, r.label, r.rule, out);
    }
    for (const auto& r : sys.rules)
        for (const auto& s : r.successors)
            if (!labels.contains(s))
                out.push_back({Severity::error, "unknown-label", "rule " + r.label + " names successor " + s});
    for (const auto& l : sys.initial_labels)
        if (!labels.contains(l)) out.push_back({Severity::error, "unknown-label", "initial label " + l});
    for (const auto& l : sys.final_labels)
        if (!labels.contains(l)) out.push_back({Severity::error, "unknown-label", "final label " + l});
    return out;
}

SizeVector size_of(const ComponentSystem& sys) { return size_of(sys.plain_rules()); }
SizeVector size_of(const LabelSystem& sys) { return size_of(sys.plain_rules()); }

std::vector<Transition> step(const ComponentSystem& sys, const Configuration& c) {
    ComponentIndex index(sys);
    std::vector<detail::Successor<int>> succ;
    index.expand(c.site, c.word, succ);
    std::vector<Transition> out;
    for (auto& s : succ)
        out.push_back({index.sorted[s.rule]->label, Configuration{s.site, std::move(s.word)}, s.position});
    return out;
}

std::vector<std::pair<std::string, Word>> step(const LabelSystem& sys, const std::string& label, const Word& w) {
    std::vector<std::pair<std::string, Word>> out;
    for (const auto& r : sys.rules) {
        if (r.label != label) continue;
        for (const auto& m : apply_rule(w, r.rule))
            for (const auto& s : r.successors) out.emplace_back(s, m.word);
    }
    return out;
}

EnumerationResult enumerate(const ComponentSystem& sys, const SearchBounds& bounds) {
    bounds.check();
    ComponentIndex index(sys);
    auto ex = detail::breadth_first<int>(
        detail::starts_for(sys.initial, sys.axioms), bounds,
        [&](int site, const Word& w, auto& out) { index.expand(site, w, out); },
        [](const detail::Node<int>&) { return false; });
    EnumerationResult result;
    result.exhausted = ex.exhausted;
    result.visited = ex.nodes.size();
    for (const auto& n : ex.nodes)
        if (n.site == sys.final_component && n.word.size() <= bounds.max_len && contains(sys.terminals, n.word))
            result.words.insert(n.word);
    return result;
}

EnumerationResult enumerate(const LabelSystem& sys, const SearchBounds& bounds) {
    bounds.check();
    // Sites are indices into the label-sorted rule list.
    std::vector<const LabelRule*> sorted;
    for (const auto& r : sys.rules) sorted.push_back(&r);
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const LabelRule* a, const LabelRule* b) { return a->label < b->label; });
    std::map<std::string, std::size_t> id;
    for (std::size_t i = 0; i < sorted.size(); ++i) id.emplace(sorted[i]->label, i);
    std::vector<std::vector<std::size_t>> successors(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        for (const auto& s : sorted[i]->successors)
            if (auto it = id.find(s); it != id.end()) successors[i].push_back(it->second);
    std::vector<bool> is_final(sorted.size(), false);
    for (const auto& l : sys.final_labels)
        if (auto it = id.find(l); it != id.end()) is_final[it->second] = true;

    std::vector<std::pair<std::size_t, Word>> starts;
    for (const auto& l : sys.initial_labels)
        if (auto it = id.find(l); it != id.end())
            for (const auto& a : sys.axioms) starts.emplace_back(it->second, a);

    auto ex = detail::breadth_first<std::size_t>(
        starts, bounds,
        [&](std::size_t site, const Word& w, std::vector<detail::Successor<std::size_t>>& out) {
            for_each_match(w, sorted[site]->rule, [&](std::size_t pos, Word&& next) {
                for (std::size_t s : successors[site]) out.push_back({site, pos, s, next});
            });
        },
        [](const detail::Node<std::size_t>&) { return false; });
    EnumerationResult result;
    result.exhausted = ex.exhausted;
    result.visited = ex.nodes.size();
    for (const auto& n : ex.nodes)
        if (is_final[n.site] && n.word.size() <= bounds.max_len && contains(sys.terminals, n.word))
            result.words.insert(n.word);
    return result;
}

Membership find_trace(const ComponentSystem& sys, const Configuration& from,
                      const std::function<bool(const Configuration&)>& goal, const SearchBounds& bounds) {
    ComponentIndex index(sys);
    auto ex = detail::breadth_first<int>(
        {{from.site, from.word}}, bounds, [&](int site, const Word& w, auto& out) { index.expand(site, w, out); },
        [&](const detail::Node<int>& n) { return goal(Configuration{n.site, n.word}); });
    Membership m;
    m.exhausted = ex.exhausted;
    m.visited = ex.nodes.size();
    if (ex.goal) m.trace = make_trace(ex, *ex.goal, index);
    return m;
}

Membership member(const ComponentSystem& sys, const Word& w, SearchBounds bounds) {
    if (bounds.max_len < w.size()) bounds.max_len = w.size();
    bounds.check();
    ComponentIndex index(sys);
    const int final_component = sys.final_component;
    auto ex = detail::breadth_first<int>(
        detail::starts_for(sys.initial, sys.axioms), bounds,
        [&](int site, const Word& word, auto& out) { index.expand(site, word, out); },
        [&](const detail::Node<int>& n) { return n.site == final_component && n.word == w; });
    Membership m;
    m.exhausted = ex.exhausted;
    m.visited = ex.nodes.size();
    if (ex.goal) m.trace = make_trace(ex, *ex.goal, index);
    return m;
}

Reachability reachable(const ComponentSystem& sys, const Configuration& from, const SearchBounds& bounds) {
    ComponentIndex index(sys);
    auto ex = detail::breadth_first<int>(
        {{from.site, from.word}}, bounds, [&](int site, const Word& w, auto& out) { index.expand(site, w, out); },
        [](const detail::Node<int>&) { return false; });
    Reachability r;
    r.exhausted = ex.exhausted;
    for (auto& n : ex.nodes) {
        r.configs.push_back(Configuration{n.site, n.word});
        r.depths.push_back(n.depth);
    }
    return r;
}

bool replays(const ComponentSystem& sys, const Trace& trace) {
    Configuration current = trace.start;
    for (const auto& s : trace.steps) {
        auto next = step(sys, current);
        const bool ok = std::any_of(next.begin(), next.end(), [&](const Transition& t) {
            return t.label == s.label && t.config == s.config;
        });
        if (!ok) return false;
        current = s.config;
    }
    return true;
}

ComponentSystem restrict_rules(const ComponentSystem& sys, const std::function<bool(const std::string&)>& keep) {
    ComponentSystem out = sys;
    out.rules.clear();
    for (const auto& r : sys.rules)
        if (keep(r.label)) out.rules.push_back(r);
    return out;
}

LabelConversion to_label_form(const ComponentSystem& sys) {
    std::map<int, std::set<std::string>> lab;
    for (const auto& r : sys.rules) lab[r.source].insert(r.label);
    auto labels_of = [&](int i) {
        auto it = lab.find(i);
        return it == lab.end() ? std::set<std::string>{} : it->second;
    };

    LabelConversion out;
    LabelSystem& ls = out.system;
    ls.alphabet = sys.alphabet;
    ls.terminals = sys.terminals;
    ls.axioms = sys.axioms;
    ls.initial_labels = labels_of(sys.initial);
    ls.final_labels = labels_of(sys.final_component);
    for (const auto& r : sys.rules) ls.rules.push_back({r.label, r.rule, labels_of(r.target)});
    ls.sort_rules();

    if (ls.final_labels.empty())
        out.notes.push_back({Severity::warning, "empty-final-component",
                             "final component " + std::to_string(sys.final_component) +
                                 " has no rules; words situated there cannot be represented"});
    if (ls.initial_labels.empty())
        out.notes.push_back({Severity::warning, "empty-initial-component",
                             "initial component " + std::to_string(sys.initial) + " has no rules"});
    return out;
}

ComponentSystem to_component_form(const LabelSystem& sys) {
    if (sys.initial_labels.empty()) throw ConversionError("label system has no initial labels");
    if (sys.final_labels.empty()) throw ConversionError("label system has no final labels");
    for (const auto& l : sys.initial_labels)
        if (sys.final_labels.contains(l))
            for (const auto& a : sys.axioms)
                if (contains(sys.terminals, a))
                    throw ConversionError("terminal axiom '" + format_word(a) +
                                          "' is accepted without a step; a rule-free sink cannot represent it");

    std::map<std::string, const LabelRule*> by_label;
    for (const auto& r : sys.rules) by_label.emplace(r.label, &r);

    using LabelSet = std::set<std::string>;
    std::map<LabelSet, int> component_of;
    std::vector<LabelSet> subsets;
    auto intern = [&](const LabelSet& s) {
        auto [it, fresh] = component_of.emplace(s, static_cast<int>(subsets.size()) + 1);
        if (fresh) subsets.push_back(s);
        return it->second;
    };
    intern(sys.initial_labels);

    struct Pending {
        std::string label;
        int source;
        const LabelRule* rule;
        int target;       // 0 = sink
    };
    std::vector<Pending> pending;
    for (std::size_t k = 0; k < subsets.size(); ++k) {
        const LabelSet current = subsets[k];
        const int source = static_cast<int>(k) + 1;
        for (const auto& l : current) {
            auto it = by_label.find(l);
            if (it == by_label.end()) continue;
            const LabelRule* r = it->second;
            if (r->successors.empty()) continue;  // dead end
            pending.push_back({l + "@" + std::to_string(source), source, r, intern(r->successors)});
            const bool meets_final = std::any_of(r->successors.begin(), r->successors.end(),
                                                 [&](const std::string& s) { return sys.final_labels.contains(s); });
            if (meets_final) pending.push_back({l + "@" + std::to_string(source) + ".final", source, r, 0});
        }
    }

    ComponentSystem out;
    const int sink = static_cast<int>(subsets.size()) + 1;
    out.components = sink;
    out.alphabet = sys.alphabet;
    out.terminals = sys.terminals;
    out.axioms = sys.axioms;
    out.initial = 1;
    out.final_component = sink;
    for (const auto& p : pending)
        out.rules.push_back({p.label, p.source, p.rule->rule, p.target == 0 ? sink : p.target});
    out.sort_rules();
    return out;
}

CommGraph communication_graph(const ComponentSystem& sys) {
    CommGraph g;
    g.nodes = sys.components;
    for (const auto& r : sys.rules) g.edges.emplace(r.source, r.target);
    return g;
}

std::string to_string(GraphShape shape) {
    switch (shape) {
        case GraphShape::linear_chain: return "linear-chain";
        case GraphShape::tree: return "tree";
        case GraphShape::general: return "general";
    }
    return "general";
}

GraphShape classify_graph(const CommGraph& g) {
    const int k = g.nodes;
    if (k <= 1) return GraphShape::linear_chain;
    std::set<std::pair<int, int>> undirected;
    for (auto [i, j] : g.edges) {
        if (i == j) continue;
        undirected.emplace(std::min(i, j), std::max(i, j));
    }
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(k) + 1);
    for (auto [i, j] : undirected) {
        if (i < 1 || j > k) return GraphShape::general;
        adj[static_cast<std::size_t>(i)].push_back(j);
        adj[static_cast<std::size_t>(j)].push_back(i);
    }
    std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
    std::queue<int> todo;
    todo.push(1);
    seen[1] = true;
    int reached = 1;
    while (!todo.empty()) {
        int n = todo.front();
        todo.pop();
        for (int m : adj[static_cast<std::size_t>(n)])
            if (!seen[static_cast<std::size_t>(m)]) {
                seen[static_cast<std::size_t>(m)] = true;
                ++reached;
                todo.push(m);
            }
    }
    if (reached != k || undirected.size() != static_cast<std::size_t>(k - 1)) return GraphShape::general;
    const bool path = std::all_of(adj.begin(), adj.end(), [](const std::vector<int>& a) { return a.size() <= 2; });
    return path ? GraphShape::linear_chain : GraphShape::tree;
}

std::string to_dot(const CommGraph& g) {
    std::ostringstream os;
    os << "digraph G {\n";
    std::set<int> touched;
    for (auto [i, j] : g.edges) {
        touched.insert(i);
        touched.insert(j);
    }
    for (int n = 1; n <= g.nodes; ++n)
        if (!touched.contains(n)) os << "  " << n << ";\n";
    for (auto [i, j] : g.edges) os << "  " << i << " -> " << j << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace insdel
