#ifndef INSDEL_SRC_SEARCH_HPP
#define INSDEL_SRC_SEARCH_HPP

// Breadth-first exploration over (site, word) configurations, shared by the
// plain, component and label formulations. The grammar oracle deliberately
// does not use this engine.

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include "insdel/rule.hpp"
#include "insdel/symbol.hpp"

namespace insdel::detail {

inline constexpr std::size_t no_parent = std::numeric_limits<std::size_t>::max();

template <class Site>
struct Successor {
    std::size_t rule = 0;  // index into the owner's label-sorted rule list
    std::size_t position = 0;
    Site site{};
    Word word;
};

template <class Site>
struct Node {
    Site site{};
    Word word;
    std::size_t parent = no_parent;
    std::size_t rule = 0;
    std::size_t depth = 0;
};

template <class Site>
struct Exploration {
    std::vector<Node<Site>> nodes;  // in discovery order
    bool exhausted = false;
    std::optional<std::size_t> goal;

    /// Node indices from a start node to `last`, inclusive.
    std::vector<std::size_t> path_to(std::size_t last) const {
        std::vector<std::size_t> out;
        for (std::size_t i = last; i != no_parent; i = nodes[i].parent) out.push_back(i);
        std::reverse(out.begin(), out.end());
        return out;
    }
};

// `expand(site, word, out)` appends every successor of a configuration.
// `goal(node)` stops the search at the first node for which it holds.
// Successors are visited in (rule, position, site) order, so the first parent
// recorded for a configuration is the lexicographically least one of its layer.
template <class Site, class Expand, class Goal>
Exploration<Site> breadth_first(const std::vector<std::pair<Site, Word>>& starts, const SearchBounds& bounds,
                                Expand&& expand, Goal&& goal) {
    Exploration<Site> ex;
    auto& nodes = ex.nodes;
    const std::size_t cap = bounds.intermediate();

    auto hash = [&nodes](std::size_t i) {
        return WordHash{}(nodes[i].word) * 31 + std::hash<Site>{}(nodes[i].site);
    };
    auto eq = [&nodes](std::size_t a, std::size_t b) {
        return nodes[a].site == nodes[b].site && nodes[a].word == nodes[b].word;
    };
    std::unordered_set<std::size_t, decltype(hash), decltype(eq)> seen(1024, hash, eq);

    // Returns false when the budget is exhausted.
    auto admit = [&](Node<Site>&& node) -> bool {
        if (node.word.size() > cap) return true;
        nodes.push_back(std::move(node));
        if (!seen.insert(nodes.size() - 1).second) {
            nodes.pop_back();
            return true;
        }
        if (nodes.size() > bounds.visited_budget) {
            seen.erase(nodes.size() - 1);
            nodes.pop_back();
            ex.exhausted = true;
            return false;
        }
        if (goal(nodes.back())) ex.goal = nodes.size() - 1;
        return true;
    };

    for (const auto& [site, word] : starts) {
        if (!admit(Node<Site>{site, word, no_parent, 0, 0})) return ex;
        if (ex.goal) return ex;
    }

    std::vector<Successor<Site>> succ;
    for (std::size_t head = 0; head < nodes.size(); ++head) {
        if (nodes[head].depth >= bounds.max_steps) continue;
        succ.clear();
        // Copy out: admit() may reallocate `nodes`.
        const Site site = nodes[head].site;
        const Word word = nodes[head].word;
        const std::size_t depth = nodes[head].depth;
        expand(site, word, succ);
        std::sort(succ.begin(), succ.end(), [](const Successor<Site>& a, const Successor<Site>& b) {
            return std::tie(a.rule, a.position, a.site) < std::tie(b.rule, b.position, b.site);
        });
        for (auto& s : succ) {
            if (!admit(Node<Site>{s.site, std::move(s.word), head, s.rule, depth + 1})) return ex;
            if (ex.goal) return ex;
        }
    }
    return ex;
}

template <class Site>
std::vector<std::pair<Site, Word>> starts_for(const Site& site, const WordSet& axioms) {
    std::vector<std::pair<Site, Word>> out;
    for (const auto& a : axioms) out.emplace_back(site, a);
    return out;
}

}  // namespace insdel::detail

#endif  // INSDEL_SRC_SEARCH_HPP
