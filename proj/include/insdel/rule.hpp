#ifndef INSDEL_RULE_HPP
#define INSDEL_RULE_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "insdel/diagnostic.hpp"
#include "insdel/symbol.hpp"

namespace insdel {

enum class Mode { insertion, deletion };

/// An insertion or deletion triple (left, body, right). Insertion rewrites
/// left·right into left·body·right; deletion rewrites left·body·right into
/// left·right. The body is never empty.
struct Rule {
    Mode mode = Mode::insertion;
    Word left;
    Word body;
    Word right;

    static Rule ins(Word left, Word body, Word right) {
        return Rule{Mode::insertion, std::move(left), std::move(body), std::move(right)};
    }
    static Rule del(Word left, Word body, Word right) {
        return Rule{Mode::deletion, std::move(left), std::move(body), std::move(right)};
    }

    /// The same triple with the opposite mode.
    Rule inverse() const {
        return Rule{mode == Mode::insertion ? Mode::deletion : Mode::insertion, left, body, right};
    }

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// One rewriting result. `position` is the start index of the matched window
/// (left·right for insertion, left·body·right for deletion).
struct Match {
    Word word;
    std::size_t position = 0;

    friend bool operator==(const Match&, const Match&) = default;
};

/// All results of applying `rule` to `w`, one per occurrence (overlapping
/// occurrences included), ordered by position.
std::vector<Match> apply_rule(const Word& w, const Rule& rule);

/// Calls `fn(position, result)` for every occurrence. Used by the search
/// engines to avoid materialising the match list.
template <class Fn>
void for_each_match(const Word& w, const Rule& rule, Fn&& fn);

/// (n, m, m'; p, q, q'): maxima of body/left/right lengths over insertion
/// rules, then the same over deletion rules. The maximum over no rules is 0.
struct SizeVector {
    std::size_t n = 0, m = 0, m_prime = 0;
    std::size_t p = 0, q = 0, q_prime = 0;

    friend bool operator==(const SizeVector&, const SizeVector&) = default;

    /// Rendered as "(n,m,m';p,q,q')".
    std::string to_string() const;
};

SizeVector size_of(std::span<const Rule> insertions, std::span<const Rule> deletions);

/// Mixed rule list; each rule contributes according to its own mode.
SizeVector size_of(std::span<const Rule> rules);

/// Search budgets shared by every bounded enumeration.
struct SearchBounds {
    std::size_t max_len = 8;
    std::optional<std::size_t> max_intermediate;  // defaults to max_len + 6
    std::size_t max_steps = 200;
    std::size_t visited_budget = 1'000'000;

    std::size_t intermediate() const { return max_intermediate.value_or(max_len + 6); }

    /// Throws std::invalid_argument when max_len exceeds max_intermediate.
    void check() const;
};

struct EnumerationResult {
    WordSet words;
    /// The visited budget ran out; `words` is then a lower bound only.
    bool exhausted = false;
    std::size_t visited = 0;
};

/// ID = (V, T, A, I, D).
struct InsDelSystem {
    SymbolSet alphabet;
    SymbolSet terminals;
    WordSet axioms;
    std::vector<Rule> insertions;
    std::vector<Rule> deletions;
};

Diagnostics validate(const InsDelSystem& sys);

/// Terminal words of length <= max_len reachable from an axiom in at most
/// max_steps rule applications with every intermediate word no longer than
/// the intermediate bound.
EnumerationResult enumerate_basic(const InsDelSystem& sys, const SearchBounds& bounds);

// ---------------------------------------------------------------------------

template <class Fn>
void for_each_match(const Word& w, const Rule& rule, Fn&& fn) {
    const Word& u = rule.left;
    const Word& a = rule.body;
    const Word& v = rule.right;
    const bool insertion = rule.mode == Mode::insertion;
    const std::size_t window = u.size() + v.size() + (insertion ? 0 : a.size());
    if (window > w.size()) return;
    for (std::size_t i = 0; i + window <= w.size(); ++i) {
        auto it = w.begin() + static_cast<std::ptrdiff_t>(i);
        if (!std::equal(u.begin(), u.end(), it)) continue;
        auto mid = it + static_cast<std::ptrdiff_t>(u.size());
        if (!insertion) {
            if (!std::equal(a.begin(), a.end(), mid)) continue;
            mid += static_cast<std::ptrdiff_t>(a.size());
        }
        if (!std::equal(v.begin(), v.end(), mid)) continue;

        Word out;
        auto cut = it + static_cast<std::ptrdiff_t>(u.size());
        if (insertion) {
            out.reserve(w.size() + a.size());
            out.insert(out.end(), w.begin(), cut);
            out.insert(out.end(), a.begin(), a.end());
            out.insert(out.end(), cut, w.end());
        } else {
            out.reserve(w.size() - a.size());
            out.insert(out.end(), w.begin(), cut);
            out.insert(out.end(), cut + static_cast<std::ptrdiff_t>(a.size()), w.end());
        }
        fn(i, std::move(out));
    }
}

}  // namespace insdel

#endif  // INSDEL_RULE_HPP
