// Independent reference implementations used only by the tests. Nothing here
// calls into the search engine of the library.
#ifndef INSDEL_TESTS_ORACLES_HPP
#define INSDEL_TESTS_ORACLES_HPP

#include <deque>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "insdel/gcid.hpp"
#include "insdel/rule.hpp"
#include "insdel/symbol.hpp"

namespace oracle {

using insdel::Symbol;
using insdel::Word;

inline Word w(const char* text) { return insdel::parse_word(text); }

inline bool has_at(const Word& s, std::size_t at, const Word& piece) {
    if (at + piece.size() > s.size()) return false;
    for (std::size_t k = 0; k < piece.size(); ++k)
        if (!(s[at + k] == piece[k])) return false;
    return true;
}

// Split-point formulation: an insertion happens at a cut c with u ending at c
// and v starting at c; a deletion removes body occurrences with u before and v
// after. Returns (position of the window start, result).
inline std::set<std::pair<std::size_t, Word>> rewrite(const Word& s, const insdel::Rule& r) {
    std::set<std::pair<std::size_t, Word>> out;
    if (r.mode == insdel::Mode::insertion) {
        for (std::size_t c = 0; c <= s.size(); ++c) {
            if (c < r.left.size() || !has_at(s, c - r.left.size(), r.left) || !has_at(s, c, r.right)) continue;
            Word t(s.begin(), s.begin() + c);
            t.insert(t.end(), r.body.begin(), r.body.end());
            t.insert(t.end(), s.begin() + c, s.end());
            out.emplace(c - r.left.size(), t);
        }
    } else {
        for (std::size_t c = 0; c + r.body.size() <= s.size(); ++c) {
            if (!has_at(s, c, r.body)) continue;
            if (c < r.left.size() || !has_at(s, c - r.left.size(), r.left)) continue;
            if (!has_at(s, c + r.body.size(), r.right)) continue;
            Word t(s.begin(), s.begin() + c);
            t.insert(t.end(), s.begin() + c + r.body.size(), s.end());
            out.emplace(c - r.left.size(), t);
        }
    }
    return out;
}

// All words of length <= n over `alphabet`, shortest first.
inline std::vector<Word> all_words(const std::vector<Symbol>& alphabet, std::size_t n) {
    std::vector<Word> out{Word{}};
    std::size_t from = 0;
    for (std::size_t len = 1; len <= n; ++len) {
        const std::size_t to = out.size();
        for (std::size_t i = from; i < to; ++i)
            for (Symbol s : alphabet) {
                Word t = out[i];
                t.push_back(s);
                out.push_back(std::move(t));
            }
        from = to;
    }
    return out;
}

// Plain reachability over (component, word), only length-bounded.
inline std::set<Word> system_language(const insdel::ComponentSystem& sys, std::size_t max_len,
                                      std::size_t max_intermediate) {
    std::set<std::pair<int, Word>> seen;
    std::deque<std::pair<int, Word>> todo;
    for (const auto& a : sys.axioms)
        if (a.size() <= max_intermediate && seen.emplace(sys.initial, a).second) todo.emplace_back(sys.initial, a);
    std::set<Word> lang;
    while (!todo.empty()) {
        auto [site, word] = todo.front();
        todo.pop_front();
        if (site == sys.final_component && word.size() <= max_len && insdel::contains(sys.terminals, word))
            lang.insert(word);
        for (const auto& cr : sys.rules) {
            if (cr.source != site) continue;
            for (const auto& [pos, next] : rewrite(word, cr.rule)) {
                (void)pos;
                if (next.size() > max_intermediate) continue;
                if (seen.emplace(cr.target, next).second) todo.emplace_back(cr.target, next);
            }
        }
    }
    return lang;
}

inline std::set<Word> anbn(std::size_t max_len) {
    std::set<Word> out;
    for (std::size_t n = 1; 2 * n <= max_len; ++n) {
        Word t(n, Symbol("a"));
        t.insert(t.end(), n, Symbol("b"));
        out.insert(t);
    }
    return out;
}

template <class Set>
std::set<Word> plain(const Set& s) {
    return {s.begin(), s.end()};
}

// Random small rules over `alphabet` for property tests.
inline insdel::Rule random_rule(std::mt19937& rng, const std::vector<Symbol>& alphabet, std::size_t max_ctx,
                                std::size_t max_body) {
    auto pick = [&](std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    };
    auto word = [&](std::size_t n) {
        Word t;
        for (std::size_t i = 0; i < n; ++i) t.push_back(alphabet[pick(0, alphabet.size() - 1)]);
        return t;
    };
    insdel::Rule r;
    r.mode = pick(0, 1) ? insdel::Mode::insertion : insdel::Mode::deletion;
    r.left = word(pick(0, max_ctx));
    r.body = word(pick(1, max_body));
    r.right = word(pick(0, max_ctx));
    return r;
}

}  // namespace oracle

#endif
