#ifndef INSDEL_SYMBOL_HPP
#define INSDEL_SYMBOL_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace insdel {

/// An interned alphabet atom. Two symbols are equal iff their names are equal;
/// ordering is by name so that every printed set is deterministic.
class Symbol {
public:
    /// The placeholder symbol with an empty name. It never occurs in a word.
    Symbol() noexcept;

    /// Interns `name`. Throws std::invalid_argument if the name is not a valid token.
    explicit Symbol(std::string_view name);

    const std::string& name() const noexcept { return *name_; }
    bool valid() const noexcept { return !name_->empty(); }

    friend bool operator==(Symbol a, Symbol b) noexcept { return a.name_ == b.name_; }
    friend std::strong_ordering operator<=>(Symbol a, Symbol b) noexcept {
        if (a.name_ == b.name_) return std::strong_ordering::equal;
        return *a.name_ <=> *b.name_;
    }

    std::size_t hash() const noexcept { return std::hash<const void*>{}(name_); }

private:
    const std::string* name_;
};

/// Names are non-empty, contain no whitespace, and none of `;` `:` `#` `->`.
bool is_valid_symbol_name(std::string_view name) noexcept;

using Word = std::vector<Symbol>;
using SymbolSet = std::set<Symbol>;

struct SymbolHash {
    std::size_t operator()(Symbol s) const noexcept { return s.hash(); }
};

struct WordHash {
    std::size_t operator()(const Word& w) const noexcept {
        std::size_t h = 0xcbf29ce484222325ULL ^ w.size();
        for (Symbol s : w) h = (h ^ s.hash()) * 0x100000001b3ULL;
        return h;
    }
};

/// Shortlex order: shorter words first, then lexicographic by symbol name.
struct ShortLex {
    bool operator()(const Word& a, const Word& b) const noexcept {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

using WordSet = std::set<Word, ShortLex>;

/// Splits whitespace-separated tokens into a word. The single token `eps`
/// (or an all-blank string) denotes the empty word.
Word parse_word(std::string_view text);

/// Space-separated tokens; `eps` for the empty word.
std::string format_word(const Word& w);

/// Space-separated tokens; the empty string for the empty word.
std::string join_tokens(const Word& w);

Word concat(const Word& a, const Word& b);

bool contains(const SymbolSet& set, const Word& w);

}  // namespace insdel

template <>
struct std::hash<insdel::Symbol> {
    std::size_t operator()(insdel::Symbol s) const noexcept { return s.hash(); }
};

#endif  // INSDEL_SYMBOL_HPP
