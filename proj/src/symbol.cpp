#include "insdel/symbol.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace insdel {

namespace {

// Process-wide intern table. Entries are never removed, so the string
// addresses handed out stay valid for the lifetime of the program.
class SymbolTable {
public:
    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    const std::string* empty() const noexcept { return &names_.front(); }

    const std::string* intern(std::string_view name) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = index_.find(name); it != index_.end()) return it->second;
        }
        std::unique_lock lock(mutex_);
        if (auto it = index_.find(name); it != index_.end()) return it->second;
        const std::string* stored = &names_.emplace_back(name);
        index_.emplace(std::string_view(*stored), stored);
        return stored;
    }

private:
    SymbolTable() { names_.emplace_back(); }

    std::shared_mutex mutex_;
    std::deque<std::string> names_;
    std::unordered_map<std::string_view, const std::string*> index_;
};

bool is_blank(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

Symbol::Symbol() noexcept : name_(SymbolTable::instance().empty()) {}

Symbol::Symbol(std::string_view name) {
    if (!is_valid_symbol_name(name))
        throw std::invalid_argument("invalid symbol name '" + std::string(name) + "'");
    name_ = SymbolTable::instance().intern(name);
}

bool is_valid_symbol_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    for (char c : name) {
        if (is_blank(c) || c == ';' || c == ':' || c == '#') return false;
    }
    return name.find("->") == std::string_view::npos;
}

Word parse_word(std::string_view text) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_blank(text[i])) ++i;
        std::size_t j = i;
        while (j < text.size() && !is_blank(text[j])) ++j;
        if (j > i) out.emplace_back(text.substr(i, j - i));
        i = j;
    }
    if (out.size() == 1 && out.front().name() == "eps") out.clear();
    return out;
}

std::string join_tokens(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += w[i].name();
    }
    return out;
}

std::string format_word(const Word& w) { return w.empty() ? std::string("eps") : join_tokens(w); }

Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

bool contains(const SymbolSet& set, const Word& w) {
    for (Symbol s : w)
        if (!set.contains(s)) return false;
    return true;
}

}  // namespace insdel
