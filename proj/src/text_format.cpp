#include "insdel/text_format.hpp"

#include <charconv>
#include <sstream>
#include <vector>

namespace insdel {

namespace {

std::string_view trim(std::string_view s) {
    const char* ws = " \t\r\n\f\v";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

struct Line {
    std::size_t number;
    std::string_view text;
};

// Non-blank lines with comments removed.
std::vector<Line> significant_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        ++number;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (!line.empty()) out.push_back({number, line});
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

bool starts_with(std::string_view s, std::string_view prefix) { return s.substr(0, prefix.size()) == prefix; }

Word tokens(const Line& line, std::string_view text, bool allow_eps) {
    try {
        Word w = parse_word(text);
        if (!allow_eps && trim(text) == "eps") throw ParseError(line.number, "'eps' is not a symbol name");
        return w;
    } catch (const std::invalid_argument& e) {
        throw ParseError(line.number, e.what());
    }
}

std::vector<Symbol> symbol_list(const Line& line, std::string_view text) {
    Word w = tokens(line, text, false);
    for (Symbol s : w)
        if (s.name() == "eps") throw ParseError(line.number, "'eps' is not a symbol name");
    return w;
}

int parse_int(const Line& line, std::string_view text) {
    text = trim(text);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw ParseError(line.number, "expected an integer, got '" + std::string(text) + "'");
    return value;
}

// "key: rest" -> (key, rest); key may be empty when there is no colon.
std::pair<std::string_view, std::string_view> split_key(std::string_view line) {
    auto colon = line.find(':');
    if (colon == std::string_view::npos) return {{}, line};
    return {trim(line.substr(0, colon)), trim(line.substr(colon + 1))};
}

// "rule <label>: rest" -> (label, rest)
std::pair<std::string, std::string_view> split_rule(const Line& line) {
    std::string_view rest = trim(line.text.substr(4));
    auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError(line.number, "rule without ':'");
    std::string label(trim(rest.substr(0, colon)));
    if (!is_valid_symbol_name(label)) throw ParseError(line.number, "invalid rule label '" + label + "'");
    return {label, trim(rest.substr(colon + 1))};
}

// "ins(u; a; v)" / "del(u; a; v)"
Rule parse_triple(const Line& line, std::string_view text) {
    text = trim(text);
    Mode mode;
    if (starts_with(text, "ins(")) mode = Mode::insertion;
    else if (starts_with(text, "del(")) mode = Mode::deletion;
    else throw ParseError(line.number, "expected ins(...) or del(...)");
    if (text.back() != ')') throw ParseError(line.number, "missing ')'");
    std::string_view inner = text.substr(4, text.size() - 5);
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
        auto semi = inner.find(';', pos);
        fields.push_back(inner.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos));
        if (semi == std::string_view::npos) break;
        pos = semi + 1;
    }
    if (fields.size() != 3) throw ParseError(line.number, "a rule needs exactly three ';'-separated fields");
    Rule r{mode, tokens(line, fields[0], true), tokens(line, fields[1], true), tokens(line, fields[2], true)};
    if (r.body.empty()) throw ParseError(line.number, "empty rule body");
    return r;
}

std::string triple(const Rule& r) {
    return std::string(r.mode == Mode::insertion ? "ins(" : "del(") + join_tokens(r.left) + "; " +
           join_tokens(r.body) + "; " + join_tokens(r.right) + ")";
}

template <class Range>
std::string listing(std::string_view key, const Range& symbols) {
    std::string out(key);
    out += ':';
    for (const auto& s : symbols) {
        out += ' ';
        if constexpr (std::is_same_v<std::decay_t<decltype(s)>, Symbol>) out += s.name();
        else out += s;
    }
    out += '\n';
    return out;
}

void read_common(const Line& line, std::string_view key, std::string_view rest, SymbolSet& alphabet,
                 SymbolSet& terminals, WordSet& axioms) {
    if (key == "alphabet") {
        auto list = symbol_list(line, rest);
        alphabet.insert(list.begin(), list.end());
    } else if (key == "terminals") {
        auto list = symbol_list(line, rest);
        terminals.insert(list.begin(), list.end());
    } else if (key == "axiom") {
        axioms.insert(tokens(line, rest, true));
    } else {
        throw ParseError(line.number, "unknown directive '" + std::string(line.text) + "'");
    }
}

void write_common(std::ostringstream& os, const SymbolSet& alphabet, const SymbolSet& terminals,
                  const WordSet& axioms) {
    os << listing("alphabet", alphabet) << listing("terminals", terminals);
    for (const auto& a : axioms) os << "axiom: " << format_word(a) << '\n';
}

}  // namespace

Grammar parse_grammar(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, "empty grammar file");
    Grammar g;
    {
        const Line& h = lines.front();
        if (h.text == "grammar special-gnf") g.kind = GrammarKind::special_gnf;
        else if (h.text == "grammar geffert") g.kind = GrammarKind::geffert;
        else throw ParseError(h.number, "expected 'grammar special-gnf' or 'grammar geffert'");
    }
    bool have_start = false;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (starts_with(line.text, "rule ")) {
            auto [label, rest] = split_rule(line);
            auto arrow = rest.find("->");
            if (arrow == std::string_view::npos) throw ParseError(line.number, "production without '->'");
            Production p{label, tokens(line, rest.substr(0, arrow), false), tokens(line, rest.substr(arrow + 2), true)};
            if (p.lhs.empty()) throw ParseError(line.number, "empty left-hand side");
            g.productions.push_back(std::move(p));
            continue;
        }
        auto [key, rest] = split_key(line.text);
        if (key == "nonterminals") g.nonterminals = symbol_list(line, rest);
        else if (key == "terminals") g.terminals = symbol_list(line, rest);
        else if (key == "special") g.special = symbol_list(line, rest);
        else if (key == "start") {
            auto list = symbol_list(line, rest);
            if (list.size() != 1) throw ParseError(line.number, "start needs exactly one symbol");
            g.start = list.front();
            have_start = true;
        } else {
            throw ParseError(line.number, "unknown directive '" + std::string(line.text) + "'");
        }
    }
    if (!have_start) throw ParseError(lines.back().number, "missing 'start:'");
    return g;
}

std::string format_grammar(const Grammar& g) {
    std::ostringstream os;
    os << "grammar " << (g.kind == GrammarKind::geffert ? "geffert" : "special-gnf") << '\n';
    os << listing("nonterminals", g.nonterminals) << listing("terminals", g.terminals)
       << listing("special", g.special);
    os << "start: " << g.start.name() << '\n';
    for (const auto& p : g.productions)
        os << "rule " << p.label << ": " << join_tokens(p.lhs) << " -> " << format_word(p.rhs) << '\n';
    return os.str();
}

ComponentSystem parse_component_system(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, "empty system file");
    ComponentSystem sys;
    {
        const Line& h = lines.front();
        std::istringstream is{std::string(h.text)};
        std::string word;
        is >> word;
        if (word != "gcid") throw ParseError(h.number, "expected 'gcid components=K init=I final=F'");
        bool k = false, i0 = false, f = false;
        while (is >> word) {
            auto eq = word.find('=');
            if (eq == std::string::npos) throw ParseError(h.number, "expected key=value, got '" + word + "'");
            const std::string key = word.substr(0, eq);
            const int value = parse_int(h, std::string_view(word).substr(eq + 1));
            if (key == "components") sys.components = value, k = true;
            else if (key == "init") sys.initial = value, i0 = true;
            else if (key == "final") sys.final_component = value, f = true;
            else throw ParseError(h.number, "unknown header key '" + key + "'");
        }
        if (!k || !i0 || !f) throw ParseError(h.number, "header needs components=, init= and final=");
    }
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (starts_with(line.text, "rule ")) {
            auto [label, rest] = split_rule(line);
            auto arrow = rest.rfind("->");
            if (arrow == std::string_view::npos) throw ParseError(line.number, "rule without '-> target'");
            const int target = parse_int(line, rest.substr(arrow + 2));
            std::string_view body = trim(rest.substr(0, arrow));
            auto space = body.find_first_of(" \t");
            if (space == std::string_view::npos) throw ParseError(line.number, "rule needs a source component");
            const int source = parse_int(line, body.substr(0, space));
            sys.rules.push_back({label, source, parse_triple(line, body.substr(space + 1)), target});
            continue;
        }
        auto [key, rest] = split_key(line.text);
        read_common(line, key, rest, sys.alphabet, sys.terminals, sys.axioms);
    }
    sys.sort_rules();
    return sys;
}

std::string format_component_system(const ComponentSystem& sys) {
    std::ostringstream os;
    os << "gcid components=" << sys.components << " init=" << sys.initial << " final=" << sys.final_component << '\n';
    write_common(os, sys.alphabet, sys.terminals, sys.axioms);
    ComponentSystem sorted = sys;
    sorted.sort_rules();
    for (const auto& r : sorted.rules)
        os << "rule " << r.label << ": " << r.source << ' ' << triple(r.rule) << " -> " << r.target << '\n';
    return os.str();
}

LabelSystem parse_label_system(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) throw ParseError(1, "empty system file");
    if (lines.front().text != "gcid-labels") throw ParseError(lines.front().number, "expected 'gcid-labels'");
    LabelSystem sys;
    auto label_list = [](const Line& line, std::string_view text) {
        std::set<std::string> out;
        for (Symbol s : tokens(line, text, false)) out.insert(s.name());
        return out;
    };
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        if (starts_with(line.text, "rule ")) {
            auto [label, rest] = split_rule(line);
            auto arrow = rest.rfind("->");
            if (arrow == std::string_view::npos) throw ParseError(line.number, "rule without '-> {successors}'");
            std::string_view succ = trim(rest.substr(arrow + 2));
            if (succ.size() < 2 || succ.front() != '{' || succ.back() != '}')
                throw ParseError(line.number, "successors must be written as {l1 l2 ...}");
            sys.rules.push_back({label, parse_triple(line, rest.substr(0, arrow)),
                                 label_list(line, succ.substr(1, succ.size() - 2))});
            continue;
        }
        auto [key, rest] = split_key(line.text);
        if (key == "initial") sys.initial_labels = label_list(line, rest);
        else if (key == "final") sys.final_labels = label_list(line, rest);
        else read_common(line, key, rest, sys.alphabet, sys.terminals, sys.axioms);
    }
    sys.sort_rules();
    return sys;
}

std::string format_label_system(const LabelSystem& sys) {
    std::ostringstream os;
    os << "gcid-labels\n";
    write_common(os, sys.alphabet, sys.terminals, sys.axioms);
    os << listing("initial", sys.initial_labels) << listing("final", sys.final_labels);
    LabelSystem sorted = sys;
    sorted.sort_rules();
    for (const auto& r : sorted.rules) {
        os << "rule " << r.label << ": " << triple(r.rule) << " -> {";
        bool first = true;
        for (const auto& s : r.successors) {
            if (!first) os << ' ';
            os << s;
            first = false;
        }
        os << "}\n";
    }
    return os.str();
}

FileKind detect_kind(std::string_view text) {
    auto lines = significant_lines(text);
    if (lines.empty()) return FileKind::unknown;
    std::string_view first = lines.front().text;
    if (first == "gcid-labels") return FileKind::label_system;
    if (starts_with(first, "gcid ") || first == "gcid") return FileKind::component_system;
    if (starts_with(first, "grammar")) return FileKind::grammar;
    return FileKind::unknown;
}

}  // namespace insdel
