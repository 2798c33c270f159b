#ifndef INSDEL_TEXT_FORMAT_HPP
#define INSDEL_TEXT_FORMAT_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "insdel/gcid.hpp"
#include "insdel/grammar.hpp"

namespace insdel {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Grammar files:
//
//   grammar special-gnf            (or: grammar geffert)
//   nonterminals: S Z S'
//   terminals: a b
//   special: A B C D
//   start: S
//   rule p1: S -> a Z
//   rule e: S' -> eps
//
// `#` starts a comment. Printing emits exactly this layout, so printing a
// parsed canonical file reproduces it byte for byte.
Grammar parse_grammar(std::string_view text);
std::string format_grammar(const Grammar& g);

// Component-form systems:
//
//   gcid components=4 init=1 final=1
//   alphabet: ...
//   terminals: ...
//   axiom: S                       (repeatable; `eps` for the empty word)
//   rule p1.1.1: 1 ins(S; p1; ) -> 2
//   rule k.s: 1 del(; S'; ) -> 1
//
// Symbol sets and rules are printed sorted.
ComponentSystem parse_component_system(std::string_view text);
std::string format_component_system(const ComponentSystem& sys);

// Label-form systems:
//
//   gcid-labels
//   alphabet: ...
//   terminals: ...
//   axiom: S
//   initial: a b
//   final: a
//   rule a: ins(; K; ) -> {b c}
LabelSystem parse_label_system(std::string_view text);
std::string format_label_system(const LabelSystem& sys);

enum class FileKind { grammar, component_system, label_system, unknown };

/// Looks at the first non-comment line.
FileKind detect_kind(std::string_view text);

}  // namespace insdel

#endif  // INSDEL_TEXT_FORMAT_HPP
