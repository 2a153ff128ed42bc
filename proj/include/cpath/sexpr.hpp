#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cpath::sexpr {

/// Generic s-expression: an atom, a parenthesised list, or a bracketed
/// list. Every node remembers where it started in the source text.
struct Node {
    enum class Kind { Atom, List, Bracket };

    Kind kind = Kind::Atom;
    std::string atom;
    std::vector<Node> items;
    std::size_t line = 1;
    std::size_t column = 1;

    bool isAtom() const { return kind == Kind::Atom; }
    bool isAtom(std::string_view text) const { return isAtom() && atom == text; }
    bool isList() const { return kind == Kind::List; }
    /// Head symbol of a list, or empty.
    std::string_view head() const;
};

/// Reads exactly one expression; trailing text other than whitespace or
/// `;` comments is an error. Throws ParseError.
Node read(std::string_view text);

/// Reads all top-level expressions.
std::vector<Node> readAll(std::string_view text);

}  // namespace cpath::sexpr
