#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cuboid/polynomial.hpp"

namespace cuboid {

/// Parse failure with 1-based source position and the offending token.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, int line, int column, std::string token);

    int line() const { return line_; }
    int column() const { return column_; }
    const std::string& token() const { return token_; }

private:
    int line_;
    int column_;
    std::string token_;
};

/// Ordered collection of named polynomial definitions from one source text.
struct DefinitionSet {
    std::vector<std::pair<std::string, Polynomial>> entries;
    std::string source;  // provenance note

    const Polynomial* find(std::string_view name) const;
};

/// Grammar (.poly format):
///   defs   := def*
///   def    := IDENT ":=" expr ";"
///   expr   := term (("+"|"-") term)*
///   term   := ("-")? factor ("*" factor)*
///   factor := IDENT ("^" UINT)? | UINT ("/" UINT)? | "(" expr ")"
///   IDENT  := [~A-Za-z][A-Za-z0-9]*
/// Whitespace and line breaks between tokens are ignored; "#" starts a
/// comment running to end of line. Implicit multiplication is rejected.
DefinitionSet parse_definitions(std::string_view text, const RingPtr& ring,
                                std::string source_note = {});

/// Parses a single expression in the grammar above to a fully expanded
/// canonical polynomial.
Polynomial parse_expression(std::string_view text, const RingPtr& ring);

/// Canonical rendering: terms in descending grevlex order, "num/den"
/// coefficients, "*" between factors, "^" only for exponents > 1.
/// parse_expression(render(p)) == p for every p.
std::string render(const Polynomial& p);

}  // namespace cuboid
