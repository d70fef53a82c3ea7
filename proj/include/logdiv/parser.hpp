#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "logdiv/series.hpp"

namespace logdiv {

// Raised on malformed expression text; offset is the byte position of the
// offending token in the input.
class parse_error : public std::runtime_error {
public:
    parse_error(std::string message, size_t offset)
        : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
          offset_(offset) {}
    size_t offset() const { return offset_; }

private:
    size_t offset_;
};

// Expression grammar (version 1, normative):
//
//   expr    := term (('+' | '-') term)*
//   term    := factor ('*' factor)*
//   factor  := ('+' | '-')* base ('^' uint)?
//   base    := uint ('/' uint)? | identifier | '(' expr ')'
//
// Integers are unsigned decimal literals (signs come from the unary
// operators); 'p/q' forms a rational literal; '^' takes a non-negative
// integer exponent; implicit multiplication is not accepted.
Series parse_series(const std::string &text, const std::vector<std::string> &vars);

// Canonical printer: terms in graded-lexicographic order with explicit
// '*' and '^'. parse_series(print_series(s)) == s for polynomials.
std::string print_series(const Series &s, const std::vector<std::string> &vars);

std::string print_monomial(const Monomial &m, const std::vector<std::string> &vars);

} // namespace logdiv
