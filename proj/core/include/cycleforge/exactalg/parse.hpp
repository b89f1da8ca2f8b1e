#pragma once

#include "cycleforge/exactalg/poly.hpp"

#include <stdexcept>
#include <string>
#include <string_view>

namespace cycleforge {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
          line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

// Grammar: sums/differences of products of numbers, identifiers, sqrt(n) (Q(sqrt d) only),
// parenthesized expressions and non-negative integer powers (^ or **). Division only by constants.
// Variables in `vars` keep their order; new identifiers are appended in order of appearance.
QPoly parse_qpoly(std::string_view text, VarList vars = nullptr);
QEPoly parse_qepoly(std::string_view text, VarList vars = nullptr);

template <class K>
Poly<K> parse_poly(std::string_view text, VarList vars = nullptr);

template <>
inline QPoly parse_poly<Rational>(std::string_view text, VarList vars) {
    return parse_qpoly(text, std::move(vars));
}
template <>
inline QEPoly parse_poly<QuadExt>(std::string_view text, VarList vars) {
    return parse_qepoly(text, std::move(vars));
}

// Exact scalar literal: "n", "n/m", "a+b*sqrt(d)" and friends.
Rational parse_rational_expr(std::string_view text);
QuadExt parse_quadext(std::string_view text);

} // namespace cycleforge
