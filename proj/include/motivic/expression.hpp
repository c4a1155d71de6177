#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "motivic/polynomial.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Syntax tree of a polynomial expression: integers, symbols, + - * and ^
/// with an integer exponent, and parentheses.
struct Expression {
    enum class Kind { integer, symbol, negate, add, subtract, multiply, power };

    Kind kind = Kind::integer;
    Integer value;                    // integer literal
    std::string name;                 // symbol
    long exponent = 0;                // power
    std::vector<Expression> operands; // negate: 1, binary/power: 2 (power keeps its base only)
    std::size_t line = 1;
    std::size_t column = 1;
};

/// Parses the grammar
///   expr  := term (('+' | '-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | power
///   power := atom ('^' '-'? digits)?
///   atom  := digits | identifier | '(' expr ')'
/// Throws ParseError carrying line and column.
Expression parse_ast(std::string_view source);

/// Fully parenthesis-minimal rendering of the tree with no whitespace.
std::string to_string(const Expression& expression);

/// Evaluates the tree in `ring`. Unknown symbols and negative exponents
/// outside a Laurent ring are errors; a negative exponent also needs a base
/// that is a monomial with coefficient +1 or -1.
Polynomial evaluate(const Expression& expression, const Ring& ring);

Polynomial parse_polynomial(std::string_view source, const Ring& ring);

/// Parses a series written as a polynomial in `ring` extended by the
/// series variable (default "t"), keeping terms up to t^order.
Series parse_series(std::string_view source, const Ring& ring, int order, std::string_view variable = "t");

} // namespace motivic
