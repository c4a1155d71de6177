#include "motivic/expression.hpp"

#include <cctype>
#include <limits>

#include "motivic/error.hpp"

namespace motivic {

namespace {

constexpr long kMaxExponent = 100000;

class Parser {
public:
    explicit Parser(std::string_view source) : src_(source) {}

    Expression parse() {
        skip_space();
        if (at_end()) {
            fail("empty expression");
        }
        Expression e = parse_expr();
        skip_space();
        if (!at_end()) {
            fail(std::string("unexpected '") + peek() + "'");
        }
        return e;
    }

private:
    bool at_end() const { return pos_ >= src_.size(); }
    char peek() const { return src_[pos_]; }

    void advance() {
        if (src_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) {
            advance();
        }
    }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line_, column_); }

    Expression node(Expression::Kind kind) const {
        Expression e;
        e.kind = kind;
        e.line = line_;
        e.column = column_;
        return e;
    }

    Expression binary(Expression::Kind kind, Expression lhs, Expression rhs) const {
        Expression e;
        e.kind = kind;
        e.line = lhs.line;
        e.column = lhs.column;
        e.operands.push_back(std::move(lhs));
        e.operands.push_back(std::move(rhs));
        return e;
    }

    Expression parse_expr() {
        Expression lhs = parse_term();
        for (;;) {
            skip_space();
            if (at_end() || (peek() != '+' && peek() != '-')) {
                return lhs;
            }
            const auto kind = peek() == '+' ? Expression::Kind::add : Expression::Kind::subtract;
            advance();
            lhs = binary(kind, std::move(lhs), parse_term());
        }
    }

    Expression parse_term() {
        Expression lhs = parse_unary();
        for (;;) {
            skip_space();
            if (at_end() || peek() != '*') {
                return lhs;
            }
            advance();
            lhs = binary(Expression::Kind::multiply, std::move(lhs), parse_unary());
        }
    }

    Expression parse_unary() {
        skip_space();
        if (!at_end() && peek() == '-') {
            Expression e = node(Expression::Kind::negate);
            advance();
            e.operands.push_back(parse_unary());
            return e;
        }
        return parse_power();
    }

    Expression parse_power() {
        Expression base = parse_atom();
        skip_space();
        if (at_end() || peek() != '^') {
            return base;
        }
        Expression e = node(Expression::Kind::power);
        advance();
        skip_space();
        bool negative = false;
        if (!at_end() && peek() == '-') {
            negative = true;
            advance();
            skip_space();
        }
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
            fail("expected an integer exponent after '^'");
        }
        long value = 0;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + (peek() - '0');
            if (value > kMaxExponent) {
                fail("exponent exceeds " + std::to_string(kMaxExponent));
            }
            advance();
        }
        e.exponent = negative ? -value : value;
        e.line = base.line;
        e.column = base.column;
        e.operands.push_back(std::move(base));
        return e;
    }

    Expression parse_atom() {
        skip_space();
        if (at_end()) {
            fail("unexpected end of input");
        }
        const char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Expression e = node(Expression::Kind::integer);
            std::string digits;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
                digits += peek();
                advance();
            }
            e.value = Integer(digits, 10);
            return e;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            Expression e = node(Expression::Kind::symbol);
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
                e.name += peek();
                advance();
            }
            return e;
        }
        if (c == '(') {
            advance();
            Expression inner = parse_expr();
            skip_space();
            if (at_end() || peek() != ')') {
                fail("expected ')'");
            }
            advance();
            return inner;
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view src_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

int precedence(const Expression& e) {
    switch (e.kind) {
    case Expression::Kind::add:
    case Expression::Kind::subtract:
        return 1;
    case Expression::Kind::multiply:
        return 2;
    case Expression::Kind::negate:
        return 3;
    case Expression::Kind::power:
        return 4;
    default:
        return 5;
    }
}

std::string wrap(const Expression& e, int min_precedence) {
    std::string s = to_string(e);
    return precedence(e) < min_precedence ? "(" + s + ")" : s;
}

[[noreturn]] void evaluation_error(const Expression& e, const std::string& what) {
    throw ParseError(what, e.line, e.column);
}

} // namespace

Expression parse_ast(std::string_view source) {
    return Parser(source).parse();
}

std::string to_string(const Expression& e) {
    switch (e.kind) {
    case Expression::Kind::integer:
        return e.value.get_str();
    case Expression::Kind::symbol:
        return e.name;
    case Expression::Kind::negate:
        return "-" + wrap(e.operands[0], 3);
    case Expression::Kind::add:
        return wrap(e.operands[0], 1) + "+" + wrap(e.operands[1], 2);
    case Expression::Kind::subtract:
        return wrap(e.operands[0], 1) + "-" + wrap(e.operands[1], 2);
    case Expression::Kind::multiply:
        return wrap(e.operands[0], 2) + "*" + wrap(e.operands[1], 3);
    case Expression::Kind::power:
        return wrap(e.operands[0], 5) + "^" + std::to_string(e.exponent);
    }
    return {};
}

Polynomial evaluate(const Expression& e, const Ring& ring) {
    switch (e.kind) {
    case Expression::Kind::integer:
        return Polynomial(ring, e.value);
    case Expression::Kind::symbol:
        if (!ring.index_of(e.name)) {
            evaluation_error(e, "unknown variable " + e.name);
        }
        return Polynomial::variable(ring, e.name);
    case Expression::Kind::negate:
        return -evaluate(e.operands[0], ring);
    case Expression::Kind::add:
        return evaluate(e.operands[0], ring) + evaluate(e.operands[1], ring);
    case Expression::Kind::subtract:
        return evaluate(e.operands[0], ring) - evaluate(e.operands[1], ring);
    case Expression::Kind::multiply:
        return evaluate(e.operands[0], ring) * evaluate(e.operands[1], ring);
    case Expression::Kind::power: {
        Polynomial base = evaluate(e.operands[0], ring);
        if (e.exponent >= 0) {
            return base.pow(static_cast<unsigned>(e.exponent));
        }
        if (!ring.laurent()) {
            evaluation_error(e, "negative exponent in non-Laurent ring " + ring.to_string());
        }
        if (base.term_count() != 1 || abs(base.terms().begin()->second) != 1) {
            evaluation_error(e, "negative exponent needs a monomial base with coefficient 1 or -1, got " +
                                    base.to_string());
        }
        const auto& [exponent, coefficient] = *base.terms().begin();
        Exponent inverted(exponent.size());
        for (std::size_t i = 0; i < exponent.size(); ++i) {
            inverted[i] = -exponent[i];
        }
        return Polynomial::monomial(ring, std::move(inverted), coefficient).pow(static_cast<unsigned>(-e.exponent));
    }
    }
    throw Error("unreachable expression kind");
}

Polynomial parse_polynomial(std::string_view source, const Ring& ring) {
    return evaluate(parse_ast(source), ring);
}

Series parse_series(std::string_view source, const Ring& ring, int order, std::string_view variable) {
    if (ring.index_of(variable)) {
        throw Error("series variable '" + std::string(variable) + "' clashes with a ring variable");
    }
    std::vector<std::string> names = ring.variables();
    names.emplace_back(variable);
    const Ring extended(names, ring.laurent());
    const Polynomial flat = parse_polynomial(source, extended);

    std::vector<Polynomial> coefficients(static_cast<std::size_t>(order) + 1, Polynomial(ring));
    for (const auto& [exponent, coefficient] : flat.terms()) {
        const int power = exponent.back();
        if (power < 0) {
            throw Error("negative power of the series variable " + std::string(variable));
        }
        if (power > order) {
            continue;
        }
        Exponent inner(exponent.begin(), exponent.end() - 1);
        coefficients[static_cast<std::size_t>(power)].add_term_unchecked(inner, coefficient);
    }
    return Series(ring, std::move(coefficients));
}

} // namespace motivic
