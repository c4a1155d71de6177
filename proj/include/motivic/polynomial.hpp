#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/container/small_vector.hpp>
#include <gmpxx.h>

#include "motivic/ring.hpp"

namespace motivic {

using Integer = mpz_class;
/// Exponent vector; short ones (rank <= 4) live inline.
using Exponent = boost::container::small_vector<int, 4>;

/// Graded-lexicographic order: lower total degree first; within one degree,
/// lexicographically larger exponent vectors first (u^2, u*v, v^2).
struct GradedLexLess {
    bool operator()(const Exponent& a, const Exponent& b) const noexcept;
};

/// Sparse Laurent polynomial with arbitrary-precision integer coefficients.
///
/// Invariants: no stored coefficient is zero, every exponent vector has
/// length `ring().rank()`, and exponents are nonnegative unless the ring is
/// Laurent. Values are immutable through the public interface apart from
/// the compound-assignment operators.
class Polynomial {
public:
    using Term = std::pair<Exponent, Integer>;
    /// Sorted by GradedLexLess, exponents unique, coefficients nonzero.
    using TermList = std::vector<Term>;

    /// The zero polynomial of the integers.
    Polynomial();
    /// The zero polynomial of `ring`.
    explicit Polynomial(Ring ring);
    /// A constant.
    Polynomial(Ring ring, const Integer& constant);
    Polynomial(Ring ring, long constant) : Polynomial(std::move(ring), Integer(constant)) {}

    static Polynomial monomial(Ring ring, Exponent exponent, const Integer& coefficient = 1);
    static Polynomial variable(const Ring& ring, std::string_view name);
    /// Builds from (exponent, coefficient) pairs; repeated exponents are summed.
    static Polynomial from_terms(Ring ring, std::span<const std::pair<Exponent, Integer>> terms);

    const Ring& ring() const noexcept { return ring_; }
    const TermList& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// A single term with coefficient +1.
    bool is_unit_monomial() const;
    /// Every coefficient is a nonnegative integer.
    bool is_effective() const;

    Integer coefficient(const Exponent& exponent) const;
    Integer constant_term() const;

    /// Value with every variable set to 1 (sum of coefficients).
    Integer eval_at_ones() const;

    /// Substitutes variable i by the unit monomial `images[i]` of `target`.
    /// Throws IncompatibleSubstitution if an image is not a unit monomial.
    Polynomial substitute_monomials(const Ring& target, std::span<const Polynomial> images) const;

    /// Reinterprets the same terms over a ring with identical variables.
    Polynomial with_ring(const Ring& ring) const;

    Polynomial pow(unsigned exponent) const;

    /// Divides every coefficient by `divisor`; throws Error unless all divide exactly.
    Polynomial divide_exact(const Integer& divisor) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    Polynomial& operator*=(const Integer& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
    friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }

    friend bool operator==(const Polynomial& a, const Polynomial& b);

    /// Canonical text form, e.g. "1+2*L+L^2", "u^-1*v^-1", "u^2-u".
    std::string to_string() const;

    /// sum_i lhs[i] * rhs[i], all in `ring`. Accumulates every product into one
    /// buffer, so it is much cheaper than summing separate products.
    static Polynomial sum_of_products(const Ring& ring, std::span<const Polynomial* const> lhs,
                                      std::span<const Polynomial* const> rhs);

    /// Adds `coefficient * x^exponent` in place (no validation of the exponent).
    void add_term_unchecked(const Exponent& exponent, const Integer& coefficient);

private:
    void validate_exponent(const Exponent& exponent) const;
    /// Sorts, merges repeated exponents and drops zeros.
    void normalize();

    Ring ring_;
    TermList terms_;
};

} // namespace motivic
