#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "motivic/polynomial.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Exponents b_1..b_N of the factored form prod_{i=1..N} (1 - t^i)^{-b_i}.
class EulerProduct {
public:
    EulerProduct(Ring ring, std::vector<Polynomial> exponents);

    const Ring& ring() const noexcept { return ring_; }
    int order() const noexcept { return static_cast<int>(exponents_.size()); }
    const std::vector<Polynomial>& exponents() const noexcept { return exponents_; }
    /// b_i, 1-based.
    const Polynomial& exponent(int i) const { return exponents_.at(static_cast<std::size_t>(i - 1)); }

    friend bool operator==(const EulerProduct& a, const EulerProduct& b) = default;

private:
    Ring ring_;
    std::vector<Polynomial> exponents_;
};

/// (1 - t)^{-a} truncated at t^order under the monomial rule: every term
/// p*x of `a` contributes (1 - x*t)^{-p}, an ordinary binomial series when
/// p > 0 and a finite polynomial power when p < 0. Over Z this is the
/// binomial series of (1 - t)^{-a}.
Series base_series(const Polynomial& a, int order);

/// The rule a -> (1 - t)^{-a} that determines a power structure.
///
/// Custom rules are accepted only if they pass the additivity, unit and
/// first-order checks on the supplied samples; factoring relies on all three.
class Kernel {
public:
    using Rule = std::function<Series(const Polynomial& a, int order)>;

    /// The built-in rule, `base_series`.
    static const Kernel& monomial();

    /// Throws Error describing the first failed check.
    static Kernel custom(std::string name, Rule rule, std::span<const Polynomial> samples, int check_order);

    const std::string& name() const noexcept { return name_; }
    Series operator()(const Polynomial& a, int order) const { return rule_(a, order); }

private:
    Kernel(std::string name, Rule rule) : name_(std::move(name)), rule_(std::move(rule)) {}

    std::string name_;
    Rule rule_;
};

/// Checks kernel(0) = 1, kernel(1) = 1 + t + t^2 + ..., kernel(a) = 1 + a*t + O(t^2)
/// and kernel(a + b) = kernel(a) * kernel(b) over all sample pairs. Returns a
/// description of the first failure, or nullopt.
std::optional<std::string> find_kernel_violation(const Kernel::Rule& rule, std::span<const Polynomial> samples,
                                                 int order);

/// Writes a unital series as an Euler product by peeling t^1, t^2, ... in turn.
EulerProduct factor(const Series& a, const Kernel& kernel = Kernel::monomial());

/// prod_i kernel(b_i)(t^i), truncated at the product's order.
Series assemble(const EulerProduct& e, const Kernel& kernel = Kernel::monomial());

/// A(t)^m: factor A, scale every exponent by m, assemble.
Series pow(const Series& a, const Polynomial& m, const Kernel& kernel = Kernel::monomial());

/// Exp(P_1 t + ... + P_N t^N) = prod_k (1 - t^k)^{-P_k}; the order is terms.size().
Series exp_map(const Ring& ring, std::span<const Polynomial> terms, const Kernel& kernel = Kernel::monomial());

/// Inverse of exp_map: the exponents P_1..P_N of factor(a).
std::vector<Polynomial> log_map(const Series& a, const Kernel& kernel = Kernel::monomial());

/// A ring map that commutes with the monomial power structure.
///
/// Only three shapes are representable: the identity, substitutions sending
/// each variable to a unit monomial, and evaluation of every variable at 1.
/// Anything else (u -> 2, u -> 1 + v) breaks (1-t)^{-phi(a)} = phi((1-t)^{-a})
/// and is rejected at construction.
class Substitution {
public:
    enum class Kind { identity, monomial, evaluate_at_ones };

    static Substitution identity(const Ring& ring);
    static Substitution monomial(const Ring& source, const Ring& target, std::vector<Polynomial> images);
    static Substitution evaluate_at_ones(const Ring& source);
    /// General point evaluation; only the all-ones point is accepted.
    static Substitution evaluate(const Ring& source, std::span<const Integer> point);

    Kind kind() const noexcept { return kind_; }
    const Ring& source() const noexcept { return source_; }
    const Ring& target() const noexcept { return target_; }

    Polynomial operator()(const Polynomial& p) const;
    Series operator()(const Series& s) const;

private:
    Substitution(Kind kind, Ring source, Ring target, std::vector<Polynomial> images)
        : kind_(kind), source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {}

    Kind kind_;
    Ring source_;
    Ring target_;
    std::vector<Polynomial> images_;
};

/// Whether phi(A^m) = phi(A)^{phi(m)} holds exactly.
bool transport_check(const Substitution& phi, const Series& a, const Polynomial& m);

} // namespace motivic
