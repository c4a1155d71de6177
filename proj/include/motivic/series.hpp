#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "motivic/polynomial.hpp"

namespace motivic {

/// Power series in t truncated at t^order, with Polynomial coefficients.
///
/// Always holds exactly order+1 coefficients, all in `ring()`.
class Series {
public:
    /// The zero series.
    Series(Ring ring, int order);
    /// Takes ownership of c_0..c_N; N = coefficients.size() - 1.
    Series(Ring ring, std::vector<Polynomial> coefficients);

    static Series one(const Ring& ring, int order);
    /// 1 + t + t^2 + ... + t^order.
    static Series geometric(const Ring& ring, int order);

    const Ring& ring() const noexcept { return ring_; }
    int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const std::vector<Polynomial>& coefficients() const noexcept { return coefficients_; }
    const Polynomial& operator[](int k) const { return coefficients_.at(static_cast<std::size_t>(k)); }

    bool is_unital() const { return coefficients_.front().is_one(); }
    /// Every coefficient is effective.
    bool is_effective() const;

    Series map_coefficients(const Ring& target, const std::function<Polynomial(const Polynomial&)>& f) const;

    Series operator-() const;
    friend Series operator+(const Series& a, const Series& b);
    friend Series operator-(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Series& b);
    friend Series operator*(const Series& a, const Polynomial& scalar);

    friend bool operator==(const Series& a, const Series& b);

    /// "1 + t + (1+L)*t^2" style text; zero coefficients omitted.
    std::string to_string() const;

private:
    Ring ring_;
    std::vector<Polynomial> coefficients_;
};

/// Multiplicative inverse of a unital series up to its order.
Series inverse(const Series& a);

/// Substitutes t -> t^k, keeping the order of `a`.
Series rescale_variable(const Series& a, int k);

/// Substitutes t -> t^k and re-truncates at `order` (which may exceed a.order()
/// as long as order / k <= a.order()).
Series spread(const Series& a, int k, int order);

/// Drops every coefficient past t^order. Throws OrderMismatch if order > a.order().
Series truncate(const Series& a, int order);

/// Throws NotUnital unless the constant term is 1.
void require_unital(const Series& a, const char* context);

} // namespace motivic
