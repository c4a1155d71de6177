#include "motivic/series.hpp"

#include "motivic/error.hpp"

namespace motivic {

namespace {

void require_compatible(const Series& a, const Series& b, const char* context) {
    require_same_ring(a.ring(), b.ring(), context);
    if (a.order() != b.order()) {
        throw OrderMismatch(std::string(context) + ": truncation orders differ (" + std::to_string(a.order()) +
                            " vs " + std::to_string(b.order()) + ")");
    }
}

} // namespace

Series::Series(Ring ring, int order) : ring_(std::move(ring)) {
    if (order < 0) {
        throw OrderMismatch("series order must be nonnegative, got " + std::to_string(order));
    }
    coefficients_.assign(static_cast<std::size_t>(order) + 1, Polynomial(ring_));
}

Series::Series(Ring ring, std::vector<Polynomial> coefficients)
    : ring_(std::move(ring)), coefficients_(std::move(coefficients)) {
    if (coefficients_.empty()) {
        throw OrderMismatch("a series needs at least the constant coefficient");
    }
    for (const auto& c : coefficients_) {
        require_same_ring(c.ring(), ring_, "series coefficient");
    }
}

Series Series::one(const Ring& ring, int order) {
    Series s(ring, order);
    s.coefficients_[0] = Polynomial(ring, 1);
    return s;
}

Series Series::geometric(const Ring& ring, int order) {
    Series s(ring, order);
    for (auto& c : s.coefficients_) {
        c = Polynomial(ring, 1);
    }
    return s;
}

bool Series::is_effective() const {
    for (const auto& c : coefficients_) {
        if (!c.is_effective()) {
            return false;
        }
    }
    return true;
}

Series Series::map_coefficients(const Ring& target,
                                const std::function<Polynomial(const Polynomial&)>& f) const {
    std::vector<Polynomial> mapped;
    mapped.reserve(coefficients_.size());
    for (const auto& c : coefficients_) {
        mapped.push_back(f(c));
    }
    return Series(target, std::move(mapped));
}

Series Series::operator-() const {
    Series out = *this;
    for (auto& c : out.coefficients_) {
        c = -c;
    }
    return out;
}

Series operator+(const Series& a, const Series& b) {
    require_compatible(a, b, "series addition");
    Series out = a;
    for (std::size_t k = 0; k < out.coefficients_.size(); ++k) {
        out.coefficients_[k] += b.coefficients_[k];
    }
    return out;
}

Series operator-(const Series& a, const Series& b) {
    return a + (-b);
}

Series operator*(const Series& a, const Series& b) {
    require_compatible(a, b, "series multiplication");
    const int n = a.order();
    std::vector<Polynomial> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    std::vector<const Polynomial*> lhs, rhs;
    for (int k = 0; k <= n; ++k) {
        lhs.clear();
        rhs.clear();
        for (int i = 0; i <= k; ++i) {
            const auto& ai = a[i];
            const auto& bj = b[k - i];
            if (!ai.is_zero() && !bj.is_zero()) {
                lhs.push_back(&ai);
                rhs.push_back(&bj);
            }
        }
        out.push_back(Polynomial::sum_of_products(a.ring(), lhs, rhs));
    }
    return Series(a.ring(), std::move(out));
}

Series operator*(const Series& a, const Polynomial& scalar) {
    require_same_ring(a.ring(), scalar.ring(), "series scaling");
    Series out = a;
    for (auto& c : out.coefficients_) {
        c *= scalar;
    }
    return out;
}

bool operator==(const Series& a, const Series& b) {
    return a.ring_ == b.ring_ && a.coefficients_ == b.coefficients_;
}

std::string Series::to_string() const {
    std::string out;
    for (int k = 0; k <= order(); ++k) {
        const auto& c = coefficients_[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        std::string term;
        const std::string power = k == 1 ? "t" : "t^" + std::to_string(k);
        if (k == 0) {
            term = c.to_string();
            if (c.term_count() > 1 && !out.empty()) {
                term = "(" + term + ")";
            }
        } else if (c.is_one()) {
            term = power;
        } else if (c.term_count() == 1) {
            term = c.is_constant() && c.constant_term() == -1 ? "-" + power : c.to_string() + "*" + power;
        } else {
            term = "(" + c.to_string() + ")*" + power;
        }
        if (out.empty()) {
            out = term;
        } else if (term.front() == '-') {
            out += " - " + term.substr(1);
        } else {
            out += " + " + term;
        }
    }
    return out.empty() ? "0" : out;
}

void require_unital(const Series& a, const char* context) {
    if (!a.is_unital()) {
        throw NotUnital(std::string(context) + ": series must have constant term 1, got " + a[0].to_string());
    }
}

Series inverse(const Series& a) {
    require_unital(a, "series inverse");
    const int n = a.order();
    std::vector<Polynomial> b(static_cast<std::size_t>(n) + 1, Polynomial(a.ring()));
    b[0] = Polynomial(a.ring(), 1);
    std::vector<const Polynomial*> lhs, rhs;
    for (int k = 1; k <= n; ++k) {
        lhs.clear();
        rhs.clear();
        for (int i = 1; i <= k; ++i) {
            const auto& ai = a[i];
            const auto& bk = b[static_cast<std::size_t>(k - i)];
            if (!ai.is_zero() && !bk.is_zero()) {
                lhs.push_back(&ai);
                rhs.push_back(&bk);
            }
        }
        b[static_cast<std::size_t>(k)] = -Polynomial::sum_of_products(a.ring(), lhs, rhs);
    }
    return Series(a.ring(), std::move(b));
}

Series spread(const Series& a, int k, int order) {
    if (k <= 0) {
        throw Error("t -> t^k needs a positive k, got " + std::to_string(k));
    }
    if (order / k > a.order()) {
        throw OrderMismatch("cannot spread a series of order " + std::to_string(a.order()) + " by t^" +
                            std::to_string(k) + " to order " + std::to_string(order));
    }
    std::vector<Polynomial> coefficients(static_cast<std::size_t>(order) + 1, Polynomial(a.ring()));
    for (int i = 0; i * k <= order; ++i) {
        coefficients[static_cast<std::size_t>(i * k)] = a[i];
    }
    return Series(a.ring(), std::move(coefficients));
}

Series rescale_variable(const Series& a, int k) {
    return spread(a, k, a.order());
}

Series truncate(const Series& a, int order) {
    if (order < 0 || order > a.order()) {
        throw OrderMismatch("cannot truncate a series of order " + std::to_string(a.order()) + " to order " +
                            std::to_string(order));
    }
    std::vector<Polynomial> coefficients(a.coefficients().begin(), a.coefficients().begin() + order + 1);
    return Series(a.ring(), std::move(coefficients));
}

} // namespace motivic
