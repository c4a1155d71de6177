#include "motivic/power_structure.hpp"

#include "motivic/error.hpp"

namespace motivic {

namespace {

Exponent scale_exponent(const Exponent& e, int n) {
    Exponent out(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        out[i] = e[i] * n;
    }
    return out;
}

// a(x^k): every exponent vector scaled by k.
Polynomial adams(const Polynomial& a, int k) {
    Polynomial out(a.ring());
    for (const auto& [x, p] : a.terms()) {
        out.add_term_unchecked(scale_exponent(x, k), p);
    }
    return out;
}

// The series F with F(0) = 1 and t F'/F = sum_k c_k t^k satisfies
// n f_n = sum_{k=1..n} c_k f_{n-k}. Callers guarantee the division by n is exact.
Series exp_of_power_sums(const Ring& ring, const std::vector<Polynomial>& c, int order) {
    std::vector<Polynomial> f(static_cast<std::size_t>(order) + 1, Polynomial(ring));
    f[0] = Polynomial(ring, 1);
    std::vector<const Polynomial*> lhs, rhs;
    for (int n = 1; n <= order; ++n) {
        lhs.clear();
        rhs.clear();
        for (int k = 1; k <= n; ++k) {
            const auto& ck = c[static_cast<std::size_t>(k - 1)];
            const auto& f_rest = f[static_cast<std::size_t>(n - k)];
            if (!f_rest.is_zero() && !ck.is_zero()) {
                lhs.push_back(&ck);
                rhs.push_back(&f_rest);
            }
        }
        f[static_cast<std::size_t>(n)] = Polynomial::sum_of_products(ring, lhs, rhs).divide_exact(n);
    }
    return Series(ring, std::move(f));
}

} // namespace

EulerProduct::EulerProduct(Ring ring, std::vector<Polynomial> exponents)
    : ring_(std::move(ring)), exponents_(std::move(exponents)) {
    for (const auto& b : exponents_) {
        require_same_ring(b.ring(), ring_, "Euler product exponent");
    }
}

// F = prod (1 - x t)^{-p} over the terms p*x of a has t F'/F = sum_k a(x^k) t^k.
Series base_series(const Polynomial& a, int order) {
    if (order < 0) {
        throw OrderMismatch("series order must be nonnegative, got " + std::to_string(order));
    }
    std::vector<Polynomial> power_sums;
    power_sums.reserve(static_cast<std::size_t>(order));
    for (int k = 1; k <= order; ++k) {
        power_sums.push_back(adams(a, k));
    }
    return exp_of_power_sums(a.ring(), power_sums, order);
}

std::optional<std::string> find_kernel_violation(const Kernel::Rule& rule, std::span<const Polynomial> samples,
                                                 int order) {
    auto checked = [&](const Polynomial& a) {
        Series s = rule(a, order);
        if (s.order() != order || !(s.ring() == a.ring())) {
            throw Error("kernel returned a series of the wrong order or ring for a = " + a.to_string());
        }
        return s;
    };
    for (const auto& a : samples) {
        const Ring& ring = a.ring();
        if (!(checked(Polynomial(ring)) == Series::one(ring, order))) {
            return "kernel(0) is not 1";
        }
        if (!(checked(Polynomial(ring, 1)) == Series::geometric(ring, order))) {
            return "kernel(1) is not 1 + t + t^2 + ...";
        }
        Series ka = checked(a);
        if (!ka.is_unital() || (order >= 1 && !(ka[1] == a))) {
            return "kernel(a) is not 1 + a*t + O(t^2) for a = " + a.to_string();
        }
        for (const auto& b : samples) {
            if (!(b.ring() == ring)) {
                continue;
            }
            if (!(checked(a + b) == ka * checked(b))) {
                return "kernel(a + b) != kernel(a) * kernel(b) for a = " + a.to_string() + ", b = " + b.to_string();
            }
        }
    }
    return std::nullopt;
}

const Kernel& Kernel::monomial() {
    static const Kernel kernel("monomial", [](const Polynomial& a, int order) { return base_series(a, order); });
    return kernel;
}

Kernel Kernel::custom(std::string name, Rule rule, std::span<const Polynomial> samples, int check_order) {
    if (auto violation = find_kernel_violation(rule, samples, check_order)) {
        throw Error("kernel '" + name + "' rejected: " + *violation);
    }
    return Kernel(std::move(name), std::move(rule));
}

EulerProduct factor(const Series& a, const Kernel& kernel) {
    require_unital(a, "factor");
    const int n = a.order();
    if (&kernel == &Kernel::monomial()) {
        // Power sums of a: c_k = k a_k - sum_{j<k} c_j a_{k-j}; then peel
        // k b_k = c_k - sum_{i | k, i < k} i * b_i(x^{k/i}).
        const Ring& ring = a.ring();
        std::vector<Polynomial> c;
        c.reserve(static_cast<std::size_t>(n));
        std::vector<const Polynomial*> lhs, rhs;
        for (int k = 1; k <= n; ++k) {
            lhs.clear();
            rhs.clear();
            for (int j = 1; j < k; ++j) {
                const auto& cj = c[static_cast<std::size_t>(j - 1)];
                const auto& rest = a[k - j];
                if (!cj.is_zero() && !rest.is_zero()) {
                    lhs.push_back(&cj);
                    rhs.push_back(&rest);
                }
            }
            c.push_back(a[k] * Integer(k) - Polynomial::sum_of_products(ring, lhs, rhs));
        }
        std::vector<Polynomial> exponents;
        exponents.reserve(static_cast<std::size_t>(n));
        for (int k = 1; k <= n; ++k) {
            Polynomial rest = c[static_cast<std::size_t>(k - 1)];
            for (int i = 1; i < k; ++i) {
                const auto& b = exponents[static_cast<std::size_t>(i - 1)];
                if (k % i == 0 && !b.is_zero()) {
                    rest -= adams(b, k / i) * Integer(i);
                }
            }
            exponents.push_back(rest.divide_exact(k));
        }
        return EulerProduct(ring, std::move(exponents));
    }
    Series residual = a;
    std::vector<Polynomial> exponents;
    exponents.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        Polynomial b = residual[i];
        if (!b.is_zero()) {
            // The built-in rule is additive, so its inverse is the rule at -b.
            Series divisor = &kernel == &Kernel::monomial() ? base_series(-b, n / i) : inverse(kernel(b, n / i));
            residual = residual * spread(divisor, i, n);
        }
        exponents.push_back(std::move(b));
    }
    return EulerProduct(a.ring(), std::move(exponents));
}

Series assemble(const EulerProduct& e, const Kernel& kernel) {
    const int n = e.order();
    if (&kernel == &Kernel::monomial()) {
        // prod_i base_series(b_i)(t^i) has power sums c_j = sum_{i | j} i * b_i(x^{j/i}).
        std::vector<Polynomial> c(static_cast<std::size_t>(n), Polynomial(e.ring()));
        for (int i = 1; i <= n; ++i) {
            const auto& b = e.exponent(i);
            if (b.is_zero()) {
                continue;
            }
            for (int j = i; j <= n; j += i) {
                c[static_cast<std::size_t>(j - 1)] += adams(b, j / i) * Integer(i);
            }
        }
        return exp_of_power_sums(e.ring(), c, n);
    }
    Series result = Series::one(e.ring(), n);
    for (int i = 1; i <= n; ++i) {
        const auto& b = e.exponent(i);
        if (b.is_zero()) {
            continue;
        }
        result = result * spread(kernel(b, n / i), i, n);
    }
    return result;
}

Series pow(const Series& a, const Polynomial& m, const Kernel& kernel) {
    require_same_ring(a.ring(), m.ring(), "pow");
    EulerProduct factored = factor(a, kernel);
    std::vector<Polynomial> scaled;
    scaled.reserve(factored.exponents().size());
    for (const auto& b : factored.exponents()) {
        scaled.push_back(b * m);
    }
    return assemble(EulerProduct(a.ring(), std::move(scaled)), kernel);
}

Series exp_map(const Ring& ring, std::span<const Polynomial> terms, const Kernel& kernel) {
    return assemble(EulerProduct(ring, std::vector<Polynomial>(terms.begin(), terms.end())), kernel);
}

std::vector<Polynomial> log_map(const Series& a, const Kernel& kernel) {
    return factor(a, kernel).exponents();
}

Substitution Substitution::identity(const Ring& ring) {
    return Substitution(Kind::identity, ring, ring, {});
}

Substitution Substitution::monomial(const Ring& source, const Ring& target, std::vector<Polynomial> images) {
    if (images.size() != source.rank()) {
        throw IncompatibleSubstitution("substitution from " + source.to_string() + " needs " +
                                       std::to_string(source.rank()) + " images, got " +
                                       std::to_string(images.size()));
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        require_same_ring(images[i].ring(), target, "substitution image");
        if (!images[i].is_unit_monomial()) {
            throw IncompatibleSubstitution("image of " + source.variables()[i] + " must be a monomial with coefficient 1, got '" +
                                           images[i].to_string() + "'; such maps do not commute with the power structure");
        }
    }
    return Substitution(Kind::monomial, source, target, std::move(images));
}

Substitution Substitution::evaluate_at_ones(const Ring& source) {
    return Substitution(Kind::evaluate_at_ones, source, Ring::integers(), {});
}

Substitution Substitution::evaluate(const Ring& source, std::span<const Integer> point) {
    if (point.size() != source.rank()) {
        throw IncompatibleSubstitution("evaluation point has " + std::to_string(point.size()) + " entries, ring " +
                                       source.to_string() + " has " + std::to_string(source.rank()) + " variables");
    }
    for (std::size_t i = 0; i < point.size(); ++i) {
        if (point[i] != 1) {
            throw IncompatibleSubstitution("evaluating " + source.variables()[i] + " at " + point[i].get_str() +
                                           " does not commute with the power structure; only u = 1 is supported");
        }
    }
    return evaluate_at_ones(source);
}

Polynomial Substitution::operator()(const Polynomial& p) const {
    require_same_ring(p.ring(), source_, "substitution");
    switch (kind_) {
    case Kind::identity:
        return p;
    case Kind::monomial:
        return p.substitute_monomials(target_, images_);
    case Kind::evaluate_at_ones:
        return Polynomial(target_, p.eval_at_ones());
    }
    throw Error("unreachable substitution kind");
}

Series Substitution::operator()(const Series& s) const {
    return s.map_coefficients(target_, [this](const Polynomial& c) { return (*this)(c); });
}

bool transport_check(const Substitution& phi, const Series& a, const Polynomial& m) {
    return phi(pow(a, m)) == pow(phi(a), phi(m));
}

} // namespace motivic
