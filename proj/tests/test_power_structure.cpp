#include "doctest.h"

#include "motivic/error.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/random.hpp"
#include "support.hpp"

using namespace motivic;
using namespace testing_support;

namespace {

// (1 - t)^{-a} as the literal product over the terms p*x of a of (1 - x t)^{-p}.
Series literal_kernel(const Polynomial& a, int order) {
    const Ring& ring = a.ring();
    Series result = Series::one(ring, order);
    for (const auto& [x, p] : a.terms()) {
        std::vector<Polynomial> one_minus(static_cast<std::size_t>(order) + 1, Polynomial(ring));
        one_minus[0] = Polynomial(ring, 1);
        if (order >= 1) {
            one_minus[1] = -Polynomial::monomial(ring, x);
        }
        const Series linear(ring, std::move(one_minus));
        const Series factor = p > 0 ? inverse(linear) : linear;
        for (Integer i = 0; i < abs(p); ++i) {
            result = result * factor;
        }
    }
    return result;
}

Series repeated_product(const Series& a, int m) {
    Series out = Series::one(a.ring(), a.order());
    for (int i = 0; i < m; ++i) {
        out = out * a;
    }
    return out;
}

// Any kernel other than the built-in one goes through the generic peeling route.
const Kernel& peeling_kernel() {
    static const Kernel kernel = [] {
        std::vector<Polynomial> samples{poly("0", Zuv()), poly("1", Zuv()), poly("u-2*v^2", Zuv()),
                                        poly("3*u*v-1", Zuv())};
        return Kernel::custom("literal", literal_kernel, samples, 5);
    }();
    return kernel;
}

const Kernel& wrapped_kernel() {
    static const Kernel kernel = [] {
        std::vector<Polynomial> samples{poly("0", Zuv()), poly("1", Zuv()), poly("u-2*v^2", Zuv())};
        return Kernel::custom("wrapped", base_series, samples, 5);
    }();
    return kernel;
}

} // namespace

TEST_CASE("base series examples") {
    CHECK(base_series(poly("1", Z()), 4).to_string() == "1 + t + t^2 + t^3 + t^4");
    CHECK(base_series(Polynomial(Z()), 4) == Series::one(Z(), 4));
    CHECK(base_series(poly("u*v", Zuv()), 2).to_string() == "1 + u*v*t + u^2*v^2*t^2");
    CHECK(base_series(poly("-1", Z()), 4).to_string() == "1 - t");
    CHECK(base_series(poly("2", Z()), 3).to_string() == "1 + 2*t + 3*t^2 + 4*t^3");
    CHECK(base_series(poly("L^-1", ZL()), 2).to_string() == "1 + L^-1*t + L^-2*t^2");
}

TEST_CASE("base series agrees with the literal product of linear factors") {
    RandomInputs random(5);
    for (const Ring& ring : {Z(), Zuv(), ZL()}) {
        for (int i = 0; i < 30; ++i) {
            const Polynomial a = random.polynomial(ring, {});
            CHECK(base_series(a, 7) == literal_kernel(a, 7));
        }
    }
}

TEST_CASE("factor and assemble examples") {
    const EulerProduct g = factor(Series::geometric(Z(), 5));
    CHECK(g.exponent(1).is_one());
    for (int i = 2; i <= 5; ++i) {
        CHECK(g.exponent(i).is_zero());
    }
    const EulerProduct e = factor(series("1+t", Z(), 5));
    CHECK(e.exponent(1) == poly("1", Z()));
    CHECK(e.exponent(2) == poly("-1", Z()));
    for (int i = 3; i <= 5; ++i) {
        CHECK(e.exponent(i).is_zero());
    }
    for (const auto& b : factor(Series::one(Z(), 5)).exponents()) {
        CHECK(b.is_zero());
    }
    CHECK(assemble(EulerProduct(Z(), {poly("1", Z()), Polynomial(Z()), Polynomial(Z())})) ==
          Series::geometric(Z(), 3));
    CHECK(assemble(EulerProduct(Z(), {poly("1", Z()), poly("-1", Z()), Polynomial(Z())})).to_string() == "1 + t");
    CHECK(assemble(EulerProduct(Z(), std::vector<Polynomial>(4, Polynomial(Z())))) == Series::one(Z(), 4));
    CHECK_THROWS_AS(factor(series("2+t", Z(), 3)), NotUnital);
}

TEST_CASE("pow examples") {
    CHECK(pow(series("1+t", Z(), 3), poly("3", Z())).to_string() == "1 + 3*t + 3*t^2 + t^3");
    CHECK(pow(series("1+t", Z(), 4), Polynomial(Z())) == Series::one(Z(), 4));
    const Ring zu({"u"});
    CHECK(pow(series("1+t", zu, 2), poly("u", zu)).to_string() == "1 + u*t + (-u+u^2)*t^2");
    CHECK(pow(series("1+2*t", Z(), 3), poly("3", Z())).to_string() == "1 + 6*t + 12*t^2 + 8*t^3");
    CHECK_THROWS_AS(pow(series("1+t", Z(), 3), poly("u", Zuv())), RingMismatch);
}

TEST_CASE("integer exponents match repeated multiplication") {
    RandomInputs random(17);
    for (int i = 0; i < 20; ++i) {
        const Series a = random.unital_series(Zuv(), 6, {});
        for (int m = 0; m <= 4; ++m) {
            CHECK(pow(a, Polynomial(Zuv(), m)) == repeated_product(a, m));
            CHECK(pow(a, Polynomial(Zuv(), -m)) == inverse(repeated_product(a, m)));
        }
    }
}

TEST_CASE("peeling with a generic kernel agrees with the monomial kernel") {
    RandomInputs random(23);
    const RandomInputs::Shape small{.max_degree = 1, .coefficient_bound = 2};
    for (int i = 0; i < 10; ++i) {
        const Series a = random.unital_series(Zuv(), 4, small);
        const EulerProduct fast = factor(a);
        CHECK(factor(a, peeling_kernel()) == fast);
        CHECK(assemble(fast, peeling_kernel()) == a);
    }
    for (int i = 0; i < 30; ++i) {
        const Series a = random.unital_series(Zuv(), 8, {});
        const Polynomial m = random.polynomial(Zuv(), {});
        const EulerProduct fast = factor(a);
        CHECK(factor(a, wrapped_kernel()) == fast);
        CHECK(assemble(fast, wrapped_kernel()) == a);
        CHECK(pow(a, m, wrapped_kernel()) == pow(a, m));
    }
}

TEST_CASE("custom kernels must be additive") {
    const std::vector<Polynomial> samples{poly("1", Z()), poly("2", Z())};
    auto not_additive = [](const Polynomial& a, int order) {
        std::vector<Polynomial> c(static_cast<std::size_t>(order) + 1, Polynomial(a.ring()));
        c[0] = Polynomial(a.ring(), 1);
        if (order >= 1) {
            c[1] = a;
        }
        for (int k = 2; k <= order; ++k) {
            c[static_cast<std::size_t>(k)] = a.is_one() ? Polynomial(a.ring(), 1) : Polynomial(a.ring());
        }
        return Series(a.ring(), std::move(c));
    };
    CHECK_THROWS_AS(Kernel::custom("broken", not_additive, samples, 4), Error);
}

TEST_CASE("exp and log") {
    CHECK(exp_map(Z(), std::vector<Polynomial>{poly("1", Z()), Polynomial(Z()), Polynomial(Z())}) ==
          Series::geometric(Z(), 3));
    CHECK(exp_map(Z(), std::vector<Polynomial>(3, Polynomial(Z()))) == Series::one(Z(), 3));
    CHECK(exp_map(Zuv(), std::vector<Polynomial>{poly("u*v", Zuv()), Polynomial(Zuv())}).to_string() ==
          "1 + u*v*t + u^2*v^2*t^2");
    const auto log_geometric = log_map(Series::geometric(Z(), 4));
    CHECK(log_geometric == std::vector<Polynomial>{poly("1", Z()), Polynomial(Z()), Polynomial(Z()), Polynomial(Z())});
    const auto log_binomial = log_map(series("1+t", Z(), 3));
    CHECK(log_binomial == std::vector<Polynomial>{poly("1", Z()), poly("-1", Z()), Polynomial(Z())});
    CHECK_THROWS_AS(log_map(series("3", Z(), 3)), NotUnital);
}

TEST_CASE("kernel additivity on random inputs") {
    RandomInputs random(29);
    for (int i = 0; i < 30; ++i) {
        const Polynomial a = random.polynomial(Zuv(), {});
        const Polynomial b = random.polynomial(Zuv(), {});
        CHECK(base_series(a + b, 8) == base_series(a, 8) * base_series(b, 8));
    }
}

TEST_CASE("effectivity") {
    RandomInputs random(37);
    const RandomInputs::Shape effective{.effective = true};
    for (int i = 0; i < 30; ++i) {
        // Effective coefficients, nonnegative integer exponent.
        const Series a = random.unital_series(Zuv(), 6, effective);
        CHECK(pow(a, Polynomial(Zuv(), random.uniform(0, 4))).is_effective());
        // Effective Euler-product exponents, any effective exponent.
        std::vector<Polynomial> p;
        for (int k = 1; k <= 6; ++k) {
            p.push_back(random.polynomial(Zuv(), effective));
        }
        CHECK(pow(exp_map(Zuv(), p), random.polynomial(Zuv(), effective)).is_effective());
    }
    // Effective coefficients alone are not enough once the exponent is not a
    // constant: 1 + t^2 = (1 - t^2)^-1 (1 - t^4), so (1 + t^2)^u has u^2 - u at t^4.
    const Ring zu({"u"});
    const Series s = pow(series("1+t^2", zu, 4), poly("u", zu));
    CHECK(s.to_string() == "1 + u*t^2 + (-u+u^2)*t^4");
}

TEST_CASE("substitutions") {
    const Ring uv_laurent({"u", "v"}, true);
    const auto to_uv = Substitution::monomial(ZL(), uv_laurent, {poly("u*v", uv_laurent)});
    CHECK(to_uv(poly("1+L", ZL())) == poly("1+u*v", uv_laurent));
    CHECK(Substitution::evaluate_at_ones(Zuv())(poly("3+u*v^2", Zuv())) == poly("4", Z()));
    const std::vector<Integer> ones{1, 1};
    CHECK(Substitution::evaluate(Zuv(), ones).kind() == Substitution::Kind::evaluate_at_ones);
    const std::vector<Integer> twos{2, 1};
    CHECK_THROWS_AS(Substitution::evaluate(Zuv(), twos), IncompatibleSubstitution);
    CHECK_THROWS_AS(Substitution::monomial(ZL(), uv_laurent, {poly("1+u", uv_laurent)}), IncompatibleSubstitution);
}

TEST_CASE("transport along compatible substitutions") {
    RandomInputs random(31);
    const Ring uv_laurent({"u", "v"}, true);
    const auto to_uv = Substitution::monomial(ZL(), uv_laurent, {poly("u*v", uv_laurent)});
    const auto at_ones = Substitution::evaluate_at_ones(Zuv());
    const auto identity = Substitution::identity(Zuv());
    for (int i = 0; i < 10; ++i) {
        const Series a = random.unital_series(Zuv(), 6, {});
        const Polynomial m = random.polynomial(Zuv(), {});
        CHECK(transport_check(at_ones, a, m));
        CHECK(transport_check(identity, a, m));
        const Series b = random.unital_series(ZL(), 6, {});
        const Polynomial n = random.polynomial(ZL(), {});
        CHECK(transport_check(to_uv, b, n));
    }
}
