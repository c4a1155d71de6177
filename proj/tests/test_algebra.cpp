#include "doctest.h"

#include "motivic/error.hpp"
#include "motivic/random.hpp"
#include "support.hpp"

using namespace motivic;
using namespace testing_support;

TEST_CASE("ring descriptors") {
    CHECK(Z().rank() == 0);
    CHECK(Zuv().to_string() == "Z[u,v]");
    CHECK(ZL().to_string() == "Z[L^±1]");
    CHECK_THROWS_AS(Ring({"u", "u"}), Error);
    CHECK_THROWS_AS(Ring({""}), Error);
    CHECK(Ring({"u", "v"}) == Zuv());
    CHECK_FALSE(Ring({"u", "v"}, true) == Zuv());
}

TEST_CASE("polynomial arithmetic") {
    CHECK((poly("u*v", Zuv()) + poly("1", Zuv())).to_string() == "1+u*v");
    CHECK((poly("1+L", ZL()) * poly("1+L", ZL())).to_string() == "1+2*L+L^2");
    CHECK((poly("L^-1", ZL()) * poly("L", ZL())).is_one());
    CHECK((-poly("u-v", Zuv())).to_string() == "-u+v");
    CHECK((poly("u", Zuv()) - poly("u", Zuv())).is_zero());
    CHECK(Polynomial(Zuv()).to_string() == "0");
    CHECK_THROWS_AS(poly("u", Zuv()) + poly("L", ZL()), RingMismatch);
    CHECK_THROWS_AS(poly("u", Zuv()) * poly("1", Z()), RingMismatch);
}

TEST_CASE("graded-lex printing") {
    CHECK(poly("v^2+u*v+u^2+v+u+1", Zuv()).to_string() == "1+u+v+u^2+u*v+v^2");
    CHECK(poly("L^4+L^3", ZL()).to_string() == "L^3+L^4");
    CHECK(poly("-3*u^2*v", Zuv()).to_string() == "-3*u^2*v");
    CHECK(poly("(u*v)^-1", Ring({"u", "v"}, true)).to_string() == "u^-1*v^-1");
}

TEST_CASE("big coefficients stay exact") {
    Polynomial p = poly("2*u+3", Zuv()).pow(200);
    Integer five_pow = 1;
    for (int i = 0; i < 200; ++i) {
        five_pow *= 5;
    }
    CHECK(p.eval_at_ones() == five_pow);
    CHECK(p.coefficient({200, 0}) == Integer("1606938044258990275541962092341162602522202993782792835301376"));
}

TEST_CASE("evaluation at ones") {
    CHECK(poly("1+u*v", Zuv()).eval_at_ones() == 2);
    CHECK(poly("L^4+L^3", ZL()).eval_at_ones() == 2);
    CHECK(Polynomial(Zuv()).eval_at_ones() == 0);
    CHECK(poly("L^-2-3*L", ZL()).eval_at_ones() == -2);
}

TEST_CASE("monomial substitution") {
    const Ring uv_laurent({"u", "v"}, true);
    const std::vector<Polynomial> to_uv{poly("u*v", uv_laurent)};
    CHECK(poly("L^2", ZL()).substitute_monomials(uv_laurent, to_uv).to_string() == "u^2*v^2");
    CHECK(poly("1+L", ZL()).substitute_monomials(uv_laurent, to_uv).to_string() == "1+u*v");
    CHECK(poly("L^-1", ZL()).substitute_monomials(uv_laurent, to_uv).to_string() == "u^-1*v^-1");
    const std::vector<Polynomial> not_monomial{poly("1+u", uv_laurent)};
    CHECK_THROWS_AS(poly("L", ZL()).substitute_monomials(uv_laurent, not_monomial), IncompatibleSubstitution);
    const std::vector<Polynomial> scaled{poly("2*u", uv_laurent)};
    CHECK_THROWS_AS(poly("L", ZL()).substitute_monomials(uv_laurent, scaled), IncompatibleSubstitution);
}

TEST_CASE("series multiplication") {
    CHECK((series("1+t", Z(), 2) * series("1-t", Z(), 2)).to_string() == "1 - t^2");
    CHECK((Series::geometric(Z(), 5) * series("1-t", Z(), 5)) == Series::one(Z(), 5));
    const Series a = series("1+u*v*t", Zuv(), 2);
    CHECK((a * a).to_string() == "1 + 2*u*v*t + u^2*v^2*t^2");
    CHECK_THROWS_AS(series("1+t", Z(), 2) * series("1+t", Z(), 3), OrderMismatch);
    CHECK_THROWS_AS(series("1+t", Z(), 2) * series("1+t", Zuv(), 2), RingMismatch);
}

TEST_CASE("series inverse") {
    CHECK(inverse(series("1-t", Z(), 3)).to_string() == "1 + t + t^2 + t^3");
    CHECK(inverse(Series::one(Z(), 4)) == Series::one(Z(), 4));
    CHECK(inverse(series("1+L*t", ZL(), 2)).to_string() == "1 - L*t + L^2*t^2");
    CHECK_THROWS_AS(inverse(series("2+t", Z(), 2)), NotUnital);
}

TEST_CASE("rescaling the series variable") {
    CHECK(rescale_variable(series("1+t", Z(), 4), 2).to_string() == "1 + t^2");
    CHECK(rescale_variable(series("1+t+t^2", Z(), 4), 3).to_string() == "1 + t^3");
    CHECK(rescale_variable(Series::one(Z(), 4), 5) == Series::one(Z(), 4));
    CHECK_THROWS_AS(rescale_variable(series("1+t", Z(), 4), 0), Error);
}

TEST_CASE("truncation") {
    const Series g = Series::geometric(Z(), 6);
    CHECK(truncate(g, 2).to_string() == "1 + t + t^2");
    CHECK_THROWS_AS(truncate(g, 7), OrderMismatch);
}

TEST_CASE("ring axioms on random polynomials") {
    RandomInputs random(7);
    const RandomInputs::Shape shape{.max_degree = 3, .coefficient_bound = 9};
    for (const Ring& ring : {Z(), Zuv(), ZL()}) {
        for (int i = 0; i < 100; ++i) {
            const Polynomial p = random.polynomial(ring, shape);
            const Polynomial q = random.polynomial(ring, shape);
            const Polynomial r = random.polynomial(ring, shape);
            CHECK((p + q) + r == p + (q + r));
            CHECK((p * q) * r == p * (q * r));
            CHECK(p + q == q + p);
            CHECK(p * q == q * p);
            CHECK(p * (q + r) == p * q + p * r);
            CHECK(p - p == Polynomial(ring));
            CHECK((p * q).eval_at_ones() == p.eval_at_ones() * q.eval_at_ones());
            CHECK((p + q).eval_at_ones() == p.eval_at_ones() + q.eval_at_ones());
        }
    }
}

TEST_CASE("series ring laws and inverse") {
    RandomInputs random(11);
    const RandomInputs::Shape shape{};
    for (int i = 0; i < 40; ++i) {
        const Series a = random.unital_series(Zuv(), 8, shape);
        const Series b = random.unital_series(Zuv(), 8, shape);
        const Series c = random.unital_series(Zuv(), 8, shape);
        CHECK(a * b == b * a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * inverse(a) == Series::one(Zuv(), 8));
        CHECK(inverse(a) * a == Series::one(Zuv(), 8));
    }
}

TEST_CASE("monomial substitution is a ring homomorphism") {
    RandomInputs random(3);
    const Ring target({"x", "y"}, true);
    const std::vector<Polynomial> images{poly("x^2*y^-1", target), poly("y^3", target)};
    const Ring source({"u", "v"}, true);
    for (int i = 0; i < 50; ++i) {
        const Polynomial p = random.polynomial(source, {});
        const Polynomial q = random.polynomial(source, {});
        CHECK((p * q).substitute_monomials(target, images) ==
              p.substitute_monomials(target, images) * q.substitute_monomials(target, images));
        CHECK((p + q).substitute_monomials(target, images) ==
              p.substitute_monomials(target, images) + q.substitute_monomials(target, images));
        CHECK(p.substitute_monomials(target, images).eval_at_ones() == p.eval_at_ones());
    }
}

TEST_CASE("products come out in canonical term order") {
    RandomInputs random(13);
    const Ring laurent({"u", "v", "w"}, true);
    for (const Ring& ring : {Z(), Zuv(), ZL(), laurent}) {
        for (int i = 0; i < 50; ++i) {
            const Polynomial p = random.polynomial(ring, {.max_degree = 4, .coefficient_bound = 5, .density = 0.5});
            const Polynomial q = random.polynomial(ring, {.max_degree = 4, .coefficient_bound = 5, .density = 0.5});
            const Polynomial product = p * q;
            const auto& terms = product.terms();
            for (std::size_t k = 1; k < terms.size(); ++k) {
                CHECK(GradedLexLess{}(terms[k - 1].first, terms[k].first));
            }
            for (const auto& [e, c] : terms) {
                CHECK(c != 0);
            }
            // Same product through the term-by-term route.
            Polynomial expected(ring);
            for (const auto& [ea, ca] : p.terms()) {
                for (const auto& [eb, cb] : q.terms()) {
                    Exponent e(ea.size());
                    for (std::size_t j = 0; j < e.size(); ++j) {
                        e[j] = ea[j] + eb[j];
                    }
                    expected += Polynomial::monomial(ring, e, ca * cb);
                }
            }
            CHECK(product == expected);
        }
    }
}
