#include "doctest.h"

#include "motivic/error.hpp"
#include "motivic/json_io.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/random.hpp"
#include "support.hpp"

using namespace motivic;
using namespace testing_support;

TEST_CASE("polynomial JSON layout") {
    const nlohmann::json j = to_json(poly("1+2*u*v", Zuv()));
    CHECK(j["ring"]["vars"] == nlohmann::json::array({"u", "v"}));
    CHECK(j["ring"]["laurent"] == false);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][1]["exp"] == nlohmann::json::array({1, 1}));
    CHECK(j["terms"][1]["coef"] == "2");
}

TEST_CASE("JSON round trips") {
    RandomInputs random(43);
    const Ring laurent({"u", "v"}, true);
    for (const Ring& ring : {Z(), Zuv(), ZL(), laurent}) {
        for (int i = 0; i < 25; ++i) {
            const Polynomial p = random.polynomial(ring, {.coefficient_bound = 1000});
            CHECK(polynomial_from_json(nlohmann::json::parse(to_json(p).dump())) == p);
            const Series s = random.unital_series(ring, 5, {});
            CHECK(series_from_json(nlohmann::json::parse(to_json(s).dump())) == s);
            const EulerProduct e = factor(s);
            CHECK(euler_product_from_json(nlohmann::json::parse(to_json(e).dump()), ring) == e);
        }
    }
    const Polynomial huge = poly("2", Z()).pow(300) - poly("1", Z());
    CHECK(polynomial_from_json(to_json(huge)) == huge);
}

TEST_CASE("malformed JSON is rejected") {
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(R"({"terms": []})")), DataError);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(
                        R"({"ring": {"vars": ["u"], "laurent": false}, "terms": [{"exp": [-1], "coef": "1"}]})")),
                    Error);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(
                        R"({"ring": {"vars": ["u"], "laurent": false}, "terms": [{"exp": [1, 2], "coef": "1"}]})")),
                    Error);
    CHECK_THROWS_AS(polynomial_from_json(nlohmann::json::parse(
                        R"({"ring": {"vars": ["u"], "laurent": false}, "terms": [{"exp": [1], "coef": "x"}]})")),
                    DataError);
    CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"order": 2, "coeffs": []})")), Error);
}
