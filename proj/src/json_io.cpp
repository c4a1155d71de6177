#include "motivic/json_io.hpp"

#include "motivic/error.hpp"

namespace motivic {

using nlohmann::json;

namespace {

Exponent to_exponent(const std::vector<int>& v) {
    return Exponent(v.begin(), v.end());
}

Integer parse_integer(const json& j) {
    if (!j.is_string()) {
        throw DataError("coefficient must be a decimal string, got " + j.dump());
    }
    const auto& text = j.get_ref<const std::string&>();
    Integer value;
    if (text.empty() || value.set_str(text, 10) != 0) {
        throw DataError("malformed coefficient '" + text + "'");
    }
    return value;
}

template <typename F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const json::exception& e) {
        throw DataError(std::string("malformed ") + what + " JSON: " + e.what());
    }
}

} // namespace

json ring_to_json(const Ring& ring) {
    return json{{"vars", ring.variables()}, {"laurent", ring.laurent()}};
}

Ring ring_from_json(const json& j) {
    return guarded("ring", [&] {
        return Ring(j.at("vars").get<std::vector<std::string>>(), j.value("laurent", false));
    });
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [exponent, coefficient] : p.terms()) {
        terms.push_back(json{{"exp", exponent}, {"coef", coefficient.get_str()}});
    }
    return json{{"ring", ring_to_json(p.ring())}, {"terms", std::move(terms)}};
}

Polynomial polynomial_from_json(const json& j) {
    return guarded("polynomial", [&] {
        Ring ring = ring_from_json(j.at("ring"));
        std::vector<std::pair<Exponent, Integer>> terms;
        for (const auto& term : j.at("terms")) {
            Integer coefficient = parse_integer(term.at("coef"));
            if (coefficient == 0) {
                throw DataError("stored coefficients must be nonzero");
            }
            terms.emplace_back(to_exponent(term.at("exp").get<std::vector<int>>()), std::move(coefficient));
        }
        Polynomial p = Polynomial::from_terms(ring, terms);
        if (p.term_count() != terms.size()) {
            throw DataError("repeated exponent vector in polynomial terms");
        }
        return p;
    });
}

json to_json(const Series& s) {
    json coeffs = json::array();
    for (const auto& c : s.coefficients()) {
        coeffs.push_back(to_json(c));
    }
    return json{{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

Series series_from_json(const json& j) {
    return guarded("series", [&] {
        const int order = j.at("order").get<int>();
        const auto& coeffs = j.at("coeffs");
        if (order < 0 || coeffs.size() != static_cast<std::size_t>(order) + 1) {
            throw DataError("series of order " + std::to_string(order) + " needs " + std::to_string(order + 1) +
                            " coefficients, got " + std::to_string(coeffs.size()));
        }
        std::vector<Polynomial> coefficients;
        for (const auto& c : coeffs) {
            coefficients.push_back(polynomial_from_json(c));
        }
        Ring ring = coefficients.front().ring();
        return Series(std::move(ring), std::move(coefficients));
    });
}

json to_json(const EulerProduct& e) {
    json exponents = json::array();
    for (const auto& b : e.exponents()) {
        exponents.push_back(to_json(b));
    }
    return json{{"order", e.order()}, {"exponents", std::move(exponents)}};
}

EulerProduct euler_product_from_json(const json& j, const Ring& ring) {
    return guarded("Euler product", [&] {
        const int order = j.at("order").get<int>();
        const auto& list = j.at("exponents");
        if (order < 0 || list.size() != static_cast<std::size_t>(order)) {
            throw DataError("Euler product of order " + std::to_string(order) + " needs " + std::to_string(order) +
                            " exponents, got " + std::to_string(list.size()));
        }
        std::vector<Polynomial> exponents;
        for (const auto& b : list) {
            exponents.push_back(polynomial_from_json(b));
        }
        Ring r = exponents.empty() ? ring : exponents.front().ring();
        return EulerProduct(std::move(r), std::move(exponents));
    });
}

} // namespace motivic
