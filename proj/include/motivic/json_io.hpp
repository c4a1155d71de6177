#pragma once

#include <nlohmann/json.hpp>

#include "motivic/polynomial.hpp"
#include "motivic/power_structure.hpp"
#include "motivic/series.hpp"

namespace motivic {

// Polynomial: {"ring": {"vars": [...], "laurent": bool},
//              "terms": [{"exp": [...], "coef": "decimal"}]}
// Series:     {"order": N, "coeffs": [poly, ...]}
// EulerProduct: {"order": N, "exponents": [poly, ...]}
// Coefficients are decimal strings so that no precision is lost.

nlohmann::json ring_to_json(const Ring& ring);
Ring ring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Series& s);
/// The ring is read from the coefficients; all must agree.
Series series_from_json(const nlohmann::json& j);

nlohmann::json to_json(const EulerProduct& e);
/// `ring` is used when the exponent list is empty.
EulerProduct euler_product_from_json(const nlohmann::json& j, const Ring& ring = Ring::integers());

} // namespace motivic
