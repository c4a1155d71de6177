#include "motivic/hilbert.hpp"

#include <algorithm>
#include <sstream>

#include "motivic/error.hpp"
#include "motivic/json_io.hpp"
#include "motivic/oracles.hpp"
#include "motivic/power_structure.hpp"

namespace motivic {

namespace detail {
extern const char* const kBundledSurfaceJson;
}

namespace {

Polynomial power_of_l(int k) {
    return Polynomial::monomial(motivic_ring(), Exponent{k});
}

// prod_{k=1..factors} (1 - L^{shift + k} t^k)^{-1} as a product of inverses
// of linear series; no power structure involved.
Series product_of_geometric_inverses(int shift, int factors, int order) {
    const Ring ring = motivic_ring();
    Series result = Series::one(ring, order);
    for (int k = 1; k <= std::min(factors, order); ++k) {
        std::vector<Polynomial> linear(static_cast<std::size_t>(order) + 1, Polynomial(ring));
        linear[0] = Polynomial(ring, 1);
        linear[static_cast<std::size_t>(k)] = -power_of_l(shift + k);
        result = result * inverse(Series(ring, std::move(linear)));
    }
    return result;
}

const LocalHilbertData& bundled_surface_data() {
    static const LocalHilbertData data = [] {
        LocalHilbertData d = local_data_from_json(nlohmann::json::parse(detail::kBundledSurfaceJson));
        if (d.dimension != 2) {
            throw DataError("bundled surface data has dimension " + std::to_string(d.dimension));
        }
        return d;
    }();
    return data;
}

} // namespace

Ring motivic_ring() {
    static const Ring ring({"L"}, true);
    return ring;
}

void validate_local_data(const LocalHilbertData& data) {
    if (data.dimension < 1) {
        throw DataError("local Hilbert data needs dimension >= 1, got " + std::to_string(data.dimension));
    }
    const Series& s = data.series;
    if (!s.is_unital()) {
        throw DataError("local Hilbert series must start with 1");
    }
    if (s.order() >= 1 && !s[1].is_one()) {
        throw DataError("coefficient of t in a local Hilbert series must be 1 (a single reduced point), got " +
                        s[1].to_string());
    }
    if (!s.is_effective()) {
        throw DataError("local Hilbert series has a non-effective coefficient");
    }
}

LocalHilbertData local_series(int dimension, int order, const std::optional<LocalHilbertData>& user_data) {
    if (order < 0) {
        throw OrderMismatch("order must be nonnegative");
    }
    if (user_data) {
        if (user_data->dimension != dimension) {
            throw DataError("local data is for dimension " + std::to_string(user_data->dimension) +
                            ", requested " + std::to_string(dimension));
        }
        validate_local_data(*user_data);
        return LocalHilbertData{dimension, truncate(user_data->series, order), user_data->source};
    }
    switch (dimension) {
    case 1:
        return LocalHilbertData{1, Series::geometric(motivic_ring(), order), "curve germ: one subscheme per length"};
    case 2: {
        if (order <= bundled_surface_order()) {
            const LocalHilbertData& bundled = bundled_surface_data();
            return LocalHilbertData{2, truncate(bundled.series, order), bundled.source};
        }
        std::vector<Polynomial> exponents;
        for (int k = 1; k <= order; ++k) {
            exponents.push_back(power_of_l(k - 1));
        }
        return LocalHilbertData{2, assemble(EulerProduct(motivic_ring(), std::move(exponents))),
                                "surface germ: prod_{k>=1} (1 - L^(k-1) t^k)^-1"};
    }
    default:
        throw DataError("no local Hilbert series is bundled for dimension " + std::to_string(dimension) +
                        "; supply one as a local data file");
    }
}

LocalHilbertData surface_local_data_from_partitions(int order) {
    if (order < 0) {
        throw OrderMismatch("order must be nonnegative");
    }
    std::vector<Polynomial> coefficients{Polynomial(motivic_ring(), 1)};
    for (int n = 1; n <= order; ++n) {
        coefficients.push_back(oracles::punctual_surface_class_oracle(n));
    }
    return LocalHilbertData{2, Series(motivic_ring(), std::move(coefficients)),
                            "surface germ: sum over partitions of n of L^(n - parts)"};
}

int bundled_surface_order() {
    return bundled_surface_data().series.order();
}

Series global_series(const VarietyClass& x, const LocalHilbertData& local, int order) {
    if (x.dimension != local.dimension) {
        throw DataError("variety of dimension " + std::to_string(x.dimension) + " with local data of dimension " +
                        std::to_string(local.dimension));
    }
    require_same_ring(x.representation.ring(), local.series.ring(), "global_series");
    return pow(truncate(local.series, order), x.representation);
}

ConsistencyReport affine_consistency_check(int dimension, int order) {
    if (dimension != 1 && dimension != 2) {
        throw DataError("affine consistency is checked for d = 1 and d = 2 only");
    }
    const Ring ring = motivic_ring();
    const LocalHilbertData local = local_series(dimension, order);
    const Polynomial affine_class = power_of_l(dimension);
    const Series affine = pow(local.series, affine_class);

    std::ostringstream report;
    bool ok = true;

    // d=1: 1/(1 - L t); d=2: prod_k 1/(1 - L^{k+1} t^k).
    const Series expected_affine = dimension == 1 ? product_of_geometric_inverses(0, 1, order)
                                                  : product_of_geometric_inverses(1, order, order);
    if (!(affine == expected_affine)) {
        ok = false;
        report << "H_A" << dimension << " = local^(L^" << dimension << ") disagrees with the product form\n";
    }

    const Polynomial inverse_affine = power_of_l(-dimension);
    const Polynomial l = power_of_l(1);
    const Polynomial one(ring, 1);
    const std::vector<Polynomial> samples = {
        Polynomial(ring), one, l, one + l, affine_class, l * l + l + one, Polynomial(ring, 2) * l.pow(3) - l + Polynomial(ring, 3),
    };
    for (const auto& x : samples) {
        const Series via_affine = pow(affine, inverse_affine * x);
        const Series via_local = pow(local.series, x);
        if (!(via_affine == via_local)) {
            ok = false;
            report << "[X] = " << x.to_string() << ": H_A^(L^-d [X]) != H_0^[X]\n";
        }
    }
    if (ok) {
        report << "d = " << dimension << ", order " << order << ": " << samples.size() << " classes consistent\n";
    }
    return ConsistencyReport{ok, report.str()};
}

Series euler_specialization(const Series& s) {
    return Substitution::evaluate_at_ones(s.ring())(s);
}

Series hodge_deligne_image(const Series& motivic, const Ring& target) {
    const auto u = target.index_of("u");
    const auto v = target.index_of("v");
    if (!u || !v || target.rank() != 2) {
        throw RingMismatch("Hodge-Deligne target ring must have variables u, v; got " + target.to_string());
    }
    require_same_ring(motivic.ring(), motivic_ring(), "hodge_deligne_image");
    Exponent uv(2, 0);
    uv[*u] = 1;
    uv[*v] = 1;
    return Substitution::monomial(motivic_ring(), target, {Polynomial::monomial(target, uv)})(motivic);
}

Series hodge_deligne_series(const Polynomial& e_x, int dimension, int order,
                            const std::optional<LocalHilbertData>& user_data) {
    const LocalHilbertData local = local_series(dimension, order, user_data);
    return pow(hodge_deligne_image(local.series, e_x.ring()), e_x);
}

Series kapranov_zeta(const Polynomial& x, int order) {
    return base_series(x, order);
}

nlohmann::json to_json(const LocalHilbertData& data) {
    return nlohmann::json{{"dimension", data.dimension}, {"source", data.source}, {"series", to_json(data.series)}};
}

LocalHilbertData local_data_from_json(const nlohmann::json& j) {
    LocalHilbertData data;
    try {
        data.dimension = j.at("dimension").get<int>();
        data.source = j.value("source", std::string());
    } catch (const nlohmann::json::exception& e) {
        throw DataError(std::string("malformed local data JSON: ") + e.what());
    }
    if (!j.contains("series")) {
        throw DataError("local data JSON has no \"series\"");
    }
    data.series = series_from_json(j.at("series"));
    if (!(data.series.ring() == motivic_ring())) {
        throw DataError("local data must be over " + motivic_ring().to_string() + ", got " +
                        data.series.ring().to_string());
    }
    validate_local_data(data);
    return data;
}

} // namespace motivic
