#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "motivic/polynomial.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Z[L^±1], where L is the class of the affine line.
Ring motivic_ring();

/// Generating series of punctual Hilbert schemes of A^d at the origin:
/// coefficient n is the class of length-n subschemes supported at 0.
struct LocalHilbertData {
    int dimension = 0;
    Series series = Series::one(motivic_ring(), 0);
    std::string source;
};

/// A class with the dimension of the smooth variety it stands for. The ring
/// of `representation` selects the pipeline: L (motivic), u,v (Hodge-Deligne)
/// or Z (Euler characteristic).
struct VarietyClass {
    Polynomial representation;
    int dimension = 0;
};

/// Throws DataError unless the series is unital, has coefficient 1 at t^1 and
/// has only effective coefficients.
void validate_local_data(const LocalHilbertData& data);

/// d = 1: 1 + t + t^2 + ... (a smooth curve germ has one subscheme of each length).
/// d = 2: prod_{k>=1} (1 - L^{k-1} t^k)^{-1}, read from the bundled data up to
///        bundled_surface_order() and assembled from the product beyond it.
/// d >= 3: `user_data`, validated and truncated to `order`; no closed form is bundled.
LocalHilbertData local_series(int dimension, int order, const std::optional<LocalHilbertData>& user_data = std::nullopt);

/// Surface local data built from the partition sum of the punctual classes,
/// n = 0..order. This is the generator of the bundled data file.
LocalHilbertData surface_local_data_from_partitions(int order);

/// Order up to which the d = 2 local series is read from the bundled file.
int bundled_surface_order();

/// Generating series of Hilbert schemes of points on X: local^{[X]}.
Series global_series(const VarietyClass& x, const LocalHilbertData& local, int order);

struct ConsistencyReport {
    bool ok = true;
    std::string report;
};

/// Checks H_{A^d} = H_{A^d,0}^{L^d} against the product form and that
/// H_{A^d}^{L^-d [X]} = H_{A^d,0}^{[X]} for a fixed set of sample classes.
ConsistencyReport affine_consistency_check(int dimension, int order);

/// Evaluates every coefficient at 1: the Euler-characteristic image.
Series euler_specialization(const Series& s);

/// Image of a Laurent L-series under L -> u*v in `target`, a ring with variables u, v.
Series hodge_deligne_image(const Series& motivic, const Ring& target);

/// e(H_X(t)) = e(local)^{e_X}: maps the local series by L -> u*v into the ring
/// of `e_x` and raises it to e_X.
Series hodge_deligne_series(const Polynomial& e_x, int dimension, int order,
                            const std::optional<LocalHilbertData>& user_data = std::nullopt);

/// (1 - t)^{-[X]}: coefficient n is the class of the n-th symmetric power.
Series kapranov_zeta(const Polynomial& x, int order);

nlohmann::json to_json(const LocalHilbertData& data);
LocalHilbertData local_data_from_json(const nlohmann::json& j);

} // namespace motivic
