#pragma once

#include <cstdint>
#include <random>

#include "motivic/polynomial.hpp"
#include "motivic/series.hpp"

namespace motivic {

/// Seeded generators for property sweeps. Sequences depend only on the seed
/// (and the standard library's mt19937_64, which is fully specified).
class RandomInputs {
public:
    struct Shape {
        int max_degree = 2;          // total degree bound (absolute value per variable in Laurent rings)
        int coefficient_bound = 3;   // coefficients drawn from [-bound, bound]
        bool effective = false;      // draw from [0, bound] instead
        double density = 1.0;        // probability that a candidate monomial is kept
    };

    explicit RandomInputs(std::uint64_t seed) : engine_(seed) {}

    std::int64_t uniform(std::int64_t lo, std::int64_t hi);

    Polynomial polynomial(const Ring& ring, const Shape& shape);
    /// 1 + c_1 t + ... + c_order t^order with random coefficients.
    Series unital_series(const Ring& ring, int order, const Shape& shape);

private:
    std::mt19937_64 engine_;
};

} // namespace motivic
