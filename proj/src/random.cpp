#include "motivic/random.hpp"

#include <cstdlib>

namespace motivic {

namespace {

// Exponent vectors with sum of |e_i| <= max_degree (nonnegative entries unless Laurent).
void candidate_monomials(const Ring& ring, int max_degree, std::size_t index, Exponent& current, int budget,
                         std::vector<Exponent>& out) {
    if (index == ring.rank()) {
        out.push_back(current);
        return;
    }
    const int lo = ring.laurent() ? -budget : 0;
    for (int e = lo; e <= budget; ++e) {
        current[index] = e;
        candidate_monomials(ring, max_degree, index + 1, current, budget - std::abs(e), out);
    }
    current[index] = 0;
}

} // namespace

std::int64_t RandomInputs::uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = engine_.max() - engine_.max() % span;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<std::int64_t>(draw % span);
}

Polynomial RandomInputs::polynomial(const Ring& ring, const Shape& shape) {
    std::vector<Exponent> candidates;
    Exponent current(ring.rank(), 0);
    candidate_monomials(ring, shape.max_degree, 0, current, shape.max_degree, candidates);

    Polynomial p(ring);
    const auto keep_threshold = static_cast<std::int64_t>(shape.density * 1000.0);
    for (const auto& e : candidates) {
        if (uniform(0, 999) >= keep_threshold) {
            continue;
        }
        const std::int64_t c = shape.effective ? uniform(0, shape.coefficient_bound)
                                               : uniform(-shape.coefficient_bound, shape.coefficient_bound);
        p.add_term_unchecked(e, Integer(static_cast<long>(c)));
    }
    return p;
}

Series RandomInputs::unital_series(const Ring& ring, int order, const Shape& shape) {
    std::vector<Polynomial> coefficients;
    coefficients.emplace_back(ring, 1);
    for (int k = 1; k <= order; ++k) {
        coefficients.push_back(polynomial(ring, shape));
    }
    return Series(ring, std::move(coefficients));
}

} // namespace motivic
