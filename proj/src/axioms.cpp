#include "motivic/axioms.hpp"

#include <functional>

#include "motivic/power_structure.hpp"

namespace motivic {

std::vector<PropertyOutcome> run_axiom_suite(const AxiomSuiteConfig& config) {
    std::vector<PropertyOutcome> outcomes;
    for (const char* name : {"1: A^0 = 1", "2: A^1 = A", "3: (A*B)^m = A^m * B^m", "4: A^(m+n) = A^m * A^n",
                             "5: A^(m*n) = (A^n)^m", "6: (1+t)^m = 1 + m*t + O(t^2)", "7: A(t^k)^m = A^m(t^k)"}) {
        outcomes.emplace_back().name = name;
    }
    const Ring& ring = config.ring;
    const int order = config.order;
    RandomInputs random(config.seed);

    auto record = [](PropertyOutcome& outcome, bool ok, int sample, const std::function<std::string()>& describe) {
        ++outcome.checked;
        if (!ok) {
            if (outcome.failed == 0) {
                outcome.first_counterexample = "sample " + std::to_string(sample) + ": " + describe();
            }
            ++outcome.failed;
        }
    };

    std::vector<Polynomial> one_plus_t(static_cast<std::size_t>(order) + 1, Polynomial(ring));
    one_plus_t[0] = Polynomial(ring, 1);
    if (order >= 1) {
        one_plus_t[1] = Polynomial(ring, 1);
    }
    const Series binomial(ring, std::move(one_plus_t));

    for (int sample = 0; sample < config.samples; ++sample) {
        const Series a = random.unital_series(ring, order, config.shape);
        const Series b = random.unital_series(ring, order, config.shape);
        const Polynomial m = random.polynomial(ring, config.shape);
        const Polynomial n = random.polynomial(ring, config.shape);
        const int k = static_cast<int>(random.uniform(1, 3));

        auto describe = [&] {
            return "A = " + a.to_string() + "; B = " + b.to_string() + "; m = " + m.to_string() +
                   "; n = " + n.to_string() + "; k = " + std::to_string(k);
        };

        const Series a_m = pow(a, m);
        const Series a_n = pow(a, n);

        record(outcomes[0], pow(a, Polynomial(ring)) == Series::one(ring, order), sample, describe);
        record(outcomes[1], pow(a, Polynomial(ring, 1)) == a, sample, describe);
        record(outcomes[2], pow(a * b, m) == a_m * pow(b, m), sample, describe);
        record(outcomes[3], pow(a, m + n) == a_m * a_n, sample, describe);
        record(outcomes[4], pow(a, m * n) == pow(a_n, m), sample, describe);

        const Series binomial_m = pow(binomial, m);
        record(outcomes[5], binomial_m.is_unital() && (order < 1 || binomial_m[1] == m), sample, describe);

        record(outcomes[6], pow(rescale_variable(a, k), m) == rescale_variable(a_m, k), sample, describe);
    }
    return outcomes;
}

} // namespace motivic
