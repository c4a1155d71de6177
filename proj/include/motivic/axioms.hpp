#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "motivic/random.hpp"
#include "motivic/ring.hpp"

namespace motivic {

struct AxiomSuiteConfig {
    std::uint64_t seed = 1;
    int samples = 200;
    int order = 10;
    Ring ring = Ring({"u", "v"});
    RandomInputs::Shape shape{};
};

struct PropertyOutcome {
    std::string name;
    int checked = 0;
    int failed = 0;
    std::string first_counterexample;

    bool passed() const { return failed == 0; }
};

/// Checks the seven defining properties of a power structure on randomized
/// unital series A, B and exponents m, n:
///   1. A^0 = 1                 2. A^1 = A
///   3. (AB)^m = A^m B^m        4. A^{m+n} = A^m A^n
///   5. A^{mn} = (A^n)^m        6. (1+t)^m = 1 + m t + O(t^2)
///   7. A(t^k)^m = A^m(t^k)
/// Inputs depend only on the seed.
std::vector<PropertyOutcome> run_axiom_suite(const AxiomSuiteConfig& config);

} // namespace motivic
