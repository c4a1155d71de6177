#pragma once

#include <vector>

#include "motivic/polynomial.hpp"

// Brute-force counterparts of the power structure. Nothing here calls into
// the power-structure code; the point is to check it from the outside.
namespace motivic::oracles {

/// Finite graded set A with sizes[i-1] points of weight i, and a finite set M
/// with m points.
struct WeightProfile {
    std::vector<unsigned> sizes;
    unsigned m = 0;
};

/// Enumeration limits: m <= 8 and (1 + |A|)^m <= 9^8.
inline constexpr unsigned kMaxPoints = 8;

/// Counts pairs (K, phi) with K a subset of M and phi: K -> A, by total
/// weight 0..order, via explicit enumeration.
std::vector<Integer> finite_power_enumerate(const WeightProfile& profile, int order);

/// The same counts from the configuration-space formula:
/// sum over (k_i) with sum i*k_i = k of m!/((m - sum k_i)! prod k_i!) * prod a_i^{k_i}.
std::vector<Integer> coefficient_formula_count(const WeightProfile& profile, int order);

/// All partitions of n as weakly decreasing lists (n <= 60).
std::vector<std::vector<int>> partitions_enumerate(int n);

/// sum over partitions lambda of n of L^{n - len(lambda)}, in Z[L^±1] (n <= 40).
Polynomial punctual_surface_class_oracle(int n);

/// Coefficients of prod_{k>=1} (1 - t^k)^{-chi} for chi >= 0, as the chi-fold
/// convolution power of the partition counts from partitions_enumerate.
std::vector<Integer> partition_convolution(unsigned chi, int order);

/// binom(m + n - 1, n) by counting multisets of size n from m elements.
Integer multiset_count(unsigned m, unsigned n);

} // namespace motivic::oracles
