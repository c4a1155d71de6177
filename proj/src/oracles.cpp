#include "motivic/oracles.hpp"

#include <numeric>

#include "motivic/error.hpp"

namespace motivic::oracles {

namespace {

void check_order(int order) {
    if (order < 0) {
        throw Error("oracle order must be nonnegative");
    }
}

void check_scale(const WeightProfile& profile) {
    if (profile.m > kMaxPoints) {
        throw ScaleBoundExceeded("enumeration needs |M| <= " + std::to_string(kMaxPoints) + ", got " +
                                 std::to_string(profile.m));
    }
    const unsigned long points = std::accumulate(profile.sizes.begin(), profile.sizes.end(), 0UL);
    const unsigned long long limit = 43046721ULL; // 9^8
    unsigned long long work = 1;
    for (unsigned i = 0; i < profile.m; ++i) {
        work *= points + 1;
        if (work > limit) {
            throw ScaleBoundExceeded("enumeration over (1 + |A|)^|M| = (" + std::to_string(points + 1) + ")^" +
                                     std::to_string(profile.m) + " configurations exceeds 9^8");
        }
    }
}

Integer falling_factorial(unsigned m, unsigned s) {
    if (s > m) {
        return 0;
    }
    Integer out = 1;
    for (unsigned j = 0; j < s; ++j) {
        out *= m - j;
    }
    return out;
}

Integer factorial(unsigned n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

void partitions_into(int remaining, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        out.push_back(current);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        current.push_back(part);
        partitions_into(remaining - part, part, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Integer> finite_power_enumerate(const WeightProfile& profile, int order) {
    check_order(order);
    check_scale(profile);

    // Flatten A into one weight per point.
    std::vector<int> point_weights;
    for (std::size_t i = 0; i < profile.sizes.size(); ++i) {
        point_weights.insert(point_weights.end(), profile.sizes[i], static_cast<int>(i) + 1);
    }

    std::vector<Integer> counts(static_cast<std::size_t>(order) + 1, 0);
    // Each point of M is either left out of K or sent to one point of A.
    auto visit = [&](auto&& self, unsigned point, int weight) -> void {
        if (weight > order) {
            return;
        }
        if (point == profile.m) {
            counts[static_cast<std::size_t>(weight)] += 1;
            return;
        }
        self(self, point + 1, weight);
        for (int w : point_weights) {
            self(self, point + 1, weight + w);
        }
    };
    visit(visit, 0, 0);
    return counts;
}

std::vector<Integer> coefficient_formula_count(const WeightProfile& profile, int order) {
    check_order(order);
    check_scale(profile);

    const int max_weight = static_cast<int>(profile.sizes.size());
    std::vector<Integer> counts(static_cast<std::size_t>(order) + 1, 0);
    std::vector<unsigned> multiplicity(static_cast<std::size_t>(max_weight) + 1, 0);

    // Choose k_i for i = weight, weight-1, ..., 1 with sum i*k_i = target.
    auto choose = [&](auto&& self, int weight, int remaining, int target) -> void {
        if (weight == 0) {
            if (remaining != 0) {
                return;
            }
            unsigned points_used = 0;
            Integer denominator = 1;
            Integer values = 1;
            for (int i = 1; i <= max_weight; ++i) {
                const unsigned k = multiplicity[static_cast<std::size_t>(i)];
                points_used += k;
                denominator *= factorial(k);
                Integer a_pow;
                mpz_ui_pow_ui(a_pow.get_mpz_t(), profile.sizes[static_cast<std::size_t>(i - 1)], k);
                values *= a_pow;
            }
            counts[static_cast<std::size_t>(target)] += falling_factorial(profile.m, points_used) / denominator * values;
            return;
        }
        for (int k = 0; k * weight <= remaining; ++k) {
            multiplicity[static_cast<std::size_t>(weight)] = static_cast<unsigned>(k);
            self(self, weight - 1, remaining - k * weight, target);
        }
        multiplicity[static_cast<std::size_t>(weight)] = 0;
    };
    for (int k = 0; k <= order; ++k) {
        choose(choose, max_weight, k, k);
    }
    return counts;
}

std::vector<std::vector<int>> partitions_enumerate(int n) {
    if (n < 0 || n > 60) {
        throw ScaleBoundExceeded("partition enumeration supports 0 <= n <= 60, got " + std::to_string(n));
    }
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    partitions_into(n, n, current, out);
    return out;
}

Polynomial punctual_surface_class_oracle(int n) {
    if (n < 1 || n > 40) {
        throw ScaleBoundExceeded("punctual class oracle supports 1 <= n <= 40, got " + std::to_string(n));
    }
    const Ring ring({"L"}, true);
    Polynomial out(ring);
    for (const auto& lambda : partitions_enumerate(n)) {
        out.add_term_unchecked(Exponent{n - static_cast<int>(lambda.size())}, 1);
    }
    return out;
}

std::vector<Integer> partition_convolution(unsigned chi, int order) {
    check_order(order);
    std::vector<Integer> partition_counts;
    for (int n = 0; n <= order; ++n) {
        partition_counts.emplace_back(static_cast<unsigned long>(partitions_enumerate(n).size()));
    }
    std::vector<Integer> result(static_cast<std::size_t>(order) + 1, 0);
    result[0] = 1;
    for (unsigned copy = 0; copy < chi; ++copy) {
        std::vector<Integer> next(result.size(), 0);
        for (std::size_t i = 0; i < result.size(); ++i) {
            for (std::size_t j = 0; i + j < result.size(); ++j) {
                next[i + j] += result[i] * partition_counts[j];
            }
        }
        result = std::move(next);
    }
    return result;
}

Integer multiset_count(unsigned m, unsigned n) {
    // ways[j] = number of multisets of size j drawn from the elements seen so far.
    std::vector<Integer> ways(n + 1, 0);
    ways[0] = 1;
    for (unsigned element = 0; element < m; ++element) {
        for (unsigned j = 1; j <= n; ++j) {
            ways[j] += ways[j - 1];
        }
    }
    return ways[n];
}

} // namespace motivic::oracles
