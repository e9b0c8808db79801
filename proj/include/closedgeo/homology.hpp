#pragma once

#include <cstdint>
#include <vector>

#include "closedgeo/rational.hpp"

namespace closedgeo {

/// Ranks b_0 .. b_max_degree of H_*(Lambda M / S^1, Lambda^0 M / S^1; Q) for a
/// simply connected manifold rationally equivalent to S^n.
struct BettiTable {
    int n = 0;
    int max_degree = 0;
    std::vector<std::int64_t> ranks;

    std::int64_t operator[](int k) const { return ranks.at(static_cast<std::size_t>(k)); }
    friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Rule-based rank: nonzero exactly in degrees k >= n - 1 of the parity of
/// n - 1, and equal to 2 on the multiples of n - 1 singled out by the parity of n.
std::int64_t betti_number(int n, int k);

/// Coefficients of the closed-form Poincare series, expanded by exact integer
/// long division of numerator by denominator.
BettiTable poincare_coefficients(int n, int max_degree);

/// Rule-based table, degree by degree.
BettiTable betti_table(int n, int max_degree);

/// lim_{N -> inf} (1/N) sum_{j <= N} (-1)^j b_j, read off one period of the
/// eventually periodic rank pattern.
Rational average_euler_number(int n);

/// Alternating sum of b_k over one full period [start, start + 2(n - 1)).
/// start must lie in the periodic range (start >= n).
std::int64_t period_alternating_sum(int n, int start);

}  // namespace closedgeo
