#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "closedgeo/homology.hpp"
#include "closedgeo/profile.hpp"
#include "closedgeo/rational.hpp"

namespace closedgeo {

/// dim of the S^1-critical group of c^m in degree k: 1 iff k = ind(c^m) and
/// (m is even or |gamma| = 1).
int critical_group_dim(const IndexProfile& p, std::int64_t m, std::int64_t k);

/// Last iterate that can reach degree max_degree: ceil((K + n - 1) / alpha).
std::int64_t aggregate_cutoff(const IndexProfile& p, std::int64_t max_degree);

/// w_0 .. w_K, counting over every iterate up to aggregate_cutoff().
std::vector<std::int64_t> aggregate_w(const IndexProfile& p, std::int64_t max_degree);

struct MorseReport {
    std::int64_t max_degree = 0;
    std::vector<std::int64_t> w;
    std::vector<std::int64_t> b;
    std::vector<std::int64_t> q;
    bool feasible = true;
    std::optional<std::int64_t> first_violation;
    /// Feasible inside the window but q_K != 0, so degrees beyond K decide.
    bool tail_open = false;
};

/// q_k = w_k - b_k - q_{k-1}, q_{-1} = 0; feasible iff no q_k is negative.
MorseReport morse_q_recursion(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& b);

/// The value (-1)^{n-1} alpha / gamma must take when one geometric closed
/// geodesic is all there is: the reciprocal of (-1)^{n-1} B(n, 1).
Rational average_relation_ratio(int n);

}  // namespace closedgeo
