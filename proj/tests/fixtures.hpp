#pragma once

// Shared fixtures and independent oracles for the test suites. Nothing here
// calls into the Bott engine; the oracles work from the raw profile data.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "closedgeo/profile.hpp"
#include "closedgeo/rational.hpp"

namespace closedgeo::testing {

/// n = 4, I = (3,2,1,2), t = (10/97, 13/97, 31/97), N = (1,1,1).
inline IndexProfile running_profile()
{
    return make_profile(4, {3, 2, 1, 2}, {Rational(10, 97), Rational(13, 97), Rational(31, 97)}, {1, 1, 1});
}

/// n = 3, I = (2,2,2), t = (1/5, 2/5), N = (1,1).
inline IndexProfile flat_profile()
{
    return make_profile(3, {2, 2, 2}, {Rational(1, 5), Rational(2, 5)}, {1, 1});
}

inline IndexProfile constant_profile(int n, std::int64_t d) { return make_profile(n, {d}, {}, {}); }

/// Brute-force Bott sum: visit all m roots of unity e(k/m), fold k/m onto
/// [0, 1/2] and find the arc by a linear scan. Returns nullopt on a collision.
inline std::optional<std::int64_t> brute_force_index(const IndexProfile& p, std::int64_t m)
{
    std::int64_t total = 0;
    for (std::int64_t k = 0; k < m; ++k) {
        Rational x(k, m);
        if (x > Rational(1, 2))
            x = Rational(1) - x;
        std::size_t arc = 0;
        for (std::size_t j = 0; j < p.phases.size(); ++j) {
            if (p.phases[j] == x)
                return std::nullopt;
            if (p.phases[j] < x)
                arc = j + 1;
        }
        total += p.arc_values[arc];
    }
    return total;
}

/// Brute-force evaluation at t in [0, 1/2] by linear scan.
inline std::optional<std::int64_t> brute_force_evaluate(const IndexProfile& p, const Rational& t)
{
    std::size_t arc = 0;
    for (std::size_t j = 0; j < p.phases.size(); ++j) {
        if (p.phases[j] == t)
            return std::nullopt;
        if (p.phases[j] < t)
            arc = j + 1;
    }
    return p.arc_values[arc];
}

/// Integral of the index function over the whole circle [0, 1), summing the
/// unfolded arcs (0, t_1), ..., (t_l, 1 - t_l), ..., (1 - t_1, 1).
inline Rational circle_integral(const IndexProfile& p)
{
    std::vector<Rational> cuts{Rational(0)};
    for (const auto& t : p.phases)
        cuts.push_back(t);
    for (auto it = p.phases.rbegin(); it != p.phases.rend(); ++it)
        cuts.push_back(Rational(1) - *it);
    cuts.push_back(Rational(1));
    const std::size_t l = p.phases.size();
    Rational total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const std::size_t arc = i <= l ? i : 2 * l - i;
        total += Rational(p.arc_values[arc]) * (cuts[i + 1] - cuts[i]);
    }
    return total;
}

inline const std::vector<std::int64_t>& primes_above_500()
{
    static const std::vector<std::int64_t> primes{503, 509, 521, 523, 541, 547, 557, 563, 569, 571,
                                                  577, 587, 593, 599, 601, 607, 613, 617, 619, 631};
    return primes;
}

/// Random structurally valid profile with 3 <= n <= 8 and phases over a
/// random prime above 500, so every m <= 500 is collision-free.
inline IndexProfile random_profile(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dim(3, 8);
    const int n = dim(rng);
    std::uniform_int_distribution<int> count(0, n - 1);
    const int l = count(rng);

    std::vector<std::int64_t> nullities;
    std::int64_t budget = n - 1;
    for (int j = 0; j < l; ++j) {
        const std::int64_t max_here = budget - (l - j - 1);
        std::uniform_int_distribution<std::int64_t> nd(1, std::max<std::int64_t>(1, std::min<std::int64_t>(max_here, 3)));
        nullities.push_back(nd(rng));
        budget -= nullities.back();
    }

    std::uniform_int_distribution<std::int64_t> start(0, 2 * (n - 1));
    std::vector<std::int64_t> arcs{start(rng)};
    for (int j = 0; j < l; ++j) {
        std::uniform_int_distribution<std::int64_t> step(-nullities[static_cast<std::size_t>(j)],
                                                         nullities[static_cast<std::size_t>(j)]);
        arcs.push_back(std::max<std::int64_t>(0, arcs.back() + step(rng)));
    }

    const auto& primes = primes_above_500();
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    const std::int64_t q = primes[pick(rng)];
    std::uniform_int_distribution<std::int64_t> num(1, (q - 1) / 2);
    std::vector<std::int64_t> nums;
    while (nums.size() < static_cast<std::size_t>(l)) {
        const auto v = num(rng);
        if (std::find(nums.begin(), nums.end(), v) == nums.end())
            nums.push_back(v);
    }
    std::sort(nums.begin(), nums.end());
    std::vector<Rational> phases;
    for (auto v : nums)
        phases.emplace_back(v, q);
    return make_profile(n, arcs, phases, nullities);
}

}  // namespace closedgeo::testing
