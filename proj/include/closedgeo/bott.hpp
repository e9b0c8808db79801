#pragma once

#include <cstdint>
#include <vector>

#include "closedgeo/profile.hpp"
#include "closedgeo/rational.hpp"

namespace closedgeo {

/// Value of the index function at e^{2 pi i t}, t in [0, 1/2].
/// Throws PhaseCollision if t is one of the stored phases.
std::int64_t evaluate_index_function(const IndexProfile& p, const Rational& t);

struct ArcHit {
    Rational phase;  // evaluation point j/m folded into [0, 1/2]
    std::size_t arc; // 1-based arc id
    friend bool operator==(const ArcHit&, const ArcHit&) = default;
};

struct IterateIndexReport {
    std::int64_t m = 0;
    std::int64_t index = 0;
    /// Phase 0, every j/m with 1 <= j < m/2 and, for even m, 1/2. Interior
    /// hits stand for a conjugate pair of roots of unity.
    std::vector<ArcHit> arc_hits;
    std::int64_t even_contribution = 0;  // I(-1) when m is even, else 0
};

/// Bott's iteration formula: ind(c^m) as the sum of I over the m-th roots of unity.
IterateIndexReport iterate_index(const IndexProfile& p, std::int64_t m);

/// ind(c^m) without building the report.
std::int64_t bott_index(const IndexProfile& p, std::int64_t m);

/// ind(c^1), ..., ind(c^max_m).
std::vector<std::int64_t> index_sequence(const IndexProfile& p, std::int64_t max_m);

/// Mean of the index function over the circle.
Rational average_index(const IndexProfile& p);

/// The invariant in {+-1/2, +-1}: positive iff ind(c) is even, of unit size
/// iff ind(c^2) - ind(c) is even.
struct GammaInvariant {
    int sign = 1;
    bool unit = true;

    Rational value() const { return unit ? Rational(sign) : Rational(sign, 2); }
    friend bool operator==(const GammaInvariant&, const GammaInvariant&) = default;
};

GammaInvariant gamma_from_indices(std::int64_t ind1, std::int64_t ind2);
GammaInvariant gamma_invariant(const IndexProfile& p);

/// ind(c^{m+1}) - ind(c^m) = A_m + B_m for profiles with I(-1) = 2.
struct GapDecomposition {
    std::int64_t a = 0;
    std::int64_t b = 0;
    /// integers p < m/2 with p/(m+1) < t_l < p/m; at most one element
    std::vector<std::int64_t> j_set;
};

GapDecomposition gap_decomposition(const IndexProfile& p, std::int64_t m);

/// Every k <= horizon with ind(c^{2k+1}) - ind(c^{2k-1}) = 2 ind(c).
/// Requires a positive average index and all phase denominators above
/// 2 * horizon + 1.
std::vector<std::int64_t> jump_search(const IndexProfile& p, std::int64_t horizon);

/// True iff the total variation of the arc values reaches n - 1.
bool classify_elliptic_extremal(const IndexProfile& p);

/// Smallest reduced phase denominator, or 0 for a profile without phases.
std::int64_t min_phase_denominator(const IndexProfile& p);

}  // namespace closedgeo
