#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "closedgeo/rational.hpp"

namespace closedgeo {

/// One-sided jumps (S+, S-) of the index function at a unit-circle eigenvalue.
struct SplittingPair {
    std::int64_t plus = 0;
    std::int64_t minus = 0;

    friend bool operator==(const SplittingPair&, const SplittingPair&) = default;
};

/// Spectral fingerprint of a closed geodesic on an n-manifold.
///
/// The index function I(e^{2 pi i t}) is piecewise constant on [0, 1/2]:
/// arc_values[0] on [0, t_1), arc_values[j] on (t_j, t_{j+1}) and
/// arc_values[l] on (t_l, 1/2]. Conjugation symmetry extends it to the circle.
/// The struct may hold invalid data; validate_profile() reports what is wrong
/// and make_profile() refuses to build one.
struct IndexProfile {
    int n = 0;
    std::vector<std::int64_t> arc_values;
    std::vector<Rational> phases;
    std::vector<std::int64_t> nullities;
    std::optional<std::vector<SplittingPair>> splitting;

    std::size_t arc_count() const noexcept { return phases.size(); }
    std::int64_t first_arc() const { return arc_values.front(); }
    std::int64_t last_arc() const { return arc_values.back(); }

    friend bool operator==(const IndexProfile&, const IndexProfile&) = default;
};

enum class ViolationKind {
    DimensionTooSmall,
    ArcPhaseLengthMismatch,
    NullityLengthMismatch,
    SplittingLengthMismatch,
    TooManyPhases,
    PhaseOutOfRange,
    PhasesNotIncreasing,
    NegativeArcValue,
    NonPositiveNullity,
    NullitySumExceeded,
    JumpExceedsNullity,
    SplittingOutOfRange,
    SplittingMismatch,
};

struct Violation {
    ViolationKind kind;
    std::optional<std::size_t> index;  // 1-based position the violation refers to
    std::string message;
};

std::string to_string(ViolationKind kind);

/// Every violated structural invariant, in a fixed order. Empty means valid.
std::vector<Violation> validate_profile(const IndexProfile& p);

/// Same checks with the phase conditions left out; used for phase-free
/// signatures, whose `phases` vector is ignored.
std::vector<Violation> validate_skeleton(int n, const std::vector<std::int64_t>& arc_values,
                                         const std::vector<std::int64_t>& nullities);

/// Builds a profile, throwing InvalidProfile with the first violation.
IndexProfile make_profile(int n, std::vector<std::int64_t> arc_values, std::vector<Rational> phases,
                          std::vector<std::int64_t> nullities,
                          std::optional<std::vector<SplittingPair>> splitting = std::nullopt);

}  // namespace closedgeo
