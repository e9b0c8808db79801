#include "closedgeo/profile.hpp"

#include <cstdlib>

#include "closedgeo/errors.hpp"

namespace closedgeo {

std::string to_string(ViolationKind kind)
{
    switch (kind) {
    case ViolationKind::DimensionTooSmall: return "dimension-too-small";
    case ViolationKind::ArcPhaseLengthMismatch: return "arc-phase-length-mismatch";
    case ViolationKind::NullityLengthMismatch: return "nullity-length-mismatch";
    case ViolationKind::SplittingLengthMismatch: return "splitting-length-mismatch";
    case ViolationKind::TooManyPhases: return "too-many-phases";
    case ViolationKind::PhaseOutOfRange: return "phase-out-of-range";
    case ViolationKind::PhasesNotIncreasing: return "phases-not-increasing";
    case ViolationKind::NegativeArcValue: return "negative-arc-value";
    case ViolationKind::NonPositiveNullity: return "non-positive-nullity";
    case ViolationKind::NullitySumExceeded: return "nullity-sum-exceeded";
    case ViolationKind::JumpExceedsNullity: return "jump-exceeds-nullity";
    case ViolationKind::SplittingOutOfRange: return "splitting-out-of-range";
    case ViolationKind::SplittingMismatch: return "splitting-mismatch";
    }
    return "unknown";
}

namespace {

void check_skeleton(int n, const std::vector<std::int64_t>& arcs, const std::vector<std::int64_t>& nullities,
                    std::size_t phase_count, std::vector<Violation>& out)
{
    auto add = [&](ViolationKind kind, std::optional<std::size_t> index, std::string msg) {
        out.push_back({kind, index, std::move(msg)});
    };

    if (n < 2)
        add(ViolationKind::DimensionTooSmall, std::nullopt, "dimension n = " + std::to_string(n) + " is below 2");
    if (arcs.size() != phase_count + 1) {
        add(ViolationKind::ArcPhaseLengthMismatch, std::nullopt,
            "arc/phase length mismatch: " + std::to_string(arcs.size()) + " arc values for " +
                std::to_string(phase_count) + " phases");
    }
    if (nullities.size() != phase_count) {
        add(ViolationKind::NullityLengthMismatch, std::nullopt,
            "nullity/phase length mismatch: " + std::to_string(nullities.size()) + " nullities for " +
                std::to_string(phase_count) + " phases");
    }
    if (n >= 2 && phase_count > static_cast<std::size_t>(n - 1)) {
        add(ViolationKind::TooManyPhases, std::nullopt,
            "too many phases: l = " + std::to_string(phase_count) + " exceeds n - 1 = " + std::to_string(n - 1));
    }
    for (std::size_t j = 0; j < arcs.size(); ++j) {
        if (arcs[j] < 0)
            add(ViolationKind::NegativeArcValue, j + 1, "arc value I_" + std::to_string(j + 1) + " is negative");
    }
    std::int64_t total = 0;
    for (std::size_t j = 0; j < nullities.size(); ++j) {
        if (nullities[j] < 1)
            add(ViolationKind::NonPositiveNullity, j + 1, "nullity N_" + std::to_string(j + 1) + " is not positive");
        total += nullities[j];
    }
    if (n >= 2 && total > n - 1) {
        add(ViolationKind::NullitySumExceeded, std::nullopt,
            "nullity sum " + std::to_string(total) + " exceeds n - 1 = " + std::to_string(n - 1));
    }
    if (arcs.size() == nullities.size() + 1) {
        for (std::size_t j = 0; j < nullities.size(); ++j) {
            std::int64_t jump = std::llabs(arcs[j] - arcs[j + 1]);
            if (jump > nullities[j]) {
                add(ViolationKind::JumpExceedsNullity, j + 1,
                    "|I_" + std::to_string(j + 1) + " - I_" + std::to_string(j + 2) + "| = " + std::to_string(jump) +
                        " exceeds N_" + std::to_string(j + 1) + " = " + std::to_string(nullities[j]));
            }
        }
    }
}

}  // namespace

std::vector<Violation> validate_skeleton(int n, const std::vector<std::int64_t>& arc_values,
                                         const std::vector<std::int64_t>& nullities)
{
    std::vector<Violation> out;
    check_skeleton(n, arc_values, nullities, nullities.size(), out);
    return out;
}

std::vector<Violation> validate_profile(const IndexProfile& p)
{
    std::vector<Violation> out;
    check_skeleton(p.n, p.arc_values, p.nullities, p.phases.size(), out);

    const Rational half(1, 2);
    for (std::size_t j = 0; j < p.phases.size(); ++j) {
        if (p.phases[j] <= Rational(0) || p.phases[j] >= half) {
            out.push_back({ViolationKind::PhaseOutOfRange, j + 1,
                           "phase t_" + std::to_string(j + 1) + " = " + p.phases[j].str() + " is outside (0, 1/2)"});
        }
        if (j > 0 && p.phases[j - 1] >= p.phases[j]) {
            out.push_back({ViolationKind::PhasesNotIncreasing, j + 1,
                           "phases not strictly increasing at t_" + std::to_string(j + 1)});
        }
    }

    if (p.splitting) {
        const auto& s = *p.splitting;
        if (s.size() != p.phases.size()) {
            out.push_back({ViolationKind::SplittingLengthMismatch, std::nullopt,
                           "splitting/phase length mismatch: " + std::to_string(s.size()) + " pairs for " +
                               std::to_string(p.phases.size()) + " phases"});
        } else if (p.nullities.size() == s.size() && p.arc_values.size() == s.size() + 1) {
            for (std::size_t j = 0; j < s.size(); ++j) {
                const auto N = p.nullities[j];
                if (s[j].plus < 0 || s[j].minus < 0 || s[j].plus > N || s[j].minus > N) {
                    out.push_back({ViolationKind::SplittingOutOfRange, j + 1,
                                   "splitting numbers at z_" + std::to_string(j + 1) + " are outside [0, N_" +
                                       std::to_string(j + 1) + "]"});
                }
                if (s[j].minus - s[j].plus != p.arc_values[j] - p.arc_values[j + 1]) {
                    out.push_back({ViolationKind::SplittingMismatch, j + 1,
                                   "S- - S+ at z_" + std::to_string(j + 1) + " differs from I_" +
                                       std::to_string(j + 1) + " - I_" + std::to_string(j + 2)});
                }
            }
        }
    }
    return out;
}

IndexProfile make_profile(int n, std::vector<std::int64_t> arc_values, std::vector<Rational> phases,
                          std::vector<std::int64_t> nullities, std::optional<std::vector<SplittingPair>> splitting)
{
    IndexProfile p{n, std::move(arc_values), std::move(phases), std::move(nullities), std::move(splitting)};
    auto violations = validate_profile(p);
    if (!violations.empty())
        throw InvalidProfile(violations.front().message);
    return p;
}

}  // namespace closedgeo
