#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "closedgeo/bott.hpp"
#include "closedgeo/profile.hpp"
#include "closedgeo/rational.hpp"

namespace closedgeo {

/// Phase-free integer skeleton of an index profile.
struct Signature {
    int n = 0;
    std::vector<std::int64_t> arc_values;
    std::vector<std::int64_t> nullities;

    friend bool operator==(const Signature&, const Signature&) = default;
    friend auto operator<=>(const Signature&, const Signature&) = default;
};

Signature signature_of(const IndexProfile& p);

/// Steps of the single-geodesic contradiction pipeline, in the order they run.
/// PhaseInfeasible is reported by the theorem driver when no admissible phase
/// vector realizes the required average index.
enum class Step {
    IndexOfPrime,
    SecondIterate,
    AverageRelation,
    Prop33Hypotheses,
    MorseFeasibility,
    GapBound,
    JumpClash,
    PhaseInfeasible,
};

inline constexpr std::array<Step, 8> all_steps = {
    Step::IndexOfPrime,     Step::SecondIterate, Step::AverageRelation, Step::Prop33Hypotheses,
    Step::MorseFeasibility, Step::GapBound,      Step::JumpClash,       Step::PhaseInfeasible,
};

std::string to_string(Step step);

using Witness = std::vector<std::pair<std::string, Rational>>;

/// Looks a witness entry up by name; throws std::out_of_range if absent.
const Rational& witness_value(const Witness& w, const std::string& name);

struct ContradictionReport {
    Signature signature;
    std::optional<IndexProfile> profile;  // absent when no phases were ever chosen
    Step failed_step = Step::IndexOfPrime;
    Witness witness;
    std::string detail;
};

struct ConsistentUpToHorizon {
    IndexProfile profile;
    std::int64_t horizon = 0;
};

using PipelineOutcome = std::variant<ContradictionReport, ConsistentUpToHorizon>;

/// The staircase profile I = (n-1, n-2, ..., 1, 2) with unit nullities.
IndexProfile extremal_profile(int n, const std::vector<Rational>& phases);

enum class Prop33Status { HypothesesNotMet, Checked };

struct Prop33Report {
    Prop33Status status = Prop33Status::HypothesesNotMet;
    // hypotheses
    bool index_is_n_minus_1 = false;
    bool second_index_at_least_n = false;
    bool alpha_below_two_gamma = false;
    // conclusions; meaningful only when status == Checked
    bool gamma_sign = false;        // gamma = (-1)^{n-1}
    bool alpha_above_one = false;
    bool second_index_is_n_plus_1 = false;
    bool staircase = false;         // I_1 = n-1 > ... > I_l = 1, I_{l+1} = 2
    bool monotone = false;          // ind(c^{m+1}) >= ind(c^m) for m + 1 <= horizon
    std::int64_t horizon = 0;
    std::optional<std::int64_t> first_descent;  // m with ind(c^{m+1}) < ind(c^m)

    bool conclusion_a() const { return gamma_sign && alpha_above_one && second_index_is_n_plus_1; }
    bool conclusion_b() const { return staircase; }
    bool conclusion_c() const { return monotone; }
    bool passed() const { return status == Prop33Status::Checked && conclusion_a() && staircase && monotone; }
};

/// Checks the hypotheses ind(c) = n-1, ind(c^2) >= n, alpha < 2|gamma| and,
/// when they hold, the three conclusions. Monotonicity is scanned up to
/// `horizon`, by default the largest collision-free iterate (capped at 10^4).
Prop33Report check_prop33(const IndexProfile& p, std::optional<std::int64_t> horizon = std::nullopt);

/// Runs the contradiction steps in order and stops at the first failure.
/// Requires a valid profile of dimension n >= 3, a positive average index and
/// phase denominators above 2 * horizon + 1.
PipelineOutcome single_geodesic_pipeline(int n, const IndexProfile& p, std::int64_t horizon);

/// The last two pipeline steps on their own. gap_bound_step looks for
/// ind(c^{m+2}) - ind(c^m) > 4 with m + 2 <= horizon; jump_clash_step (n >= 4)
/// looks for k <= horizon with ind(c^{2k+1}) - ind(c^{2k-1}) = 2 ind(c).
/// The latter inherits the preconditions of jump_search.
std::optional<ContradictionReport> gap_bound_step(const IndexProfile& p, std::int64_t horizon);
std::optional<ContradictionReport> jump_clash_step(const IndexProfile& p, std::int64_t horizon);

/// Phase-free part of the pipeline (steps 1 and 2), shared with the driver.
std::optional<ContradictionReport> phase_free_steps(const Signature& s);

/// Calls `visit` for every structurally valid signature with l <= n-1 and arc
/// values in [0, 2(n-1)], ordered by l, then nullities, then arc values
/// (both lexicographically).
void for_each_signature(int n, const std::function<void(const Signature&)>& visit);
std::vector<Signature> enumerate_signatures(int n);

struct PhaseInfeasible {
    std::string reason;
    Witness witness;
};

using PhaseInstantiation = std::variant<IndexProfile, PhaseInfeasible>;

/// Finds phases 0 < t_1 < ... < t_l < 1/2 whose reduced denominators are all
/// multiples of the prime q and whose average index is exactly alpha_target,
/// or certifies that none exist.
PhaseInstantiation phase_instantiate(const Signature& s, const Rational& alpha_target, std::int64_t q);

bool is_prime(std::int64_t q);

/// Average index forced on a lone geometric closed geodesic by its gamma
/// invariant; non-positive when the gamma sign is inadmissible.
Rational required_average_index(int n, const GammaInvariant& gamma);

struct CandidateResult {
    Signature signature;
    PipelineOutcome outcome;
};

/// One signature through the driver: phase-free steps, phase instantiation at
/// the required average index, then the full pipeline.
PipelineOutcome evaluate_candidate(const Signature& s, std::int64_t horizon, std::int64_t q);

struct TheoremSummary {
    int n = 0;
    std::int64_t horizon = 0;
    std::int64_t q = 0;
    std::int64_t candidates = 0;
    std::int64_t contradicted = 0;
    std::map<Step, std::int64_t> by_step;
    std::vector<ConsistentUpToHorizon> survivors;

    bool passed() const { return survivors.empty() && contradicted == candidates; }
};

/// Exhaustive run over enumerate_signatures(n). The signature list is split
/// across `threads` workers; the summary does not depend on the split.
TheoremSummary verify_theorem(int n, std::int64_t horizon, std::int64_t q, unsigned threads = 1,
                              std::vector<CandidateResult>* details = nullptr);

}  // namespace closedgeo
