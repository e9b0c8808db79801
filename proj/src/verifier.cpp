#include "closedgeo/verifier.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <stdexcept>
#include <thread>

#include "closedgeo/errors.hpp"
#include "closedgeo/homology.hpp"
#include "closedgeo/morse.hpp"

namespace closedgeo {

namespace {

Rational sign_of_dimension(int n) { return (n - 1) % 2 == 0 ? Rational(1) : Rational(-1); }

Rational flag(bool b) { return Rational(b ? 1 : 0); }

ContradictionReport make_report(Signature s, std::optional<IndexProfile> p, Step step, Witness w, std::string detail)
{
    return ContradictionReport{std::move(s), std::move(p), step, std::move(w), std::move(detail)};
}

Rational alpha_of(const std::vector<std::int64_t>& arcs, const std::vector<Rational>& phases)
{
    IndexProfile tmp;
    tmp.arc_values = arcs;
    tmp.phases = phases;
    return average_index(tmp);
}

bool q_divides_denominators(const std::vector<Rational>& phases, std::int64_t q)
{
    return std::all_of(phases.begin(), phases.end(), [q](const Rational& t) { return t.den() % q == 0; });
}

bool strictly_inside(const std::vector<Rational>& phases)
{
    Rational prev(0);
    for (const auto& t : phases) {
        if (t <= prev)
            return false;
        prev = t;
    }
    return prev < Rational(1, 2);
}

Rational min_gap(const std::vector<Rational>& phases)
{
    Rational best(1, 2);
    Rational prev(0);
    for (const auto& t : phases) {
        best = std::min(best, t - prev);
        prev = t;
    }
    return std::min(best, Rational(1, 2) - prev);
}

// Interior point of the open simplex 0 < t_1 < ... < t_l < 1/2 with average
// index `target`. The simplex vertex with the first r phases at 0 and the rest
// at 1/2 has average index I_{r+1}; the point is a convex combination of all
// l + 1 vertices with positive weights.
std::vector<Rational> interior_point(const std::vector<std::int64_t>& arcs, const Rational& target)
{
    const std::size_t vertices = arcs.size();
    const auto lo_it = std::min_element(arcs.begin(), arcs.end());
    const auto hi_it = std::max_element(arcs.begin(), arcs.end());
    const auto a = static_cast<std::size_t>(lo_it - arcs.begin());
    const auto b = static_cast<std::size_t>(hi_it - arcs.begin());
    const Rational va(*lo_it);
    const Rational vb(*hi_it);

    Rational total;
    for (auto v : arcs)
        total += Rational(v);

    Rational eps(1, 2 * static_cast<std::int64_t>(vertices));
    Rational mu_a, mu_b;
    for (;;) {
        const Rational rest = Rational(1) - Rational(static_cast<std::int64_t>(vertices)) * eps;
        mu_b = (target - eps * total - rest * va) / (vb - va);
        mu_a = rest - mu_b;
        if (mu_a >= Rational(0) && mu_b >= Rational(0))
            break;
        eps /= Rational(2);
    }

    std::vector<Rational> weights(vertices, eps);
    weights[a] += mu_a;
    weights[b] += mu_b;

    std::vector<Rational> phases;
    Rational acc;
    for (std::size_t j = 0; j + 1 < vertices; ++j) {
        acc += weights[j];
        phases.push_back(acc / Rational(2));
    }
    return phases;
}

// Shifts phases by multiples of 1/(q s) so that every reduced denominator picks
// up the factor q. Shifts on jump-carrying phases are balanced against the
// pivot so the average index does not move.
std::vector<Rational> perturb_into_q(const std::vector<std::int64_t>& arcs, std::vector<Rational> phases,
                                     std::int64_t q)
{
    const std::size_t l = phases.size();
    std::vector<std::int64_t> jumps(l);
    for (std::size_t j = 0; j < l; ++j)
        jumps[j] = arcs[j] - arcs[j + 1];

    std::size_t pivot = l;
    for (std::size_t j = 0; j < l; ++j) {
        if (jumps[j] != 0 && (pivot == l || std::llabs(jumps[j]) > std::llabs(jumps[pivot])))
            pivot = j;
    }

    std::vector<std::int64_t> mult(l, 1);
    std::int64_t pivot_shift = 0;
    if (pivot != l) {
        for (std::size_t j = 0; j < l; ++j)
            if (j != pivot)
                pivot_shift += jumps[j] * mult[j];
        if (pivot_shift == 0) {
            for (std::size_t j = 0; j < l; ++j) {
                if (j != pivot && jumps[j] != 0) {
                    mult[j] = 2;
                    pivot_shift += jumps[j];
                    break;
                }
            }
        }
    }

    std::vector<std::int64_t> shift(l, 0);
    for (std::size_t j = 0; j < l; ++j) {
        if (j == pivot)
            shift[j] = -pivot_shift;
        else if (pivot != l && jumps[j] != 0)
            shift[j] = jumps[pivot] * mult[j];
        else
            shift[j] = mult[j];
    }
    std::int64_t largest = 1;
    for (auto s : shift)
        largest = std::max<std::int64_t>(largest, std::llabs(s));

    const Rational gap = min_gap(phases);
    std::int64_t scale = 1;
    while (Rational(largest, q * scale) * Rational(3) >= gap)
        scale *= 2;

    for (std::size_t j = 0; j < l; ++j)
        phases[j] += Rational(shift[j], q * scale);
    return phases;
}

}  // namespace

Signature signature_of(const IndexProfile& p) { return Signature{p.n, p.arc_values, p.nullities}; }

std::string to_string(Step step)
{
    switch (step) {
    case Step::IndexOfPrime: return "index-of-prime";
    case Step::SecondIterate: return "second-iterate";
    case Step::AverageRelation: return "average-relation";
    case Step::Prop33Hypotheses: return "prop33-hypotheses";
    case Step::MorseFeasibility: return "morse-feasibility";
    case Step::GapBound: return "gap-bound";
    case Step::JumpClash: return "jump-clash";
    case Step::PhaseInfeasible: return "phase-infeasible";
    }
    return "unknown";
}

const Rational& witness_value(const Witness& w, const std::string& name)
{
    for (const auto& [key, value] : w)
        if (key == name)
            return value;
    throw std::out_of_range("witness has no entry \"" + name + "\"");
}

IndexProfile extremal_profile(int n, const std::vector<Rational>& phases)
{
    if (n < 2)
        throw PrecondViolation("extremal profile needs n >= 2");
    if (phases.size() != static_cast<std::size_t>(n - 1))
        throw PrecondViolation("extremal profile needs exactly n - 1 phases");
    if (!strictly_inside(phases))
        throw PrecondViolation("phases must be strictly increasing inside (0, 1/2)");
    std::vector<std::int64_t> arcs;
    for (int v = n - 1; v >= 1; --v)
        arcs.push_back(v);
    arcs.push_back(2);
    return make_profile(n, std::move(arcs), phases, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 1));
}

Prop33Report check_prop33(const IndexProfile& p, std::optional<std::int64_t> horizon)
{
    if (!validate_profile(p).empty())
        throw PrecondViolation("prop33 check needs a valid profile");

    Prop33Report r;
    const int n = p.n;
    const std::int64_t ind1 = bott_index(p, 1);
    const std::int64_t ind2 = bott_index(p, 2);
    const Rational alpha = average_index(p);
    const GammaInvariant gamma = gamma_from_indices(ind1, ind2);

    r.index_is_n_minus_1 = ind1 == n - 1;
    r.second_index_at_least_n = ind2 >= n;
    r.alpha_below_two_gamma = alpha < Rational(2) * abs(gamma.value());
    if (!(r.index_is_n_minus_1 && r.second_index_at_least_n && r.alpha_below_two_gamma))
        return r;

    r.status = Prop33Status::Checked;
    r.gamma_sign = gamma.value() == sign_of_dimension(n);
    r.alpha_above_one = alpha > Rational(1);
    r.second_index_is_n_plus_1 = ind2 == n + 1;

    const auto& I = p.arc_values;
    const std::size_t l = p.phases.size();
    bool stair = l >= 1 && I[0] == n - 1 && I[l - 1] == 1 && I[l] == 2;
    for (std::size_t j = 0; stair && j + 1 < l; ++j)
        stair = I[j] > I[j + 1];
    r.staircase = stair;

    std::int64_t h = 10000;
    if (horizon) {
        h = *horizon;
    } else if (const auto den = min_phase_denominator(p); den != 0) {
        h = std::min<std::int64_t>(h, den - 1);
    }
    r.horizon = h;
    r.monotone = true;
    std::int64_t prev = ind1;
    for (std::int64_t m = 2; m <= h; ++m) {
        const std::int64_t cur = bott_index(p, m);
        if (cur < prev) {
            r.monotone = false;
            r.first_descent = m - 1;
            break;
        }
        prev = cur;
    }
    return r;
}

std::optional<ContradictionReport> phase_free_steps(const Signature& s)
{
    const int n = s.n;
    const std::int64_t ind1 = s.arc_values.front();
    if (ind1 != n - 1) {
        return make_report(s, std::nullopt, Step::IndexOfPrime,
                           {{"ind_c", Rational(ind1)}, {"required", Rational(n - 1)}},
                           "b_k vanishes below n - 1 and b_{n-1} = 1, so ind(c) must be n - 1");
    }
    const std::int64_t ind2 = ind1 + s.arc_values.back();
    if (ind2 < n) {
        // ind(c^2) = ind(c) makes gamma a unit, so both c and c^2 count in degree n - 1
        return make_report(s, std::nullopt, Step::SecondIterate,
                           {{"ind_c", Rational(ind1)},
                            {"ind_c2", Rational(ind2)},
                            {"w_lower_bound", Rational(2)},
                            {"b", Rational(betti_number(n, n - 1))}},
                           "c and c^2 both contribute to w_{n-1}, exceeding b_{n-1} = 1");
    }
    return std::nullopt;
}

std::optional<ContradictionReport> gap_bound_step(const IndexProfile& p, std::int64_t horizon)
{
    // consecutive differences in {0, 2} give two-step gaps <= 4
    const Signature sig = signature_of(p);
    const auto seq = index_sequence(p, horizon);
    for (std::int64_t m = 1; m + 2 <= horizon; ++m) {
        const auto lo = seq[static_cast<std::size_t>(m - 1)];
        const auto hi = seq[static_cast<std::size_t>(m + 1)];
        if (hi - lo > 4) {
            return make_report(sig, p, Step::GapBound,
                               {{"m", Rational(m)},
                                {"ind_m", Rational(lo)},
                                {"ind_m_plus_2", Rational(hi)},
                                {"bound", Rational(4)}},
                               "ind(c^{m+2}) - ind(c^m) exceeds 4");
        }
    }
    return std::nullopt;
}

std::optional<ContradictionReport> jump_clash_step(const IndexProfile& p, std::int64_t horizon)
{
    // a common index jump of 2 ind(c) = 2n - 2 >= 6 cannot fit under the gap bound
    if (p.n < 4)
        return std::nullopt;
    const auto ks = jump_search(p, horizon);
    if (ks.empty())
        return std::nullopt;
    const std::int64_t k = ks.front();
    const std::int64_t ind1 = bott_index(p, 1);
    return make_report(signature_of(p), p, Step::JumpClash,
                       {{"k", Rational(k)},
                        {"ind_2k_minus_1", Rational(bott_index(p, 2 * k - 1))},
                        {"ind_2k_plus_1", Rational(bott_index(p, 2 * k + 1))},
                        {"jump", Rational(2 * ind1)},
                        {"bound", Rational(4)}},
                       "common index jump of 2 ind(c) exceeds the two-step gap bound");
}

PipelineOutcome single_geodesic_pipeline(int n, const IndexProfile& p, std::int64_t horizon)
{
    if (n < 3)
        throw PrecondViolation("pipeline needs n >= 3");
    if (p.n != n)
        throw PrecondViolation("profile dimension differs from n");
    if (horizon < 1)
        throw PrecondViolation("horizon must be positive");
    if (auto v = validate_profile(p); !v.empty())
        throw PrecondViolation("invalid profile: " + v.front().message);
    const Rational alpha = average_index(p);
    if (alpha <= Rational(0))
        throw PrecondViolation("pipeline needs a positive average index");
    if (const auto den = min_phase_denominator(p); den != 0 && den <= 2 * horizon + 1) {
        throw PrecondViolation("phase denominator " + std::to_string(den) + " does not exceed 2 * horizon + 1 = " +
                               std::to_string(2 * horizon + 1));
    }

    const Signature sig = signature_of(p);
    if (auto r = phase_free_steps(sig)) {
        r->profile = p;
        return *r;
    }

    const std::int64_t ind1 = bott_index(p, 1);
    const std::int64_t ind2 = bott_index(p, 2);
    const GammaInvariant gamma = gamma_from_indices(ind1, ind2);

    // average-relation
    const Rational required = average_relation_ratio(n);
    const Rational ratio = sign_of_dimension(n) * alpha / gamma.value();
    if (ratio != required) {
        return make_report(sig, p, Step::AverageRelation,
                           {{"alpha", alpha}, {"gamma", gamma.value()}, {"ratio", ratio}, {"required", required}},
                           "(-1)^{n-1} alpha / gamma differs from the value forced by the Betti numbers");
    }

    // the average relation gives 1 <= alpha/|gamma| < 2, which puts the
    // profile under the staircase proposition
    const Prop33Report prop = check_prop33(p, horizon);
    if (!prop.passed()) {
        Witness w{{"hyp_index", flag(prop.index_is_n_minus_1)},
                  {"hyp_second_index", flag(prop.second_index_at_least_n)},
                  {"hyp_alpha", flag(prop.alpha_below_two_gamma)},
                  {"gamma_sign", flag(prop.gamma_sign)},
                  {"alpha_above_one", flag(prop.alpha_above_one)},
                  {"ind_c2_is_n_plus_1", flag(prop.second_index_is_n_plus_1)},
                  {"staircase", flag(prop.staircase)},
                  {"monotone", flag(prop.monotone)},
                  {"alpha", alpha}};
        if (prop.first_descent)
            w.emplace_back("first_descent", Rational(*prop.first_descent));
        return make_report(sig, p, Step::Prop33Hypotheses, std::move(w),
                           prop.status == Prop33Status::HypothesesNotMet
                               ? "staircase proposition hypotheses fail"
                               : "staircase proposition conclusion fails");
    }

    // morse-feasibility over the degrees every iterate m <= horizon can reach
    const std::int64_t window = std::max<std::int64_t>(0, (alpha * Rational(horizon)).floor() - (n - 1));
    const auto w = aggregate_w(p, window);
    const auto b = betti_table(n, static_cast<int>(window)).ranks;
    const MorseReport morse = morse_q_recursion(w, b);
    if (!morse.feasible || w != b) {
        std::size_t mismatch = 0;
        while (mismatch < w.size() && w[mismatch] == b[mismatch])
            ++mismatch;
        Witness wit{{"window", Rational(window)},
                    {"first_mismatch", Rational(static_cast<std::int64_t>(mismatch))},
                    {"w_at_mismatch", Rational(w[mismatch])},
                    {"b_at_mismatch", Rational(b[mismatch])}};
        if (morse.first_violation) {
            const auto k = static_cast<std::size_t>(*morse.first_violation);
            wit.emplace_back("first_violation", Rational(*morse.first_violation));
            wit.emplace_back("q_at_violation", Rational(morse.q[k]));
        }
        return make_report(sig, p, Step::MorseFeasibility, std::move(wit),
                           morse.feasible ? "w_k differs from b_k although q stays non-negative in the window"
                                          : "Morse recursion forces a negative q_k");
    }

    if (auto r = gap_bound_step(p, horizon))
        return *r;
    if (auto r = jump_clash_step(p, horizon))
        return *r;

    return ConsistentUpToHorizon{p, horizon};
}

void for_each_signature(int n, const std::function<void(const Signature&)>& visit)
{
    if (n < 3 || n > 8)
        throw PrecondViolation("signature enumeration supports 3 <= n <= 8");
    const std::int64_t cap = 2 * (n - 1);
    const std::int64_t budget = n - 1;

    for (std::int64_t l = 0; l <= n - 1; ++l) {
        std::vector<std::int64_t> nullities(static_cast<std::size_t>(l), 1);
        std::vector<std::int64_t> arcs(static_cast<std::size_t>(l) + 1, 0);

        // arc values for fixed nullities, depth-first in lexicographic order
        std::function<void(std::size_t)> fill_arcs = [&](std::size_t pos) {
            if (pos == arcs.size()) {
                visit(Signature{n, arcs, nullities});
                return;
            }
            std::int64_t lo = 0, hi = cap;
            if (pos > 0) {
                lo = std::max<std::int64_t>(0, arcs[pos - 1] - nullities[pos - 1]);
                hi = std::min<std::int64_t>(cap, arcs[pos - 1] + nullities[pos - 1]);
            }
            for (std::int64_t v = lo; v <= hi; ++v) {
                arcs[pos] = v;
                fill_arcs(pos + 1);
            }
        };

        // nullity vectors with positive entries and sum <= n - 1, lexicographic
        std::function<void(std::size_t, std::int64_t)> fill_nullities = [&](std::size_t pos, std::int64_t left) {
            if (pos == nullities.size()) {
                fill_arcs(0);
                return;
            }
            const auto remaining_slots = static_cast<std::int64_t>(nullities.size() - pos - 1);
            for (std::int64_t v = 1; v <= left - remaining_slots; ++v) {
                nullities[pos] = v;
                fill_nullities(pos + 1, left - v);
            }
        };
        fill_nullities(0, budget);
    }
}

std::vector<Signature> enumerate_signatures(int n)
{
    std::vector<Signature> out;
    for_each_signature(n, [&](const Signature& s) { out.push_back(s); });
    return out;
}

bool is_prime(std::int64_t q)
{
    if (q < 2)
        return false;
    for (std::int64_t d = 2; d * d <= q; ++d)
        if (q % d == 0)
            return false;
    return true;
}

PhaseInstantiation phase_instantiate(const Signature& s, const Rational& alpha_target, std::int64_t q)
{
    if (!is_prime(q))
        throw PrecondViolation(std::to_string(q) + " is not prime");
    if (auto v = validate_skeleton(s.n, s.arc_values, s.nullities); !v.empty())
        throw PrecondViolation("invalid signature: " + v.front().message);

    const auto& arcs = s.arc_values;
    const std::size_t l = s.nullities.size();
    const Rational lo(*std::min_element(arcs.begin(), arcs.end()));
    const Rational hi(*std::max_element(arcs.begin(), arcs.end()));

    auto infeasible = [&](std::string reason, Witness extra = {}) -> PhaseInstantiation {
        Witness w{{"alpha_target", alpha_target}, {"min_arc", lo}, {"max_arc", hi}};
        w.insert(w.end(), extra.begin(), extra.end());
        return PhaseInfeasible{std::move(reason), std::move(w)};
    };

    std::vector<Rational> phases;
    if (lo == hi) {
        if (alpha_target != lo)
            return infeasible("a constant index function has average index equal to its value");
        for (std::size_t j = 1; j <= l; ++j)
            phases.emplace_back(static_cast<std::int64_t>(j), 2 * static_cast<std::int64_t>(l + 1));
        phases = perturb_into_q(arcs, std::move(phases), q);
    } else {
        if (alpha_target <= lo || alpha_target >= hi)
            return infeasible("average index must lie strictly between the smallest and largest arc value");

        std::vector<std::size_t> carriers;
        for (std::size_t j = 0; j < l; ++j)
            if (arcs[j] != arcs[j + 1])
                carriers.push_back(j);

        if (carriers.size() == 1) {
            // alpha = I_{l+1} + 2 t_p (I_p - I_{p+1}) pins the one phase carrying a jump
            const std::size_t p = carriers.front();
            const Rational forced =
                (alpha_target - Rational(arcs.back())) / Rational(2 * (arcs[p] - arcs[p + 1]));
            if (forced.den() % q != 0) {
                return infeasible("the only jump-carrying phase is forced to a rational without the factor q",
                                  {{"jump_position", Rational(static_cast<std::int64_t>(p + 1))},
                                   {"forced_phase", forced}});
            }
            phases.resize(l);
            phases[p] = forced;
            for (std::size_t j = 0; j < p; ++j)
                phases[j] = forced * Rational(static_cast<std::int64_t>(j + 1), static_cast<std::int64_t>(p + 1));
            for (std::size_t j = p + 1; j < l; ++j)
                phases[j] = forced + (Rational(1, 2) - forced) * Rational(static_cast<std::int64_t>(j - p),
                                                                           static_cast<std::int64_t>(l - p));
            if (l > 1) {
                // only the jump-free phases move; the pivot already carries q
                std::vector<std::int64_t> flat(arcs.size(), arcs.front());
                auto moved = perturb_into_q(flat, phases, q);
                for (std::size_t j = 0; j < l; ++j)
                    if (j != p)
                        phases[j] = moved[j];
            }
        } else {
            phases = perturb_into_q(arcs, interior_point(arcs, alpha_target), q);
        }
    }

    if (!strictly_inside(phases) || !q_divides_denominators(phases, q) || alpha_of(arcs, phases) != alpha_target)
        throw std::runtime_error("could not place phases over the prime " + std::to_string(q));
    return make_profile(s.n, arcs, std::move(phases), s.nullities);
}

Rational required_average_index(int n, const GammaInvariant& gamma)
{
    return sign_of_dimension(n) * average_relation_ratio(n) * gamma.value();
}

PipelineOutcome evaluate_candidate(const Signature& s, std::int64_t horizon, std::int64_t q)
{
    if (auto r = phase_free_steps(s))
        return *r;

    const std::int64_t ind1 = s.arc_values.front();
    const GammaInvariant gamma = gamma_from_indices(ind1, ind1 + s.arc_values.back());
    const Rational target = required_average_index(s.n, gamma);
    if (target <= Rational(0)) {
        return make_report(s, std::nullopt, Step::PhaseInfeasible,
                           {{"alpha_target", target}, {"gamma", gamma.value()}},
                           "required average index is not positive");
    }

    auto inst = phase_instantiate(s, target, q);
    if (auto* bad = std::get_if<PhaseInfeasible>(&inst)) {
        bad->witness.emplace_back("gamma", gamma.value());
        return make_report(s, std::nullopt, Step::PhaseInfeasible, std::move(bad->witness), bad->reason);
    }
    return single_geodesic_pipeline(s.n, std::get<IndexProfile>(inst), horizon);
}

TheoremSummary verify_theorem(int n, std::int64_t horizon, std::int64_t q, unsigned threads,
                              std::vector<CandidateResult>* details)
{
    if (n < 3 || n > 8)
        throw PrecondViolation("verification supports 3 <= n <= 8");
    if (horizon < 1)
        throw PrecondViolation("horizon must be positive");
    if (!is_prime(q))
        throw PrecondViolation(std::to_string(q) + " is not prime");
    if (q <= 2 * horizon + 1)
        throw PrecondViolation("q must exceed 2 * horizon + 1 = " + std::to_string(2 * horizon + 1));

    const auto signatures = enumerate_signatures(n);
    std::vector<std::optional<PipelineOutcome>> outcomes(signatures.size());

    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(signatures.size())));
    std::vector<std::exception_ptr> errors(workers);
    auto work = [&](unsigned id) {
        try {
            for (std::size_t i = id; i < signatures.size(); i += workers)
                outcomes[i] = evaluate_candidate(signatures[i], horizon, q);
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned id = 0; id < workers; ++id)
            pool.emplace_back(work, id);
    }
    for (const auto& e : errors)
        if (e)
            std::rethrow_exception(e);

    TheoremSummary summary{n, horizon, q, static_cast<std::int64_t>(signatures.size()), 0, {}, {}};
    for (Step s : all_steps)
        summary.by_step[s] = 0;
    for (std::size_t i = 0; i < signatures.size(); ++i) {
        const PipelineOutcome& out = *outcomes[i];
        if (const auto* r = std::get_if<ContradictionReport>(&out)) {
            ++summary.contradicted;
            ++summary.by_step[r->failed_step];
        } else {
            summary.survivors.push_back(std::get<ConsistentUpToHorizon>(out));
        }
        if (details)
            details->push_back({signatures[i], out});
    }
    return summary;
}

}  // namespace closedgeo
