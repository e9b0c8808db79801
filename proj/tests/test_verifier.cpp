#include <doctest.h>

#include <set>

#include "closedgeo/errors.hpp"
#include "closedgeo/homology.hpp"
#include "closedgeo/morse.hpp"
#include "closedgeo/verifier.hpp"
#include "fixtures.hpp"

using namespace closedgeo;
using namespace closedgeo::testing;

namespace {

const ContradictionReport& as_report(const PipelineOutcome& o)
{
    REQUIRE(std::holds_alternative<ContradictionReport>(o));
    return std::get<ContradictionReport>(o);
}

// Unfiltered enumeration: every arc vector in [0, 2(n-1)]^{l+1} and every
// nullity vector in [1, n-1]^l, then the structural filter.
std::set<Signature> brute_force_signatures(int n)
{
    std::set<Signature> out;
    const std::int64_t cap = 2 * (n - 1);
    for (int l = 0; l <= n - 1; ++l) {
        std::vector<std::int64_t> arcs(static_cast<std::size_t>(l) + 1, 0);
        std::vector<std::int64_t> nul(static_cast<std::size_t>(l), 1);
        while (true) {
            std::vector<std::int64_t> a(arcs.size(), 0);
            while (true) {
                if (validate_skeleton(n, a, nul).empty())
                    out.insert(Signature{n, a, nul});
                std::size_t i = 0;
                while (i < a.size() && a[i] == cap)
                    a[i++] = 0;
                if (i == a.size())
                    break;
                ++a[i];
            }
            std::size_t i = 0;
            while (i < nul.size() && nul[i] == n - 1)
                nul[i++] = 1;
            if (i == nul.size())
                break;
            ++nul[i];
        }
    }
    return out;
}

bool q_divides(const IndexProfile& p, std::int64_t q)
{
    for (const auto& t : p.phases)
        if (t.den() % q != 0)
            return false;
    return true;
}

// Recomputes a report's claim from the witness and the candidate, using the
// brute-force Bott sum and the series expansion of the Betti numbers.
void recheck(const Signature& s, const ContradictionReport& r, std::int64_t horizon)
{
    const int n = s.n;
    CHECK(r.signature == s);
    switch (r.failed_step) {
    case Step::IndexOfPrime:
        CHECK(s.arc_values.front() != n - 1);
        CHECK(witness_value(r.witness, "ind_c") == Rational(s.arc_values.front()));
        break;
    case Step::SecondIterate:
        CHECK(s.arc_values.front() == n - 1);
        CHECK(s.arc_values.front() + s.arc_values.back() < n);
        CHECK(poincare_coefficients(n, n - 1)[n - 1] == 1);
        break;
    case Step::PhaseInfeasible: {
        CHECK_FALSE(r.profile.has_value());
        const Rational target = witness_value(r.witness, "alpha_target");
        const auto [lo, hi] = std::minmax_element(s.arc_values.begin(), s.arc_values.end());
        const bool outside = target <= Rational(0) || (*lo == *hi ? target != Rational(*lo)
                                                                  : target <= Rational(*lo) || target >= Rational(*hi));
        bool single_jump = false;
        if (!outside) {
            int carriers = 0;
            for (std::size_t j = 0; j + 1 < s.arc_values.size(); ++j)
                carriers += s.arc_values[j] != s.arc_values[j + 1];
            single_jump = carriers == 1 && witness_value(r.witness, "forced_phase").den() % 499 != 0;
        }
        CHECK((outside || single_jump));
        break;
    }
    case Step::AverageRelation: {
        REQUIRE(r.profile);
        const auto& p = *r.profile;
        const Rational alpha = circle_integral(p);
        CHECK(witness_value(r.witness, "alpha") == alpha);
        const auto i1 = brute_force_index(p, 1).value();
        const auto i2 = brute_force_index(p, 2).value();
        const Rational mag = (i2 - i1) % 2 == 0 ? Rational(1) : Rational(1, 2);
        const Rational gamma = i1 % 2 == 0 ? mag : -mag;
        const Rational sign = n % 2 == 1 ? Rational(1) : Rational(-1);
        CHECK(sign * alpha / gamma != average_relation_ratio(n));
        break;
    }
    case Step::MorseFeasibility: {
        REQUIRE(r.profile);
        const auto& p = *r.profile;
        const auto window = witness_value(r.witness, "window").num();
        const auto i1 = brute_force_index(p, 1).value();
        const auto i2 = brute_force_index(p, 2).value();
        const bool unit = (i2 - i1) % 2 == 0;
        std::vector<std::int64_t> w(static_cast<std::size_t>(window) + 1, 0);
        for (std::int64_t m = 1; m <= horizon; ++m) {
            const auto ind = brute_force_index(p, m).value();
            if (ind <= window && (m % 2 == 0 || unit))
                ++w[static_cast<std::size_t>(ind)];
        }
        const auto b = poincare_coefficients(n, static_cast<int>(window)).ranks;
        const auto k = static_cast<std::size_t>(witness_value(r.witness, "first_mismatch").num());
        REQUIRE(k < w.size());
        CHECK(w[k] != b[k]);
        CHECK(witness_value(r.witness, "w_at_mismatch") == Rational(w[k]));
        break;
    }
    default:
        FAIL("unexpected step " << to_string(r.failed_step));
    }
}

}  // namespace

TEST_CASE("extremal profiles")
{
    const auto p = extremal_profile(4, {Rational(10, 97), Rational(13, 97), Rational(31, 97)});
    CHECK(p == running_profile());
    const auto q = extremal_profile(3, {Rational(10, 97), Rational(31, 97)});
    CHECK(q.arc_values == std::vector<std::int64_t>{2, 1, 2});
    CHECK(q.nullities == std::vector<std::int64_t>{1, 1});
    CHECK_THROWS_AS(extremal_profile(3, {Rational(31, 97), Rational(10, 97)}), PrecondViolation);
    CHECK_THROWS_AS(extremal_profile(3, {Rational(10, 97)}), PrecondViolation);
    CHECK_THROWS_AS(extremal_profile(3, {Rational(10, 97), Rational(1, 2)}), PrecondViolation);
}

TEST_CASE("staircase proposition checks")
{
    const auto r = check_prop33(running_profile());
    CHECK(r.status == Prop33Status::Checked);
    CHECK(r.conclusion_a());
    CHECK(r.conclusion_b());
    CHECK(r.conclusion_c());
    CHECK(r.horizon == 96);
    CHECK(r.passed());

    for (int n = 3; n <= 6; ++n) {
        const auto c = check_prop33(constant_profile(n, n - 1));
        CHECK(c.status == Prop33Status::HypothesesNotMet);
        CHECK(c.index_is_n_minus_1);
        CHECK(c.second_index_at_least_n);
        CHECK_FALSE(c.alpha_below_two_gamma);
    }
    const auto f = check_prop33(flat_profile());
    CHECK(f.status == Prop33Status::HypothesesNotMet);
    CHECK(f.second_index_at_least_n);
    CHECK_FALSE(f.alpha_below_two_gamma);
    CHECK_FALSE(f.passed());
}

TEST_CASE("pipeline examples")
{
    // the running profile has alpha = 178/97, not the 3/2 the average relation demands
    const auto r = as_report(single_geodesic_pipeline(4, running_profile(), 40));
    CHECK(r.failed_step == Step::AverageRelation);
    CHECK(witness_value(r.witness, "alpha") == Rational(178, 97));
    CHECK(witness_value(r.witness, "required") == Rational(3, 2));
    CHECK_THROWS_AS(single_geodesic_pipeline(4, running_profile(), 96), PrecondViolation);

    const auto c = as_report(single_geodesic_pipeline(3, constant_profile(3, 2), 200));
    CHECK(c.failed_step == Step::AverageRelation);
    CHECK(witness_value(c.witness, "ratio") == Rational(2));

    const auto i = as_report(single_geodesic_pipeline(4, constant_profile(4, 2), 10));
    CHECK(i.failed_step == Step::IndexOfPrime);

    // ind(c^2) = n is left to the later steps
    const auto s = as_report(single_geodesic_pipeline(3, make_profile(3, {2, 1}, {Rational(1, 13)}, {1}), 5));
    CHECK(s.failed_step == Step::AverageRelation);

    const auto t = as_report(single_geodesic_pipeline(4, make_profile(4, {3, 2, 1, 0}, {Rational(1, 13), Rational(2, 13), Rational(3, 13)}, {1, 1, 1}), 5));
    CHECK(t.failed_step == Step::SecondIterate);

    CHECK_THROWS_AS(single_geodesic_pipeline(4, running_profile(), 0), PrecondViolation);
    CHECK_THROWS_AS(single_geodesic_pipeline(3, running_profile(), 10), PrecondViolation);
    CHECK_THROWS_AS(single_geodesic_pipeline(4, constant_profile(4, 0), 10), PrecondViolation);
}

TEST_CASE("staircase at the required average index fails the Morse step")
{
    // alpha = 3/2 on the n = 4 staircase: 2 + 2(t_1 + t_2 - t_3) = 3/2
    const auto p = extremal_profile(4, {Rational(10, 499), Rational(30, 499), Rational(659, 1996)});
    REQUIRE(average_index(p) == Rational(3, 2));
    const auto r = as_report(single_geodesic_pipeline(4, p, 200));
    CHECK(r.failed_step == Step::MorseFeasibility);
    recheck(signature_of(p), r, 200);
}

TEST_CASE("gap-bound and jump-clash steps on their own")
{
    const auto p = running_profile();
    std::optional<std::int64_t> first_gap;
    for (std::int64_t m = 1; m + 2 <= 47 && !first_gap; ++m)
        if (brute_force_index(p, m + 2).value() - brute_force_index(p, m).value() > 4)
            first_gap = m;
    REQUIRE(first_gap == 7);  // the jump at k = 4 is itself a two-step gap of 6
    const auto gap = gap_bound_step(p, 47);
    REQUIRE(gap.has_value());
    CHECK(witness_value(gap->witness, "m") == Rational(7));
    CHECK_FALSE(gap_bound_step(p, 8).has_value());
    const auto j = jump_clash_step(p, 40);
    REQUIRE(j.has_value());
    CHECK(j->failed_step == Step::JumpClash);
    CHECK(witness_value(j->witness, "k") == Rational(4));
    CHECK(witness_value(j->witness, "ind_2k_plus_1") - witness_value(j->witness, "ind_2k_minus_1") ==
          witness_value(j->witness, "jump"));
    CHECK(witness_value(j->witness, "jump") == Rational(6));
    CHECK_FALSE(jump_clash_step(make_profile(3, {2, 1, 2}, {Rational(5, 53), Rational(20, 53)}, {1, 1}), 10));

    // ind(c^3) - ind(c) = 8 for the constant profile I = (4)
    const auto g = gap_bound_step(constant_profile(5, 4), 10);
    REQUIRE(g.has_value());
    CHECK(g->failed_step == Step::GapBound);
    CHECK(witness_value(g->witness, "m") == Rational(1));
    CHECK(witness_value(g->witness, "ind_m_plus_2") - witness_value(g->witness, "ind_m") == Rational(8));
}

TEST_CASE("signature enumeration")
{
    const auto sigs = enumerate_signatures(3);
    CHECK(sigs.size() == 72);
    const std::set<Signature> as_set(sigs.begin(), sigs.end());
    CHECK(as_set.size() == sigs.size());
    CHECK(as_set.count(Signature{3, {2, 1, 2}, {1, 1}}) == 1);
    CHECK(as_set.count(Signature{3, {2}, {}}) == 1);
    CHECK(as_set.count(Signature{3, {2, 0, 2}, {1, 1}}) == 0);
    for (const auto& s : sigs)
        CHECK(validate_skeleton(s.n, s.arc_values, s.nullities).empty());

    for (int n = 3; n <= 5; ++n) {
        const auto e = enumerate_signatures(n);
        const std::set<Signature> got(e.begin(), e.end());
        CHECK(got.size() == e.size());
        CHECK(got == brute_force_signatures(n));
        CHECK(enumerate_signatures(n) == e);
    }
    CHECK_THROWS_AS(enumerate_signatures(2), PrecondViolation);
    CHECK_THROWS_AS(enumerate_signatures(9), PrecondViolation);
}

TEST_CASE("phase instantiation")
{
    const Signature stair{4, {3, 2, 1, 2}, {1, 1, 1}};
    const auto inst = phase_instantiate(stair, Rational(178, 97), 9973);
    REQUIRE(std::holds_alternative<IndexProfile>(inst));
    const auto& p = std::get<IndexProfile>(inst);
    CHECK(validate_profile(p).empty());
    CHECK(circle_integral(p) == Rational(178, 97));
    CHECK(q_divides(p, 9973));

    CHECK(std::holds_alternative<PhaseInfeasible>(phase_instantiate(Signature{3, {2}, {}}, Rational(3), 499)));
    CHECK(std::holds_alternative<IndexProfile>(phase_instantiate(Signature{3, {2}, {}}, Rational(2), 499)));
    CHECK(std::holds_alternative<IndexProfile>(phase_instantiate(Signature{3, {2, 2, 2}, {1, 1}}, Rational(2), 499)));
    for (const auto& s : enumerate_signatures(3))
        CHECK(std::holds_alternative<PhaseInfeasible>(phase_instantiate(s, Rational(-1, 3), 499)));
    // one jump-carrying phase: alpha = 2 + 2 t_1 (3 - 2) pins t_1 = 1/6
    CHECK(std::holds_alternative<PhaseInfeasible>(phase_instantiate(Signature{4, {3, 2}, {1}}, Rational(7, 3), 499)));
    CHECK_THROWS_AS(phase_instantiate(stair, Rational(3, 2), 500), PrecondViolation);
}

TEST_CASE("phase instantiation hits every reachable target")
{
    const std::vector<Rational> targets{Rational(1, 2), Rational(1), Rational(4, 3), Rational(3, 2), Rational(7, 4),
                                        Rational(2),    Rational(5, 2), Rational(3)};
    for (int n = 3; n <= 4; ++n) {
        for (const auto& s : enumerate_signatures(n)) {
            for (const auto& target : targets) {
                const auto inst = phase_instantiate(s, target, 499);
                if (const auto* p = std::get_if<IndexProfile>(&inst)) {
                    CHECK(circle_integral(*p) == target);
                    CHECK(q_divides(*p, 499));
                    CHECK(signature_of(*p) == s);
                } else {
                    const auto [lo, hi] = std::minmax_element(s.arc_values.begin(), s.arc_values.end());
                    int carriers = 0;
                    for (std::size_t j = 0; j + 1 < s.arc_values.size(); ++j)
                        carriers += s.arc_values[j] != s.arc_values[j + 1];
                    const bool strict_inside = target > Rational(*lo) && target < Rational(*hi);
                    CHECK((!strict_inside || carriers == 1));
                }
            }
        }
    }
}

TEST_CASE("verify_theorem regression histograms")
{
    const auto s3 = verify_theorem(3, 200, 499);
    CHECK(s3.candidates == 72);
    CHECK(s3.passed());
    CHECK(s3.by_step.at(Step::IndexOfPrime) == 54);
    CHECK(s3.by_step.at(Step::SecondIterate) == 2);
    CHECK(s3.by_step.at(Step::PhaseInfeasible) == 16);

    const auto s4 = verify_theorem(4, 200, 499);
    CHECK(s4.candidates == 456);
    CHECK(s4.passed());
    CHECK(s4.by_step.at(Step::MorseFeasibility) == 2);

    const auto s5 = verify_theorem(5, 200, 499);
    CHECK(s5.candidates == 2684);
    CHECK(s5.passed());
    CHECK(s5.by_step.at(Step::MorseFeasibility) == 4);

    const auto s6 = verify_theorem(6, 200, 499);
    CHECK(s6.candidates == 15064);
    CHECK(s6.passed());
    CHECK(s6.by_step.at(Step::MorseFeasibility) == 8);

    CHECK_THROWS_AS(verify_theorem(3, 200, 401), PrecondViolation);
    CHECK_THROWS_AS(verify_theorem(3, 200, 500), PrecondViolation);
    CHECK_THROWS_AS(verify_theorem(9, 10, 499), PrecondViolation);
}

TEST_CASE("verification does not depend on the thread count")
{
    std::vector<CandidateResult> one, many;
    const auto a = verify_theorem(5, 200, 499, 1, &one);
    const auto b = verify_theorem(5, 200, 499, 7, &many);
    CHECK(a.by_step == b.by_step);
    CHECK(a.candidates == b.candidates);
    REQUIRE(one.size() == many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        CHECK(one[i].signature == many[i].signature);
        const auto& x = as_report(one[i].outcome);
        const auto& y = as_report(many[i].outcome);
        CHECK(x.failed_step == y.failed_step);
        CHECK(x.witness == y.witness);
        CHECK(x.profile == y.profile);
    }
}

TEST_CASE("every contradiction witness rechecks independently")
{
    for (int n = 3; n <= 5; ++n) {
        std::vector<CandidateResult> details;
        verify_theorem(n, 200, 499, 2, &details);
        for (const auto& d : details)
            recheck(d.signature, as_report(d.outcome), 200);
    }
}
