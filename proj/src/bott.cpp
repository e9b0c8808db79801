#include "closedgeo/bott.hpp"

#include <algorithm>
#include <cstdlib>

#include "closedgeo/errors.hpp"

namespace closedgeo {

namespace {

void require_shape(const IndexProfile& p)
{
    if (p.arc_values.size() != p.phases.size() + 1)
        throw PrecondViolation("arc/phase length mismatch");
}

void require_positive(std::int64_t m, const char* what)
{
    if (m < 1)
        throw PrecondViolation(std::string(what) + " must be positive");
}

// Walks j/m for j = 1 .. ceil(m/2) - 1 in increasing order and hands the arc
// value at each point to `visit`. Phases are sorted, so one pass suffices.
template <typename Visit>
void walk_interior(const IndexProfile& p, std::int64_t m, Visit&& visit)
{
    std::size_t arc = 0;
    const std::size_t l = p.phases.size();
    for (std::int64_t j = 1; 2 * j < m; ++j) {
        const Rational point(j, m);
        while (arc < l && p.phases[arc] < point)
            ++arc;
        if (arc < l && p.phases[arc] == point)
            throw PhaseCollision(point);
        visit(point, arc, p.arc_values[arc]);
    }
}

}  // namespace

std::int64_t evaluate_index_function(const IndexProfile& p, const Rational& t)
{
    require_shape(p);
    if (t < Rational(0) || t > Rational(1, 2))
        throw PrecondViolation("evaluation point " + t.str() + " is outside [0, 1/2]");
    auto it = std::lower_bound(p.phases.begin(), p.phases.end(), t);
    if (it != p.phases.end() && *it == t)
        throw PhaseCollision(t);
    return p.arc_values[static_cast<std::size_t>(it - p.phases.begin())];
}

IterateIndexReport iterate_index(const IndexProfile& p, std::int64_t m)
{
    require_shape(p);
    require_positive(m, "iterate m");

    IterateIndexReport report;
    report.m = m;
    report.arc_hits.push_back({Rational(0), 1});
    std::int64_t index = p.first_arc();
    walk_interior(p, m, [&](const Rational& point, std::size_t arc, std::int64_t value) {
        report.arc_hits.push_back({point, arc + 1});
        index += 2 * value;
    });
    if (m % 2 == 0) {
        report.arc_hits.push_back({Rational(1, 2), p.arc_values.size()});
        report.even_contribution = p.last_arc();
        index += p.last_arc();
    }
    report.index = index;
    return report;
}

std::int64_t bott_index(const IndexProfile& p, std::int64_t m)
{
    require_shape(p);
    require_positive(m, "iterate m");
    std::int64_t index = p.first_arc() + (m % 2 == 0 ? p.last_arc() : 0);
    walk_interior(p, m, [&](const Rational&, std::size_t, std::int64_t value) { index += 2 * value; });
    return index;
}

std::vector<std::int64_t> index_sequence(const IndexProfile& p, std::int64_t max_m)
{
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(std::max<std::int64_t>(max_m, 0)));
    for (std::int64_t m = 1; m <= max_m; ++m)
        out.push_back(bott_index(p, m));
    return out;
}

Rational average_index(const IndexProfile& p)
{
    require_shape(p);
    // twice the integral over [0, 1/2]
    Rational sum;
    Rational prev(0);
    for (std::size_t j = 0; j < p.arc_values.size(); ++j) {
        const Rational next = j < p.phases.size() ? p.phases[j] : Rational(1, 2);
        sum += Rational(p.arc_values[j]) * (next - prev);
        prev = next;
    }
    return Rational(2) * sum;
}

GammaInvariant gamma_from_indices(std::int64_t ind1, std::int64_t ind2)
{
    return GammaInvariant{ind1 % 2 == 0 ? 1 : -1, (ind2 - ind1) % 2 == 0};
}

GammaInvariant gamma_invariant(const IndexProfile& p)
{
    return gamma_from_indices(bott_index(p, 1), bott_index(p, 2));
}

GapDecomposition gap_decomposition(const IndexProfile& p, std::int64_t m)
{
    require_shape(p);
    require_positive(m, "iterate m");
    if (p.last_arc() != 2)
        throw PrecondViolation("gap decomposition needs I(-1) = 2, got " + std::to_string(p.last_arc()));

    GapDecomposition g;
    if (m % 2 == 1)
        g.a = 2;
    else
        g.a = 2 * evaluate_index_function(p, Rational(m, 2 * m + 2)) - 2;

    for (std::int64_t j = 1; 2 * j < m; ++j) {
        g.b += 2 * (evaluate_index_function(p, Rational(j, m + 1)) - evaluate_index_function(p, Rational(j, m)));
    }

    if (!p.phases.empty()) {
        const Rational& last = p.phases.back();
        for (std::int64_t q = 1; 2 * q < m; ++q) {
            if (Rational(q, m + 1) < last && last < Rational(q, m))
                g.j_set.push_back(q);
        }
    }
    return g;
}

std::int64_t min_phase_denominator(const IndexProfile& p)
{
    std::int64_t best = 0;
    for (const auto& t : p.phases)
        best = best == 0 ? t.den() : std::min(best, t.den());
    return best;
}

std::vector<std::int64_t> jump_search(const IndexProfile& p, std::int64_t horizon)
{
    require_shape(p);
    require_positive(horizon, "horizon");
    if (average_index(p) <= Rational(0))
        throw PrecondViolation("jump search needs a positive average index");
    const std::int64_t den = min_phase_denominator(p);
    if (den != 0 && den <= 2 * horizon + 1) {
        throw PrecondViolation("phase denominator " + std::to_string(den) + " does not exceed 2 * horizon + 1 = " +
                               std::to_string(2 * horizon + 1));
    }

    const auto seq = index_sequence(p, 2 * horizon + 1);
    const std::int64_t target = 2 * seq[0];
    std::vector<std::int64_t> ks;
    for (std::int64_t k = 1; k <= horizon; ++k) {
        if (seq[static_cast<std::size_t>(2 * k)] - seq[static_cast<std::size_t>(2 * k - 2)] == target)
            ks.push_back(k);
    }
    return ks;
}

bool classify_elliptic_extremal(const IndexProfile& p)
{
    require_shape(p);
    std::int64_t total = 0;
    for (std::size_t j = 0; j + 1 < p.arc_values.size(); ++j)
        total += std::llabs(p.arc_values[j + 1] - p.arc_values[j]);
    return total == p.n - 1;
}

}  // namespace closedgeo
