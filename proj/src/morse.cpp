#include "closedgeo/morse.hpp"

#include "closedgeo/bott.hpp"
#include "closedgeo/errors.hpp"

namespace closedgeo {

int critical_group_dim(const IndexProfile& p, std::int64_t m, std::int64_t k)
{
    if (k < 0)
        throw PrecondViolation("degree must be non-negative");
    if (bott_index(p, m) != k)
        return 0;
    return (m % 2 == 0 || gamma_invariant(p).unit) ? 1 : 0;
}

std::int64_t aggregate_cutoff(const IndexProfile& p, std::int64_t max_degree)
{
    const Rational alpha = average_index(p);
    if (alpha <= Rational(0))
        throw PrecondViolation("aggregation needs a positive average index");
    return ((Rational(max_degree) + Rational(p.n - 1)) / alpha).ceil();
}

std::vector<std::int64_t> aggregate_w(const IndexProfile& p, std::int64_t max_degree)
{
    if (max_degree < 0)
        throw PrecondViolation("max degree must be non-negative");
    const std::int64_t cutoff = aggregate_cutoff(p, max_degree);
    const bool unit = gamma_invariant(p).unit;

    std::vector<std::int64_t> w(static_cast<std::size_t>(max_degree) + 1, 0);
    for (std::int64_t m = 1; m <= cutoff; ++m) {
        const std::int64_t k = bott_index(p, m);
        if (k <= max_degree && (m % 2 == 0 || unit))
            ++w[static_cast<std::size_t>(k)];
    }
    return w;
}

MorseReport morse_q_recursion(const std::vector<std::int64_t>& w, const std::vector<std::int64_t>& b)
{
    if (w.size() != b.size())
        throw PrecondViolation("w and b must have equal lengths");
    MorseReport r;
    r.max_degree = static_cast<std::int64_t>(w.size()) - 1;
    r.w = w;
    r.b = b;
    r.q.reserve(w.size());
    std::int64_t prev = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
        const std::int64_t q = w[k] - b[k] - prev;
        r.q.push_back(q);
        if (q < 0 && r.feasible) {
            r.feasible = false;
            r.first_violation = static_cast<std::int64_t>(k);
        }
        prev = q;
    }
    r.tail_open = r.feasible && !r.q.empty() && r.q.back() != 0;
    return r;
}

Rational average_relation_ratio(int n)
{
    const Rational sign = (n - 1) % 2 == 0 ? Rational(1) : Rational(-1);
    return Rational(1) / (sign * average_euler_number(n));
}

}  // namespace closedgeo
