#include "closedgeo/homology.hpp"

#include <algorithm>

#include "closedgeo/errors.hpp"

namespace closedgeo {

namespace {

using Poly = std::vector<std::int64_t>;

void require_sphere_dimension(int n)
{
    if (n < 3)
        throw PrecondViolation("loop-space Betti numbers need n >= 3, got " + std::to_string(n));
}

Poly monomial(int degree, std::int64_t coeff = 1)
{
    Poly p(static_cast<std::size_t>(degree) + 1, 0);
    p.back() = coeff;
    return p;
}

Poly add(const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    return out;
}

Poly mul(const Poly& a, const Poly& b)
{
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

// 1 - t^d
Poly one_minus(int d) { return add(monomial(0), monomial(d, -1)); }

// Power series num/den up to t^max_degree; den has constant term 1.
Poly series_divide(const Poly& num, const Poly& den, int max_degree)
{
    Poly c(static_cast<std::size_t>(max_degree) + 1, 0);
    for (std::size_t k = 0; k < c.size(); ++k) {
        std::int64_t v = k < num.size() ? num[k] : 0;
        for (std::size_t i = 1; i < den.size() && i <= k; ++i)
            v -= den[i] * c[k - i];
        c[k] = v;
    }
    return c;
}

}  // namespace

std::int64_t betti_number(int n, int k)
{
    require_sphere_dimension(n);
    if (k < 0)
        throw PrecondViolation("degree must be non-negative");
    const int d = n - 1;
    if (k < d || (k - d) % 2 != 0)
        return 0;
    if (n % 2 == 0) {
        // k = (2j + 1)(n - 1), j >= 1
        if (k % d == 0 && (k / d) % 2 == 1 && k / d >= 3)
            return 2;
    } else {
        // k = j(n - 1), j >= 2
        if (k % d == 0 && k / d >= 2)
            return 2;
    }
    return 1;
}

BettiTable poincare_coefficients(int n, int max_degree)
{
    require_sphere_dimension(n);
    if (max_degree < 0)
        throw PrecondViolation("max degree must be non-negative");

    // t^{n-1} [1/(1-t^2) + t^e/(1-t^e)] = t^{n-1} [(1-t^e) + t^e (1-t^2)] / [(1-t^2)(1-t^e)]
    // with e = 2n - 2 for even n and e = n - 1 for odd n.
    const int e = n % 2 == 0 ? 2 * n - 2 : n - 1;
    const Poly num = mul(monomial(n - 1), add(one_minus(e), mul(monomial(e), one_minus(2))));
    const Poly den = mul(one_minus(2), one_minus(e));

    BettiTable table{n, max_degree, series_divide(num, den, max_degree)};
    return table;
}

BettiTable betti_table(int n, int max_degree)
{
    require_sphere_dimension(n);
    if (max_degree < 0)
        throw PrecondViolation("max degree must be non-negative");
    BettiTable table{n, max_degree, {}};
    table.ranks.reserve(static_cast<std::size_t>(max_degree) + 1);
    for (int k = 0; k <= max_degree; ++k)
        table.ranks.push_back(betti_number(n, k));
    return table;
}

std::int64_t period_alternating_sum(int n, int start)
{
    require_sphere_dimension(n);
    if (start < n)
        throw PrecondViolation("period must start in the periodic range k >= n");
    std::int64_t sum = 0;
    for (int k = start; k < start + 2 * (n - 1); ++k)
        sum += (k % 2 == 0 ? 1 : -1) * betti_number(n, k);
    return sum;
}

Rational average_euler_number(int n)
{
    require_sphere_dimension(n);
    // the pattern repeats with period 2(n - 1) from degree n on, so the
    // partial sums grow linearly with slope (period sum) / (period length)
    const int period = 2 * (n - 1);
    return Rational(period_alternating_sum(n, period), period);
}

}  // namespace closedgeo
