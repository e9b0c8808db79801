#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace closedgeo {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Numerator and denominator are 64-bit; every operation normalizes through
/// 128-bit intermediates and throws std::overflow_error if the reduced result
/// does not fit. Nothing in the library ever rounds.
class Rational {
public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t value) noexcept : num_(value) {}  // NOLINT: implicit from integers
    Rational(std::int64_t numerator, std::int64_t denominator);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }

    bool is_integer() const noexcept { return den_ == 1; }
    int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

    /// Largest integer not exceeding the value.
    std::int64_t floor() const noexcept;
    /// Smallest integer not below the value.
    std::int64_t ceil() const noexcept;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Parses "p/q" or "p" (optional leading sign on p). Throws
    /// std::invalid_argument on anything else, including a zero denominator.
    static Rational parse(std::string_view text);

    /// Fixed-point rendering for log lines only.
    double approx() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }

private:
    static Rational from_wide(__int128 numerator, __int128 denominator);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational abs(const Rational& r);

}  // namespace closedgeo
