#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace tilebalance {

using BigInt = boost::multiprecision::cpp_int;

/// Exact fraction p/q kept in lowest terms with q > 0.
///
/// Backed by arbitrary-precision integers, so sums and products of census
/// ratios never overflow.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value);  // NOLINT(google-explicit-constructor)
    Rational(BigInt numerator, BigInt denominator);

    /// Parses "p/q" or "p" (optional leading sign, surrounding spaces ignored).
    static Rational parse(std::string_view text);

    [[nodiscard]] const BigInt& numerator() const noexcept { return num_; }
    [[nodiscard]] const BigInt& denominator() const noexcept { return den_; }

    [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
    [[nodiscard]] int sign() const noexcept { return num_.sign(); }

    [[nodiscard]] double to_double() const;
    /// "p/q", or "p" when the denominator is one.
    [[nodiscard]] std::string str() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
    Rational operator-() const;

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    [[nodiscard]] Rational reciprocal() const;
    [[nodiscard]] Rational abs() const;

private:
    void normalize();

    BigInt num_{0};
    BigInt den_{1};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace tilebalance
