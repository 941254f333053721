#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace mengoli {

using BigInt = boost::multiprecision::mpz_int;

/// Exact fraction num/den with den > 0 and gcd(|num|, den) = 1.
///
/// Zero is always 0/1. Every constructor normalizes, so two equal values
/// compare equal member-wise.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)

    /// Throws InvalidInput when den == 0.
    Rational(BigInt num, BigInt den);

    /// Parses "p/q" or "p" (optional sign on p, surrounding spaces ignored).
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_integer() const { return den_ == 1; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    /// Largest integer not exceeding the value.
    BigInt floor() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs) {
        return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    Rational abs() const;

    /// Always "p/q", including integers ("5/1"), so output re-parses to the
    /// identical value.
    std::string str() const;

    /// Nearest long double; used only by the truncation oracle.
    long double to_long_double() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Canonical fraction for num/den. Throws InvalidInput when den == 0.
Rational normalize(const BigInt& num, const BigInt& den);

/// A shift r written as a + x/w with a = floor(r), 0 <= x < w and w the
/// reduced denominator of the fractional part (1 when r is an integer).
struct ShiftDecomposition {
    BigInt a;
    BigInt x;
    BigInt w;

    Rational value() const { return Rational(a) + Rational(x, w); }
};

ShiftDecomposition decompose(const Rational& r);

/// H_n = 1 + 1/2 + ... + 1/n, with H_0 = 0.
Rational harmonic(std::int64_t n);

/// Integer-offset correction relating the digamma-type series at x/w and at
/// a + x/w:
///   a > 0:  sum_{n=1}^{a} w/(x + w n)
///   a = 0:  0
///   a < 0: -sum_{n=0}^{|a|-1} w/(x - w n)
/// For a < 0 the input x = 0 is a negative-integer shift and is rejected.
Rational correction_sum(std::int64_t a, std::int64_t x, std::int64_t w);

/// Narrows to int64, throwing InvalidInput naming `what` when out of range.
std::int64_t to_int64(const BigInt& v, std::string_view what);

}  // namespace mengoli
