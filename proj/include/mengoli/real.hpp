#pragma once

#include <cstdint>
#include <string>

#include <mpfr.h>

#include "mengoli/rational.hpp"

namespace mengoli {

inline constexpr unsigned kMinPrecisionBits = 64;
inline constexpr unsigned kMaxPrecisionBits = 8192;
inline constexpr unsigned kDefaultPrecisionBits = 128;

/// Throws InvalidInput unless kMinPrecisionBits <= bits <= kMaxPrecisionBits.
void require_precision(unsigned bits);

/// Unit roundoff 2^-bits of a correctly rounded operation at `bits` precision.
long double unit_roundoff(unsigned bits);

/// Owning MPFR value with a fixed precision. Binary operations produce a
/// result at the larger of the operand precisions, rounded to nearest.
class Real {
public:
    explicit Real(unsigned precision_bits = kDefaultPrecisionBits);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_int(std::int64_t v, unsigned precision_bits);
    /// `inexact`, when given, is set to whether rounding changed the value.
    static Real from_rational(const Rational& r, unsigned precision_bits, bool* inexact = nullptr);
    static Real from_long_double(long double v, unsigned precision_bits);
    static Real from_string(const std::string& decimal, unsigned precision_bits);
    static Real pi(unsigned precision_bits);

    unsigned precision_bits() const { return static_cast<unsigned>(mpfr_get_prec(v_)); }

    /// Copy correctly rounded to another precision.
    Real rounded_to(unsigned precision_bits) const;

    bool is_finite() const { return mpfr_number_p(v_) != 0; }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    long double to_long_double() const { return mpfr_get_ld(v_, MPFR_RNDN); }

    /// Decimal text with `digits` significant digits (0 picks a count that
    /// matches the precision).
    std::string str(int digits = 0) const;

    Real operator-() const;
    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real& operator*=(std::int64_t rhs);
    Real& operator/=(std::int64_t rhs);

    friend Real operator+(Real lhs, const Real& rhs) { return lhs += rhs; }
    friend Real operator-(Real lhs, const Real& rhs) { return lhs -= rhs; }
    friend Real operator*(Real lhs, const Real& rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, const Real& rhs) { return lhs /= rhs; }
    friend Real operator*(Real lhs, std::int64_t rhs) { return lhs *= rhs; }
    friend Real operator/(Real lhs, std::int64_t rhs) { return lhs /= rhs; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }

    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

Real abs(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real log(const Real& x);
Real log2(const Real& x);

/// A Real together with an a-priori bound on its absolute error. The
/// arithmetic below propagates first-order error terms plus the rounding of
/// each operation, so `error` stays a conservative bound.
struct Bounded {
    Real value;
    long double error = 0.0L;

    static Bounded exact(const Real& v) { return {v, 0.0L}; }
    static Bounded from_rational(const Rational& r, unsigned precision_bits);
};

Bounded operator+(const Bounded& a, const Bounded& b);
Bounded operator-(const Bounded& a, const Bounded& b);
Bounded operator*(const Bounded& a, const Bounded& b);
Bounded operator/(const Bounded& a, const Bounded& b);
Bounded operator*(const Bounded& a, const Rational& r);
Bounded operator-(const Bounded& a);

/// pi with its rounding error.
Bounded pi_bounded(unsigned precision_bits);

/// sin(pi * n / w) with exact integer argument reduction into [0, pi/2], so
/// the relative error stays a few ulp even next to zeros of sin.
Bounded sin_pi(std::int64_t n, std::int64_t w, unsigned precision_bits);

/// cos(pi * n / w), computed as sin(pi * (w - 2n) / (2w)).
Bounded cos_pi(std::int64_t n, std::int64_t w, unsigned precision_bits);

/// cot(pi * n / w). Throws InvalidInput when n is a multiple of w.
Bounded cot_pi(std::int64_t n, std::int64_t w, unsigned precision_bits);

/// Natural log of a positive bounded value.
Bounded log(const Bounded& x);

}  // namespace mengoli
