#include "mengoli/real.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "mengoli/error.hpp"

namespace mengoli {

void require_precision(unsigned bits) {
    if (bits < kMinPrecisionBits) throw InvalidInput("precision_bits must be at least 64");
    if (bits > kMaxPrecisionBits) throw InvalidInput("precision_bits must not exceed 8192");
}

long double unit_roundoff(unsigned bits) { return std::ldexp(1.0L, -static_cast<int>(bits)); }

Real::Real(unsigned precision_bits) {
    mpfr_init2(v_, static_cast<mpfr_prec_t>(precision_bits));
    mpfr_set_zero(v_, 1);
}

Real::Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    // Leave `other` as a valid minimal-precision zero.
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(v_, mpfr_get_prec(other.v_));
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) mpfr_swap(v_, other.v_);
    return *this;
}

Real::~Real() { mpfr_clear(v_); }

Real Real::from_int(std::int64_t v, unsigned precision_bits) {
    Real r(precision_bits);
    mpfr_set_sj(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from_rational(const Rational& q, unsigned precision_bits, bool* inexact) {
    Real r(precision_bits);
    mpq_t tmp;
    mpq_init(tmp);
    mpz_set(mpq_numref(tmp), q.num().backend().data());
    mpz_set(mpq_denref(tmp), q.den().backend().data());
    const int ternary = mpfr_set_q(r.v_, tmp, MPFR_RNDN);
    mpq_clear(tmp);
    if (inexact != nullptr) *inexact = ternary != 0;
    return r;
}

Real Real::from_long_double(long double v, unsigned precision_bits) {
    Real r(precision_bits);
    mpfr_set_ld(r.v_, v, MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& decimal, unsigned precision_bits) {
    Real r(precision_bits);
    if (mpfr_set_str(r.v_, decimal.c_str(), 10, MPFR_RNDN) != 0) {
        throw InvalidInput("malformed decimal '" + decimal + "'");
    }
    return r;
}

Real Real::pi(unsigned precision_bits) {
    Real r(precision_bits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
}

Real Real::rounded_to(unsigned precision_bits) const {
    Real r(precision_bits);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string Real::str(int digits) const {
    if (digits <= 0) {
        digits = std::max(1, static_cast<int>(std::floor(precision_bits() * 0.30102999566398120)));
    }
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string out(buf);
    mpfr_free_str(buf);
    return out;
}

namespace {

mpfr_prec_t joint_prec(mpfr_srcptr a, mpfr_srcptr b) { return std::max(mpfr_get_prec(a), mpfr_get_prec(b)); }

// Grows `r` to at least `prec` bits while keeping its value.
void widen(mpfr_ptr r, mpfr_prec_t prec) {
    if (mpfr_get_prec(r) < prec) mpfr_prec_round(r, prec, MPFR_RNDN);
}

template <typename Fn>
Real unary(const Real& x, Fn fn) {
    Real r(x.precision_bits());
    fn(r.get(), x.get(), MPFR_RNDN);
    return r;
}

}  // namespace

Real Real::operator-() const { return unary(*this, mpfr_neg); }

Real& Real::operator+=(const Real& rhs) {
    widen(v_, joint_prec(v_, rhs.v_));
    mpfr_add(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator-=(const Real& rhs) {
    widen(v_, joint_prec(v_, rhs.v_));
    mpfr_sub(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(const Real& rhs) {
    widen(v_, joint_prec(v_, rhs.v_));
    mpfr_mul(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(const Real& rhs) {
    widen(v_, joint_prec(v_, rhs.v_));
    mpfr_div(v_, v_, rhs.v_, MPFR_RNDN);
    return *this;
}

Real& Real::operator*=(std::int64_t rhs) {
    mpfr_mul_si(v_, v_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
}

Real& Real::operator/=(std::int64_t rhs) {
    mpfr_div_si(v_, v_, static_cast<long>(rhs), MPFR_RNDN);
    return *this;
}

Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log2(const Real& x) { return unary(x, mpfr_log2); }

// Bounded arithmetic ---------------------------------------------------------

namespace {

long double mag(const Real& x) { return std::fabs(x.to_long_double()); }

long double rounding(const Real& r) { return unit_roundoff(r.precision_bits()) * mag(r); }

}  // namespace

Bounded Bounded::from_rational(const Rational& r, unsigned precision_bits) {
    bool inexact = false;
    Real v = Real::from_rational(r, precision_bits, &inexact);
    const long double err = inexact ? rounding(v) : 0.0L;
    return {std::move(v), err};
}

Bounded operator+(const Bounded& a, const Bounded& b) {
    Real r = a.value + b.value;
    const long double err = a.error + b.error + rounding(r);
    return {std::move(r), err};
}

Bounded operator-(const Bounded& a, const Bounded& b) {
    Real r = a.value - b.value;
    const long double err = a.error + b.error + rounding(r);
    return {std::move(r), err};
}

Bounded operator-(const Bounded& a) { return {-a.value, a.error}; }

Bounded operator*(const Bounded& a, const Bounded& b) {
    Real r = a.value * b.value;
    const long double err = mag(a.value) * b.error + mag(b.value) * a.error + a.error * b.error + rounding(r);
    return {std::move(r), err};
}

Bounded operator/(const Bounded& a, const Bounded& b) {
    const long double bm = mag(b.value);
    if (!(bm > b.error)) throw InvalidInput("division by a value indistinguishable from zero");
    Real r = a.value / b.value;
    const long double err = (a.error + mag(r) * b.error) / (bm - b.error) + rounding(r);
    return {std::move(r), err};
}

Bounded operator*(const Bounded& a, const Rational& q) {
    return a * Bounded::from_rational(q, a.value.precision_bits());
}

Bounded pi_bounded(unsigned precision_bits) {
    Real p = Real::pi(precision_bits);
    const long double err = rounding(p);
    return {std::move(p), err};
}

Bounded sin_pi(std::int64_t n, std::int64_t w, unsigned precision_bits) {
    if (w <= 0) throw InvalidInput("sin_pi requires a positive denominator");
    std::int64_t m = ((n % (2 * w)) + 2 * w) % (2 * w);
    int sign = 1;
    if (m >= w) {
        m -= w;
        sign = -1;
    }
    if (2 * m > w) m = w - m;
    if (m == 0) return {Real(precision_bits), 0.0L};
    // t = pi*m/w in (0, pi/2]; three roundings in t, one in sin, and the
    // condition number of sin on that interval is at most 1.
    Real t = Real::pi(precision_bits) * m / w;
    Real s = sin(t);
    if (sign < 0) s = -s;
    const long double err = 6.0L * unit_roundoff(precision_bits) * mag(s);
    return {std::move(s), err};
}

Bounded cos_pi(std::int64_t n, std::int64_t w, unsigned precision_bits) {
    if (w <= 0) throw InvalidInput("cos_pi requires a positive denominator");
    const std::int64_t m = ((n % (2 * w)) + 2 * w) % (2 * w);
    return sin_pi(w - 2 * m, 2 * w, precision_bits);
}

Bounded cot_pi(std::int64_t n, std::int64_t w, unsigned precision_bits) {
    if (w <= 0) throw InvalidInput("cot_pi requires a positive denominator");
    std::int64_t m = ((n % w) + w) % w;
    if (m == 0) throw InvalidInput("cot_pi pole: argument is an integer multiple of pi");
    int sign = 1;
    if (2 * m > w) {
        m = w - m;
        sign = -1;
    }
    Bounded c = sin_pi(w - 2 * m, 2 * w, precision_bits) / sin_pi(m, w, precision_bits);
    if (sign < 0) c = -c;
    return c;
}

Bounded log(const Bounded& x) {
    const long double xm = mag(x.value);
    if (x.value.sign() <= 0 || !(xm > x.error)) throw InvalidInput("logarithm of a non-positive value");
    Real r = log(x.value);
    const long double err = x.error / (xm - x.error) + rounding(r);
    return {std::move(r), err};
}

}  // namespace mengoli
