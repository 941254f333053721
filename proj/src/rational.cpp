#include "mengoli/rational.hpp"

#include <limits>
#include <ostream>

#include "mengoli/error.hpp"

namespace mengoli {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

BigInt parse_integer(std::string_view s, bool allow_sign) {
    s = trim(s);
    std::string_view digits = s;
    if (allow_sign && !digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty()) throw InvalidInput("malformed rational: empty integer");
    for (char c : digits) {
        if (c < '0' || c > '9') {
            throw InvalidInput("malformed rational: unexpected character '" + std::string(1, c) + "'");
        }
    }
    return BigInt(std::string(s.front() == '+' ? s.substr(1) : s));
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw InvalidInput("zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::parse(std::string_view text) {
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, true));
    BigInt num = parse_integer(text.substr(0, slash), true);
    BigInt den = parse_integer(text.substr(slash + 1), false);
    return Rational(std::move(num), std::move(den));
}

BigInt Rational::floor() const {
    BigInt q = num_ / den_;  // truncates toward zero
    if (num_ < 0 && q * den_ != num_) q -= 1;
    return q;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    num_ = num_ * rhs.den_ - rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw InvalidInput("division by zero rational");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const BigInt l = lhs.num_ * rhs.den_;
    const BigInt r = rhs.num_ * lhs.den_;
    if (l < r) return std::strong_ordering::less;
    if (l > r) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const { return num_.str() + "/" + den_.str(); }

long double Rational::to_long_double() const {
    // mpz -> long double conversions are exact below 2^64; beyond that a
    // double-rounding error of one ulp is acceptable for the oracle's use.
    return num_.convert_to<long double>() / den_.convert_to<long double>();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational normalize(const BigInt& num, const BigInt& den) { return Rational(num, den); }

ShiftDecomposition decompose(const Rational& r) {
    ShiftDecomposition d;
    d.a = r.floor();
    const Rational frac = r - Rational(d.a);
    d.x = frac.num();
    d.w = frac.den();
    return d;
}

Rational harmonic(std::int64_t n) {
    if (n < 0) throw InvalidInput("harmonic number of negative index");
    Rational h;
    for (std::int64_t k = 1; k <= n; ++k) h += Rational(BigInt(1), BigInt(k));
    return h;
}

Rational correction_sum(std::int64_t a, std::int64_t x, std::int64_t w) {
    if (w <= 0) throw InvalidInput("correction sum requires w > 0");
    if (x < 0 || x >= w) throw InvalidInput("correction sum requires 0 <= x < w");
    if (a < 0 && x == 0) throw InvalidInput("shift equals negative integer");
    Rational total;
    if (a > 0) {
        for (std::int64_t n = 1; n <= a; ++n) total += Rational(BigInt(w), BigInt(x) + BigInt(w) * n);
    } else if (a < 0) {
        for (std::int64_t n = 0; n < -a; ++n) total -= Rational(BigInt(w), BigInt(x) - BigInt(w) * n);
    }
    return total;
}

std::int64_t to_int64(const BigInt& v, std::string_view what) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw InvalidInput(std::string(what) + " out of 64-bit range");
    }
    return v.convert_to<std::int64_t>();
}

}  // namespace mengoli
