#include "mengoli/digamma.hpp"

#include <cmath>
#include <limits>

#include "mengoli/error.hpp"

namespace mengoli {

namespace {

void require_proper_fraction(std::int64_t p, std::int64_t q) {
    if (p <= 0 || p >= q) throw InvalidInput("gauss sum requires 0 < p < q");
}

}  // namespace

Bounded gauss_sum(std::int64_t p, std::int64_t q, unsigned precision_bits) {
    require_proper_fraction(p, q);
    require_precision(precision_bits);
    const unsigned wp = precision_bits + 16;

    Bounded half_pi = pi_bounded(wp) * Rational(BigInt(1), BigInt(2));
    Bounded total = -(half_pi * cot_pi(p, q, wp)) - log(Bounded::from_rational(Rational(q), wp));
    for (std::int64_t n = 1; n < q; ++n) {
        const Bounded two_sin = sin_pi(n, q, wp) * Rational(2);
        // cos(2 pi n p / q) with the angle reduced exactly in integers.
        const std::int64_t m = (2 * ((n * p) % q)) % (2 * q);
        total = total + log(two_sin) * cos_pi(m, q, wp);
    }
    Bounded out{total.value.rounded_to(precision_bits), total.error};
    out.error += unit_roundoff(precision_bits) * std::fabs(out.value.to_long_double());
    return out;
}

Bounded gauss_sum_shifted(std::int64_t p, std::int64_t q, unsigned precision_bits) {
    Bounded g = gauss_sum(p, q, precision_bits + 8);
    Bounded shifted = g + Bounded::from_rational(Rational(BigInt(q), BigInt(p)) - Rational(1), precision_bits + 8);
    Bounded out{shifted.value.rounded_to(precision_bits), shifted.error};
    out.error += unit_roundoff(precision_bits) * std::fabs(out.value.to_long_double());
    return out;
}

TruncationReport series_oracle(std::int64_t p, std::int64_t q, std::int64_t terms, unsigned precision_bits) {
    require_proper_fraction(p, q);
    require_precision(precision_bits);
    if (terms < 1) throw InvalidInput("series oracle needs N >= 1");
    // Each term is (p - q) / ((n+1)(p + n q)); the denominator is an exact
    // integer below 2^63 and converts to long double without rounding.
    const BigInt top = BigInt(terms) * (BigInt(p) + BigInt(terms) * q);
    if (top > std::numeric_limits<std::int64_t>::max()) throw InvalidInput("series oracle term count too large");

    const auto diff = static_cast<long double>(p - q);
    CompensatedSum<long double> acc;
    for (std::int64_t n = 0; n < terms; ++n) {
        const std::int64_t den = (n + 1) * (p + n * q);
        acc.add(diff / static_cast<long double>(den));
    }
    const long double u = std::numeric_limits<long double>::epsilon() / 2;
    const long double bound =
        (3.0L * u + 4.0L * static_cast<long double>(terms) * u * u) * acc.abs_total();

    TruncationReport report;
    report.terms_used = terms;
    report.partial = Real::from_long_double(acc.value(), 64);
    report.rounding_error = 2.0L * bound;
    report.tail_low = Real::from_rational(-Rational(BigInt(q), BigInt(p) * terms), precision_bits);
    report.tail_high = Real::from_rational(-Rational(BigInt(q - p), BigInt(q) * (terms + 1)), precision_bits);
    return report;
}

}  // namespace mengoli
