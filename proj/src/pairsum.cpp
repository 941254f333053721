#include "mengoli/pairsum.hpp"

#include <bit>
#include <cmath>
#include <algorithm>

#include "mengoli/digamma.hpp"
#include "mengoli/error.hpp"
#include "mengoli/series_spec.hpp"

namespace mengoli {

namespace {

unsigned working_precision(unsigned precision_bits, std::int64_t w) {
    return precision_bits + 16 + 2 * static_cast<unsigned>(std::bit_width(static_cast<std::uint64_t>(w)));
}

EvalResult finish(const Bounded& b, unsigned precision_bits, Method method) {
    EvalResult r;
    r.value = b.value.rounded_to(precision_bits);
    r.method = method;
    r.error_bound = b.error + unit_roundoff(precision_bits) * std::fabs(r.value.to_long_double());
    return r;
}

EvalResult exact_result(const Rational& exact, unsigned precision_bits, Method method) {
    Bounded b = Bounded::from_rational(exact, precision_bits);
    return {std::move(b.value), method, b.error, exact};
}

Rational shift_of(std::int64_t a, std::int64_t x, std::int64_t w) {
    return Rational(a) + Rational(BigInt(x), BigInt(w));
}

void require_distinct(const Rational& q1, const Rational& q2) {
    if (q1 == q2) throw InvalidInput("shifts must be distinct (equal shifts give sum 1/(n+q)^2, not supported)");
}

// sum_{n=1}^{w-1} ln(2 sin(pi n/w)) (gx cos(2 pi n x/w) - gy cos(2 pi n y/w)),
// with each cosine present only when its guard is set.
Bounded log_sine_cosine_sum(std::int64_t x, bool gx, std::int64_t y, bool gy, std::int64_t w, unsigned wp) {
    Bounded total{Real(wp), 0.0L};
    if (!gx && !gy) return total;
    for (std::int64_t n = 1; n < w; ++n) {
        Bounded c{Real(wp), 0.0L};
        if (gx) c = c + cos_pi(2 * ((n * x) % w), w, wp);
        if (gy) c = c - cos_pi(2 * ((n * y) % w), w, wp);
        if (c.value.is_zero() && c.error == 0.0L) continue;
        total = total + log(sin_pi(n, w, wp) * Rational(2)) * c;
    }
    return total;
}

Bounded half_pi(unsigned wp) { return pi_bounded(wp) * Rational(BigInt(1), BigInt(2)); }

}  // namespace

Rational pair_sum_int(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw InvalidInput("integer pair sum requires a, b >= 0");
    if (a == b) throw InvalidInput("shifts must be distinct (a == b)");
    return (harmonic(b) - harmonic(a)) / Rational(b - a);
}

EvalResult pair_sum_prop12(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y, std::int64_t w,
                           unsigned precision_bits) {
    require_precision(precision_bits);
    if (w < 2 || x <= 0 || x >= w || y <= 0 || y >= w) throw InvalidInput("fractional pair sum requires 0 < x, y < w");
    const Rational q1 = shift_of(a, x, w);
    const Rational q2 = shift_of(b, y, w);
    check_admissible(q1);
    check_admissible(q2);
    require_distinct(q1, q2);

    const unsigned wp = working_precision(precision_bits, w);
    const Bounded cot_part = half_pi(wp) * (cot_pi(y, w, wp) - cot_pi(x, w, wp));
    const Bounded trig_sum = log_sine_cosine_sum(x, true, y, true, w, wp);
    const Rational rational_part = Rational(BigInt(w), BigInt(x)) - Rational(BigInt(w), BigInt(y)) +
                                   correction_sum(a, x, w) - correction_sum(b, y, w);
    const Bounded bracket = cot_part + trig_sum + Bounded::from_rational(rational_part, wp);
    const Rational prefactor(BigInt(w), BigInt(x) + BigInt(w) * a - y - BigInt(w) * b);
    return finish(bracket * prefactor, precision_bits, Method::Prop12);
}

EvalResult pair_sum_prop13(std::int64_t a, std::int64_t x, std::int64_t w, std::int64_t b, unsigned precision_bits) {
    require_precision(precision_bits);
    if (w < 2 || x <= 0 || x >= w) throw InvalidInput("mixed pair sum requires 0 < x < w");
    if (b < 0) throw InvalidInput("mixed pair sum requires the integer shift b >= 0");
    const Rational q1 = shift_of(a, x, w);
    check_admissible(q1);

    const unsigned wp = working_precision(precision_bits, w);
    const Bounded cot_part = -(half_pi(wp) * cot_pi(x, w, wp));
    const Bounded log_w = log(Bounded::from_rational(Rational(w), wp));
    const Bounded trig_sum = log_sine_cosine_sum(x, true, 0, false, w, wp);
    const Rational rational_part = Rational(BigInt(w), BigInt(x)) + correction_sum(a, x, w) - harmonic(b);
    const Bounded bracket = cot_part - log_w + trig_sum + Bounded::from_rational(rational_part, wp);
    const Rational prefactor(BigInt(w), BigInt(x) + BigInt(w) * a - BigInt(w) * b);
    return finish(bracket * prefactor, precision_bits, Method::Prop13);
}

EvalResult pair_sum_prop14(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y, std::int64_t w,
                           unsigned precision_bits) {
    require_precision(precision_bits);
    if (w < 1 || x < 0 || x >= w || y < 0 || y >= w) throw InvalidInput("unified pair sum requires 0 <= x, y < w");
    const Rational q1 = shift_of(a, x, w);
    const Rational q2 = shift_of(b, y, w);
    check_admissible(q1);
    check_admissible(q2);
    require_distinct(q1, q2);

    const bool gx = x > 0;
    const bool gy = y > 0;
    const unsigned wp = working_precision(precision_bits, w);
    Bounded bracket{Real(wp), 0.0L};
    if (gx || gy) {
        Bounded cot_diff{Real(wp), 0.0L};
        if (gy) cot_diff = cot_diff + cot_pi(y, w, wp);
        if (gx) cot_diff = cot_diff - cot_pi(x, w, wp);
        bracket = half_pi(wp) * cot_diff;
        if (gx != gy) {
            const Bounded log_w = log(Bounded::from_rational(Rational(w), wp));
            bracket = gx ? bracket - log_w : bracket + log_w;
        }
        bracket = bracket + log_sine_cosine_sum(x, gx, y, gy, w, wp);
    }
    Rational rational_part = correction_sum(a, x, w) - correction_sum(b, y, w);
    if (gx) rational_part += Rational(BigInt(w), BigInt(x));
    if (gy) rational_part -= Rational(BigInt(w), BigInt(y));
    bracket = bracket + Bounded::from_rational(rational_part, wp);
    const Rational prefactor(BigInt(w), BigInt(x) + BigInt(w) * a - y - BigInt(w) * b);
    // with both guards off only the harmonic corrections survive
    if (!gx && !gy) return exact_result(rational_part * prefactor, precision_bits, Method::Prop14);
    return finish(bracket * prefactor, precision_bits, Method::Prop14);
}

Bounded generalized_harmonic(const Rational& q, unsigned precision_bits) {
    check_admissible(q);
    require_precision(precision_bits);
    const ShiftDecomposition d = decompose(q);
    const std::int64_t a = to_int64(d.a, "integer part");
    if (d.x == 0) return Bounded::from_rational(harmonic(a), precision_bits);
    const std::int64_t x = to_int64(d.x, "fractional numerator");
    const std::int64_t w = to_int64(d.w, "fractional denominator");
    // psi(1 + x/w) = psi(x/w) + w/x, then step the integer part by recurrence.
    const Rational recurrence = Rational(BigInt(w), BigInt(x)) + correction_sum(a, x, w);
    return gauss_sum(x, w, precision_bits) + Bounded::from_rational(recurrence, precision_bits);
}

EvalResult pair_sum_digamma(const Rational& q1, const Rational& q2, unsigned precision_bits) {
    require_precision(precision_bits);
    check_admissible(q1);
    check_admissible(q2);
    require_distinct(q1, q2);
    const Rational gap = q2 - q1;
    if (q1.is_integer() && q2.is_integer()) {
        const Rational exact = (harmonic(to_int64(q2.num(), "shift")) - harmonic(to_int64(q1.num(), "shift"))) / gap;
        return exact_result(exact, precision_bits, Method::DigammaRecurrence);
    }
    const std::int64_t w = to_int64(std::max(q1.den(), q2.den()), "denominator");
    const unsigned wp = working_precision(precision_bits, w);
    const Bounded diff = generalized_harmonic(q2, wp) - generalized_harmonic(q1, wp);
    return finish(diff * (Rational(1) / gap), precision_bits, Method::DigammaRecurrence);
}

EvalResult pair_sum(const Rational& q1, const Rational& q2, unsigned precision_bits) {
    require_precision(precision_bits);
    check_admissible(q1);
    check_admissible(q2);
    require_distinct(q1, q2);

    if (q1.is_integer() && q2.is_integer()) {
        const Rational exact = pair_sum_int(to_int64(q1.num(), "shift"), to_int64(q2.num(), "shift"));
        return exact_result(exact, precision_bits, Method::Prop11);
    }
    if (!q1.is_integer() && !q2.is_integer()) {
        const BigInt w = boost::multiprecision::lcm(q1.den(), q2.den());
        const ShiftDecomposition d1 = decompose(q1);
        const ShiftDecomposition d2 = decompose(q2);
        return pair_sum_prop12(to_int64(d1.a, "integer part"), to_int64(d1.x * (w / d1.w), "numerator"),
                               to_int64(d2.a, "integer part"), to_int64(d2.x * (w / d2.w), "numerator"),
                               to_int64(w, "common denominator"), precision_bits);
    }
    const Rational& frac = q1.is_integer() ? q2 : q1;
    const Rational& whole = q1.is_integer() ? q1 : q2;
    const ShiftDecomposition d = decompose(frac);
    return pair_sum_prop13(to_int64(d.a, "integer part"), to_int64(d.x, "numerator"), to_int64(d.w, "denominator"),
                           to_int64(whole.num(), "integer shift"), precision_bits);
}

}  // namespace mengoli
