#pragma once

#include <cstdint>

#include "mengoli/eval_result.hpp"
#include "mengoli/rational.hpp"
#include "mengoli/real.hpp"

namespace mengoli {

// Closed forms for S(q1, q2) = sum_{n>=1} 1/((n + q1)(n + q2)), q1 != q2.
//
// Shifts are written q = a + x/w with integer a and 0 <= x < w. All forms
// below are algebraically (H(q1) - H(q2)) / (q1 - q2), where H is the
// generalized harmonic number; they differ in how H is assembled.

/// Integer shifts a, b >= 0, a != b: (H_b - H_a) / (b - a), exactly.
Rational pair_sum_int(std::int64_t a, std::int64_t b);

/// Both shifts strictly fractional over a common denominator w:
/// q1 = a + x/w, q2 = b + y/w with 0 < x, y < w.
///
///   w/(x + wa - y - wb) * [ (pi/2)(cot(pi y/w) - cot(pi x/w))
///       + sum_{n=1}^{w-1} ln(2 sin(pi n/w)) (cos(2 pi n x/w) - cos(2 pi n y/w))
///       + w/x - w/y + C(a, x, w) - C(b, y, w) ]
///
/// where C is correction_sum.
EvalResult pair_sum_prop12(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y, std::int64_t w,
                           unsigned precision_bits = kDefaultPrecisionBits);

/// q1 = a + x/w with 0 < x < w, q2 = b a non-negative integer:
///
///   w/(x + wa - wb) * [ -(pi/2) cot(pi x/w) - ln w
///       + sum_{n=1}^{w-1} ln(2 sin(pi n/w)) cos(2 pi n x/w) + w/x + C(a, x, w) - H_b ]
EvalResult pair_sum_prop13(std::int64_t a, std::int64_t x, std::int64_t w, std::int64_t b,
                           unsigned precision_bits = kDefaultPrecisionBits);

/// Unified form over 0 <= x, y < w. Every term tied to a fractional part is
/// present only when that part is nonzero, so x = y = 0 reduces to the
/// integer form and y = 0 to the mixed form.
EvalResult pair_sum_prop14(std::int64_t a, std::int64_t x, std::int64_t b, std::int64_t y, std::int64_t w,
                           unsigned precision_bits = kDefaultPrecisionBits);

/// H(q) = sum_{n>=1} (1/n - 1/(n+q)) = psi(1+q) + gamma, assembled from the
/// Gauss sum at the reduced fractional part plus exact recurrence terms.
/// Exact (error 0) for non-negative integers.
Bounded generalized_harmonic(const Rational& q, unsigned precision_bits = kDefaultPrecisionBits);

/// (H(q2) - H(q1)) / (q2 - q1), each H evaluated independently.
EvalResult pair_sum_digamma(const Rational& q1, const Rational& q2, unsigned precision_bits = kDefaultPrecisionBits);

/// Dispatches to the integer, fractional, or mixed closed form. In the mixed
/// case the fractional shift is moved to the first slot (the summand is
/// symmetric). Rejects equal shifts and inadmissible values.
EvalResult pair_sum(const Rational& q1, const Rational& q2, unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace mengoli
