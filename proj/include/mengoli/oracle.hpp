#pragma once

#include <cstdint>

#include "mengoli/eval_result.hpp"
#include "mengoli/real.hpp"
#include "mengoli/series_spec.hpp"

namespace mengoli {

/// Partial sum of a series plus a bracket on the omitted tail.
///
/// The true sum lies in [low(), high()], where the endpoints also absorb the
/// floating-point error of the partial sum (`rounding_error`).
struct TruncationReport {
    Real partial;
    Real tail_low;
    Real tail_high;
    std::int64_t terms_used = 0;
    long double rounding_error = 0.0L;

    Real low() const;
    Real high() const;
    bool contains(const Real& v) const { return low() <= v && v <= high(); }
};

enum class SumOrder { Forward, Backward };

/// Brute-force sum_{n=1}^{N} 1/prod(n + q_i) in compensated extended
/// precision. The tail is bracketed by the integral test:
///   1/((k-1)(N+1+q_max)^(k-1)) <= tail <= 1/((k-1)(N+q_min)^(k-1)).
TruncationReport truncated_sum(const ProductSeriesSpec& spec, std::int64_t terms, SumOrder order = SumOrder::Forward);

/// Outcome of comparing a closed-form value against the oracle.
struct VerificationVerdict {
    bool pass = false;
    /// Distance between [value - error_bound, value + error_bound] and the
    /// oracle interval; zero or negative means they intersect.
    Real separation;
    TruncationReport oracle;
};

/// Passes iff [value - error_bound, value + error_bound] meets the oracle
/// interval [partial + tail_low, partial + tail_high] (widened by rounding).
VerificationVerdict verify(const ProductSeriesSpec& spec, const EvalResult& closed, std::int64_t terms);

/// Same comparison against an oracle report computed earlier.
VerificationVerdict compare(const EvalResult& closed, const TruncationReport& oracle);

/// Neumaier-compensated accumulator.
template <typename T>
class CompensatedSum {
public:
    void add(T x) {
        const T t = sum_ + x;
        if (abs_(sum_) >= abs_(x)) {
            comp_ += (sum_ - t) + x;
        } else {
            comp_ += (x - t) + sum_;
        }
        sum_ = t;
        abs_total_ += abs_(x);
    }

    T value() const { return sum_ + comp_; }
    /// Sum of |x| over all added terms.
    T abs_total() const { return abs_total_; }

private:
    static T abs_(T v) { return v < T(0) ? -v : v; }

    T sum_ = T(0);
    T comp_ = T(0);
    T abs_total_ = T(0);
};

}  // namespace mengoli
