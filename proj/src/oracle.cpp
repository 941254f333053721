#include "mengoli/oracle.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "mengoli/error.hpp"

namespace mengoli {

namespace {

constexpr unsigned kIntervalPrecision = 256;

Real with_margin(const Real& partial, const Real& tail, long double margin) {
    Real r = partial.rounded_to(kIntervalPrecision);
    r += tail;
    r += Real::from_long_double(margin, kIntervalPrecision);
    return r;
}

}  // namespace

Real TruncationReport::low() const { return with_margin(partial, tail_low, -rounding_error); }

Real TruncationReport::high() const { return with_margin(partial, tail_high, rounding_error); }

TruncationReport truncated_sum(const ProductSeriesSpec& spec, std::int64_t terms, SumOrder order) {
    if (terms < 2) throw InvalidInput("oracle needs at least N = 2 terms");
    const auto shifts = spec.shifts();
    const std::size_t k = shifts.size();

    // Factor i at index n is (n*den_i + num_i)/den_i. Numerators are exact
    // integers below 2^63, so converting them to long double is exact.
    std::vector<std::int64_t> nums(k);
    std::vector<std::int64_t> dens(k);
    BigInt den_product = 1;
    for (std::size_t i = 0; i < k; ++i) {
        nums[i] = to_int64(shifts[i].num(), "shift numerator");
        dens[i] = to_int64(shifts[i].den(), "shift denominator");
        den_product *= shifts[i].den();
        const BigInt largest = BigInt(terms) * dens[i] + nums[i];
        if (largest > std::numeric_limits<std::int64_t>::max() / 2) {
            throw InvalidInput("oracle term count too large for the shift denominators");
        }
    }
    const long double den_ld = den_product.convert_to<long double>();
    const bool den_exact = den_product < BigInt(1) << 64;

    CompensatedSum<long double> acc;
    auto add_term = [&](std::int64_t n) {
        long double prod = 1.0L;
        for (std::size_t i = 0; i < k; ++i) prod *= static_cast<long double>(n * dens[i] + nums[i]);
        acc.add(den_ld / prod);
    };
    if (order == SumOrder::Forward) {
        for (std::int64_t n = 1; n <= terms; ++n) add_term(n);
    } else {
        for (std::int64_t n = terms; n >= 1; --n) add_term(n);
    }

    // Per term: k-1 products, one quotient, and possibly one rounding of the
    // numerator. Neumaier summation adds at most 2u|S| + 4 N u^2 sum|t|.
    const long double u = std::numeric_limits<long double>::epsilon() / 2;
    const long double per_term = static_cast<long double>(k + (den_exact ? 0 : 1)) + 2.0L;
    const long double bound =
        (per_term * u + 4.0L * static_cast<long double>(terms) * u * u) * acc.abs_total();

    TruncationReport report;
    report.terms_used = terms;
    report.partial = Real::from_long_double(acc.value(), 64);
    report.rounding_error = 2.0L * bound;

    const unsigned prec = std::max(spec.precision_bits(), kDefaultPrecisionBits);
    const auto k1 = static_cast<std::int64_t>(k - 1);
    auto integral_bound = [&](const Rational& base) {
        Rational p(1);
        for (std::int64_t i = 0; i < k1; ++i) p *= base;
        return Real::from_rational(Rational(1) / (p * Rational(k1)), prec);
    };
    report.tail_high = integral_bound(Rational(terms) + spec.min_shift());
    report.tail_low = integral_bound(Rational(terms + 1) + spec.max_shift());
    return report;
}

VerificationVerdict verify(const ProductSeriesSpec& spec, const EvalResult& closed, std::int64_t terms) {
    return compare(closed, truncated_sum(spec, terms));
}

VerificationVerdict compare(const EvalResult& closed, const TruncationReport& oracle) {
    VerificationVerdict verdict;
    verdict.oracle = oracle;
    const Real err = Real::from_long_double(closed.error_bound, kIntervalPrecision);
    const Real lo = closed.value.rounded_to(kIntervalPrecision) - err;
    const Real hi = closed.value.rounded_to(kIntervalPrecision) + err;
    const Real below = verdict.oracle.low() - hi;
    const Real above = lo - verdict.oracle.high();
    verdict.separation = below > above ? below : above;
    verdict.pass = verdict.separation.sign() <= 0;
    return verdict;
}

}  // namespace mengoli
