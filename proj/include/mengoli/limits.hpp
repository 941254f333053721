#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "mengoli/eval_result.hpp"
#include "mengoli/rational.hpp"
#include "mengoli/real.hpp"

namespace mengoli {

enum class ZetaKind { Zeta2, Zeta4 };

/// Parses "2" / "4"; anything else is outside the supported scope.
ZetaKind zeta_kind_from_s(int s);
std::string_view zeta_target_name(ZetaKind kind);

/// w (w/2 - (pi/2) cot(pi/w)), the two-factor sum over shifts -1/w, 1/w.
/// The bracket loses about 2 log2(w) bits to cancellation; that many guard
/// bits are added internally.
EvalResult zeta2_term(std::int64_t w, unsigned precision_bits = kDefaultPrecisionBits);

/// Four-factor sum over -2/w, -1/w, 1/w, 2/w (same as zeta4_closed_form).
EvalResult zeta4_term(std::int64_t w, unsigned precision_bits = kDefaultPrecisionBits);

EvalResult zeta_term(ZetaKind kind, std::int64_t w, unsigned precision_bits = kDefaultPrecisionBits);

struct LimitEstimate {
    std::vector<std::pair<std::int64_t, Real>> raw_terms;
    Real extrapolated;
    /// log(|d_{i-1}| / |d_i|) / log(w_i / w_{i-1}) from the last three terms,
    /// where d_i are successive differences. NaN with fewer than 3 terms.
    double order_estimate = 0.0;
    /// Successive differences vanished (to working precision); the sequence
    /// is already at its limit and order_estimate is reported as 0.
    bool saturated = false;
    std::optional<Real> target_hint;
};

/// Richardson extrapolation in 1/w^2: eliminates the error terms
/// 1/w^2, 1/w^4, ..., 1/w^(2 order) from values sampled at increasing w.
/// Requires at least order + 1 terms with strictly increasing w.
LimitEstimate richardson(std::span<const std::pair<std::int64_t, Real>> terms, int order);

/// Local convergence orders log2|t(w_i) - target| - log2|t(w_{i+1}) - target|,
/// normalized by log2(w_{i+1}/w_i).
std::vector<double> empirical_orders(std::span<const std::pair<std::int64_t, Real>> terms, const Real& target);

/// The limit w -> infinity as an exact multiple of a power of pi.
struct SeriesLimit {
    Rational coefficient;
    int pi_power = 0;
    Real value;
};

/// Substitutes the Laurent series cot x = 1/x - x/3 - x^3/45 - ... into the
/// closed-form term, checks that every growing power of w cancels exactly,
/// and returns the constant term (pi^2/6 for Zeta2, pi^4/90 for Zeta4).
SeriesLimit cot_expansion_limit(ZetaKind kind, unsigned precision_bits = kDefaultPrecisionBits);

/// Evaluates zeta_term on `grid`, extrapolates with `order` levels, and
/// attaches the cot-series limit as the target hint.
LimitEstimate estimate_zeta_limit(ZetaKind kind, std::span<const std::int64_t> grid, int order,
                                  unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace mengoli
