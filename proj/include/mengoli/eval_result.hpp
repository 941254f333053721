#pragma once

#include <optional>
#include <string_view>

#include "mengoli/rational.hpp"
#include "mengoli/real.hpp"

namespace mengoli {

/// Which closed form (or fallback) produced a value.
enum class Method {
    Prop11,             // integer shifts, harmonic difference
    Prop12,             // both shifts fractional
    Prop13,             // one fractional shift, one non-negative integer
    Prop14,             // unified form with indicator guards
    DigammaRecurrence,  // per-shift Gauss sum plus exact recurrence terms
    PartialFractions,   // weighted combination of two-factor leaves
    ClosedForm,         // direct evaluation of a derived closed expression
    Oracle,             // truncated summation
};

std::string_view method_name(Method m);

struct EvalResult {
    Real value;
    Method method = Method::Oracle;
    /// Bound on |value - true sum|.
    long double error_bound = 0.0L;
    /// Set when the value is known exactly.
    std::optional<Rational> exact;
};

}  // namespace mengoli
