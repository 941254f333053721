#pragma once

#include <cstdint>

#include "mengoli/oracle.hpp"
#include "mengoli/real.hpp"

namespace mengoli {

/// Gauss's finite formula for psi(p/q) + gamma, valid for 0 < p < q:
///
///   -(pi/2) cot(pi p/q) - ln q + sum_{n=1}^{q-1} ln(2 sin(pi n/q)) cos(2 pi n p/q)
///
/// which equals sum_{n>=0} (1/(n+1) - q/(p+nq)). The fraction p/q is used
/// as given, not reduced; reduced and unreduced inputs agree numerically.
Bounded gauss_sum(std::int64_t p, std::int64_t q, unsigned precision_bits = kDefaultPrecisionBits);

/// The same series started at n = 1: gauss_sum(p, q) - 1 + q/p.
Bounded gauss_sum_shifted(std::int64_t p, std::int64_t q, unsigned precision_bits = kDefaultPrecisionBits);

/// Partial sum of sum_{n=0}^{N-1} (1/(n+1) - q/(p+nq)) with a bracket on the
/// (negative) tail: -(q/p)/N <= tail <= -(q-p)/(q(N+1)).
TruncationReport series_oracle(std::int64_t p, std::int64_t q, std::int64_t terms,
                               unsigned precision_bits = kDefaultPrecisionBits);

}  // namespace mengoli
