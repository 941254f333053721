#pragma once

#include <cstdint>
#include <random>
#include <utility>

#include "mengoli/rational.hpp"

namespace mengoli {

/// Admissible shift num/den with 1 <= den <= max_den and -1 < num/den < upper.
/// Uses raw mt19937_64 output (not a std distribution) so a seed yields the
/// same stream on every standard library.
Rational random_shift(std::mt19937_64& rng, std::int64_t max_den, std::int64_t upper = 8);

/// Two distinct admissible shifts.
std::pair<Rational, Rational> random_shift_pair(std::mt19937_64& rng, std::int64_t max_den, std::int64_t upper = 8);

}  // namespace mengoli
