#include "mengoli/sampling.hpp"

#include "mengoli/error.hpp"

namespace mengoli {

Rational random_shift(std::mt19937_64& rng, std::int64_t max_den, std::int64_t upper) {
    if (max_den < 1 || upper < 1) throw InvalidInput("random shift needs max_den >= 1 and upper >= 1");
    const auto den = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(max_den)) + 1;
    // numerators strictly between -den and upper*den
    const auto span = static_cast<std::uint64_t>((upper + 1) * den - 1);
    const auto num = -den + 1 + static_cast<std::int64_t>(rng() % span);
    return Rational(BigInt(num), BigInt(den));
}

std::pair<Rational, Rational> random_shift_pair(std::mt19937_64& rng, std::int64_t max_den, std::int64_t upper) {
    Rational q1 = random_shift(rng, max_den, upper);
    Rational q2 = random_shift(rng, max_den, upper);
    while (q2 == q1) q2 = random_shift(rng, max_den, upper);
    return {std::move(q1), std::move(q2)};
}

}  // namespace mengoli
