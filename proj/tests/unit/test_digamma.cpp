#include <cmath>

#include <gtest/gtest.h>

#include "mengoli/digamma.hpp"
#include "mengoli/error.hpp"
#include "reference.hpp"

using mengoli::InvalidInput;
using mengoli::Real;

namespace {

// -2 ln 2 at 50 digits
const reference::Ref kMinusTwoLn2 = -2 * boost::multiprecision::log(reference::Ref(2));

}  // namespace

TEST(GaussSum, OneHalf) {
    const auto g = mengoli::gauss_sum(1, 2);
    EXPECT_LE(reference::distance(g.value, kMinusTwoLn2), g.error + 1e-45L);
}

TEST(GaussSum, OneQuarter) {
    const auto g = mengoli::gauss_sum(1, 4);
    const reference::Ref expected = -reference::pi() / 2 - 3 * boost::multiprecision::log(reference::Ref(2));
    EXPECT_LE(reference::distance(g.value, expected), g.error + 1e-45L);
}

TEST(GaussSum, MatchesReferenceDigammaOnGrid) {
    for (std::int64_t q = 2; q <= 30; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            const auto g = mengoli::gauss_sum(p, q, 160);
            ASSERT_LE(reference::distance(g.value, reference::gauss(p, q)), g.error + 1e-45L) << p << '/' << q;
            ASSERT_LT(g.error, 1e-40L);
        }
    }
}

TEST(GaussSum, ReflectionPartnerMatchesOracleSum) {
    const auto sum = mengoli::gauss_sum(1, 5).value + mengoli::gauss_sum(4, 5).value;
    const auto o1 = mengoli::series_oracle(1, 5, 1'000'000);
    const auto o4 = mengoli::series_oracle(4, 5, 1'000'000);
    EXPECT_LE(o1.low() + o4.low(), sum);
    EXPECT_GE(o1.high() + o4.high(), sum);
}

TEST(GaussSum, ReflectionCancelsCotTerms) {
    // g(p) + g(q-p) + 2 ln q = sum ln(2 sin) (cos(2 pi n p/q) + cos(2 pi n (q-p)/q)),
    // and the two cosines coincide, so the right side is 2 sum ln(2 sin) cos.
    using boost::multiprecision::cos;
    using boost::multiprecision::log;
    using boost::multiprecision::sin;
    const reference::Ref pi = reference::pi();
    for (std::int64_t q = 3; q <= 12; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            const Real lhs = mengoli::gauss_sum(p, q).value + mengoli::gauss_sum(q - p, q).value;
            reference::Ref rhs = -2 * log(reference::Ref(q));
            for (std::int64_t n = 1; n < q; ++n) rhs += 2 * log(2 * sin(pi * n / q)) * cos(2 * pi * n * p / q);
            ASSERT_LT(reference::distance(lhs, rhs), 1e-35L) << p << '/' << q;
        }
    }
}

TEST(GaussSum, ReducedAndUnreducedAgree) {
    for (std::int64_t q = 2; q <= 12; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            const auto g = mengoli::gauss_sum(p, q);
            for (std::int64_t m = 2; m <= 4; ++m) {
                const auto h = mengoli::gauss_sum(m * p, m * q);
                const long double gap = std::fabs((g.value - h.value).to_long_double());
                ASSERT_LE(gap, g.error + h.error) << p << '/' << q << " x" << m;
            }
        }
    }
}

TEST(GaussSum, PrecisionDoublingChangesLittle) {
    for (const unsigned bits : {64u, 128u, 256u}) {
        for (std::int64_t q = 2; q <= 12; ++q) {
            for (std::int64_t p = 1; p < q; ++p) {
                const Real lo = mengoli::gauss_sum(p, q, bits).value;
                const Real hi = mengoli::gauss_sum(p, q, 2 * bits).value;
                const Real gap = mengoli::abs(lo - hi);
                ASSERT_LT(gap, Real::from_long_double(std::ldexp(1.0L, -static_cast<int>(bits) / 2), 64));
            }
        }
    }
}

TEST(GaussSum, RejectsOutOfRange) {
    EXPECT_THROW(mengoli::gauss_sum(0, 3), InvalidInput);
    EXPECT_THROW(mengoli::gauss_sum(3, 3), InvalidInput);
    EXPECT_THROW(mengoli::gauss_sum(4, 3), InvalidInput);
    EXPECT_THROW(mengoli::gauss_sum(-1, 3), InvalidInput);
    EXPECT_THROW(mengoli::gauss_sum(1, 3, 32), InvalidInput);
}

TEST(GaussSumShifted, Examples) {
    const auto s = mengoli::gauss_sum_shifted(1, 2);
    EXPECT_LE(reference::distance(s.value, kMinusTwoLn2 + 1), s.error + 1e-45L);

    const auto s13 = mengoli::gauss_sum_shifted(1, 3);
    const auto g13 = mengoli::gauss_sum(1, 3);
    EXPECT_LE(reference::distance(s13.value, reference::from_real(g13.value) + 2), s13.error + g13.error);
}

TEST(GaussSumShifted, UnreducedInputAccepted) {
    // 2/4 is not reduced; the formula still applies and must match 1/2.
    const auto a = mengoli::gauss_sum_shifted(2, 4);
    const auto b = mengoli::gauss_sum_shifted(1, 2);
    EXPECT_LE(std::fabs((a.value - b.value).to_long_double()), a.error + b.error);
    EXPECT_THROW(mengoli::gauss_sum_shifted(4, 4), InvalidInput);
}

TEST(SeriesOracle, SingleTerm) {
    const auto r = mengoli::series_oracle(1, 2, 1);
    EXPECT_EQ(r.partial, Real::from_int(-1, 64));
    EXPECT_EQ(r.terms_used, 1);
}

TEST(SeriesOracle, BracketsKnownValues) {
    const auto r = mengoli::series_oracle(1, 2, 1'000'000);
    EXPECT_TRUE(r.contains(Real::from_string(kMinusTwoLn2.str(50), 192)));
    EXPECT_LT(std::fabs((r.partial - mengoli::gauss_sum(1, 2).value).to_long_double()), 1e-5L);

    const auto r34 = mengoli::series_oracle(3, 4, 1'000'000);
    EXPECT_TRUE(r34.contains(mengoli::gauss_sum(3, 4).value));
    EXPECT_LT(std::fabs((r34.partial - mengoli::gauss_sum(3, 4).value).to_long_double()), 1e-5L);
}

TEST(SeriesOracle, RejectsBadInput) {
    EXPECT_THROW(mengoli::series_oracle(1, 2, 0), InvalidInput);
    EXPECT_THROW(mengoli::series_oracle(2, 2, 10), InvalidInput);
}
