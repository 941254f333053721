#include <random>

#include <gtest/gtest.h>

#include "mengoli/error.hpp"
#include "mengoli/rational.hpp"

using mengoli::BigInt;
using mengoli::InvalidInput;
using mengoli::Rational;

TEST(Normalize, ReducesAndFixesSign) {
    EXPECT_EQ(mengoli::normalize(2, 4), Rational(1, 2));
    EXPECT_EQ(mengoli::normalize(3, -6).str(), "-1/2");
    const Rational zero = mengoli::normalize(0, 7);
    EXPECT_EQ(zero.num(), 0);
    EXPECT_EQ(zero.den(), 1);
}

TEST(Normalize, ZeroDenominatorThrows) {
    EXPECT_THROW(mengoli::normalize(1, 0), InvalidInput);
    EXPECT_THROW(Rational::parse("3/0"), InvalidInput);
}

TEST(Rational, ParseAcceptsFractionsAndIntegers) {
    EXPECT_EQ(Rational::parse("-1/2"), Rational(-1, 2));
    EXPECT_EQ(Rational::parse(" 6/4 "), Rational(3, 2));
    EXPECT_EQ(Rational::parse("7"), Rational(7));
    EXPECT_EQ(Rational::parse("+3/9"), Rational(1, 3));
}

TEST(Rational, ParseRejectsGarbage) {
    for (const char* bad : {"", "/", "1/", "/2", "1/x", "a", "1/2/3", "1.5", "1/-2", "--1"}) {
        EXPECT_THROW(Rational::parse(bad), InvalidInput) << bad;
    }
}

TEST(Rational, ArithmeticAndOrdering) {
    const Rational a(1, 3);
    const Rational b(1, 6);
    EXPECT_EQ(a + b, Rational(1, 2));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 18));
    EXPECT_EQ(a / b, Rational(2));
    EXPECT_LT(b, a);
    EXPECT_LT(Rational(-7, 2), Rational(-3));
    EXPECT_THROW(a / Rational(0), InvalidInput);
}

TEST(Rational, FloorUsesFloorSemantics) {
    EXPECT_EQ(Rational(-1, 7).floor(), -1);
    EXPECT_EQ(Rational(9, 4).floor(), 2);
    EXPECT_EQ(Rational(-8, 4).floor(), -2);
    EXPECT_EQ(Rational(0).floor(), 0);
}

TEST(Decompose, Examples) {
    const auto d1 = mengoli::decompose(Rational(-1, 7));
    EXPECT_EQ(d1.a, -1);
    EXPECT_EQ(d1.x, 6);
    EXPECT_EQ(d1.w, 7);

    const auto d2 = mengoli::decompose(Rational(5));
    EXPECT_EQ(d2.a, 5);
    EXPECT_EQ(d2.x, 0);
    EXPECT_EQ(d2.w, 1);

    const auto d3 = mengoli::decompose(Rational(9, 4));
    EXPECT_EQ(d3.a, 2);
    EXPECT_EQ(d3.x, 1);
    EXPECT_EQ(d3.w, 4);
}

TEST(Decompose, RoundTripOnRandomRationals) {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 2000; ++i) {
        const auto num = static_cast<std::int64_t>(rng() % 20001) - 10000;
        const auto den = static_cast<std::int64_t>(rng() % 97) + 1;
        const Rational r(num, den);
        const auto d = mengoli::decompose(r);
        ASSERT_EQ(d.value(), r) << r;
        ASSERT_GE(d.x, 0);
        ASSERT_LT(d.x, d.w);
        ASSERT_EQ(d.w, r.is_integer() ? BigInt(1) : r.den());
    }
}

TEST(Harmonic, SmallValues) {
    EXPECT_EQ(mengoli::harmonic(0), Rational(0));
    EXPECT_EQ(mengoli::harmonic(1), Rational(1));
    EXPECT_EQ(mengoli::harmonic(3), Rational(11, 6));
    EXPECT_EQ(mengoli::harmonic(5), Rational(137, 60));
    EXPECT_THROW(mengoli::harmonic(-1), InvalidInput);
}

TEST(Harmonic, SuccessiveDifferenceIsReciprocal) {
    Rational prev = mengoli::harmonic(0);
    for (std::int64_t n = 1; n <= 200; ++n) {
        const Rational cur = mengoli::harmonic(n);
        ASSERT_EQ(cur - prev, Rational(1, n)) << n;
        prev = cur;
    }
}

TEST(CorrectionSum, Examples) {
    EXPECT_EQ(mengoli::correction_sum(0, 3, 7), Rational(0));
    EXPECT_EQ(mengoli::correction_sum(1, 1, 2), Rational(2, 3));
    EXPECT_EQ(mengoli::correction_sum(-1, 6, 7), Rational(-7, 6));
}

TEST(CorrectionSum, RejectsNegativeIntegerShift) {
    EXPECT_THROW(mengoli::correction_sum(-2, 0, 5), InvalidInput);
    EXPECT_THROW(mengoli::correction_sum(1, 3, 3), InvalidInput);
    EXPECT_THROW(mengoli::correction_sum(1, -1, 3), InvalidInput);
    EXPECT_THROW(mengoli::correction_sum(1, 0, 0), InvalidInput);
}

TEST(CorrectionSum, MatchesTermByTermRecurrence) {
    for (std::int64_t w = 1; w <= 10; ++w) {
        for (std::int64_t x = 1; x < w; ++x) {
            const Rational f(x, w);
            for (std::int64_t a = -5; a <= 5; ++a) {
                Rational expected(0);
                for (std::int64_t j = 1; j <= a; ++j) expected += Rational(1) / (f + Rational(j));
                for (std::int64_t j = 0; j < -a; ++j) expected -= Rational(1) / (f - Rational(j));
                ASSERT_EQ(mengoli::correction_sum(a, x, w), expected) << a << ' ' << x << '/' << w;
            }
        }
    }
}

TEST(Rational, StrRoundTrips) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 500; ++i) {
        const Rational r(static_cast<std::int64_t>(rng() % 2001) - 1000, static_cast<std::int64_t>(rng() % 50) + 1);
        ASSERT_EQ(Rational::parse(r.str()), r);
    }
}
