#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "mengoli/error.hpp"
#include "mengoli/oracle.hpp"
#include "mengoli/pairsum.hpp"
#include "mengoli/sampling.hpp"
#include "mengoli/series_spec.hpp"
#include "reference.hpp"

using mengoli::EvalResult;
using mengoli::InvalidInput;
using mengoli::Method;
using mengoli::Rational;
using mengoli::Real;

namespace {

long double gap(const EvalResult& a, const EvalResult& b) {
    return std::fabs((a.value - b.value).to_long_double());
}

void expect_near_reference(const EvalResult& r, const Rational& q1, const Rational& q2) {
    EXPECT_LE(reference::distance(r.value, reference::product_series({q1, q2})), r.error_bound + 1e-40L)
        << q1 << ", " << q2;
}

}  // namespace

TEST(PairSumInt, Examples) {
    EXPECT_EQ(mengoli::pair_sum_int(0, 1), Rational(1));
    EXPECT_EQ(mengoli::pair_sum_int(1, 3), Rational(5, 12));
    EXPECT_EQ(mengoli::pair_sum_int(2, 5), Rational(47, 180));
    EXPECT_EQ(mengoli::pair_sum_int(3, 1), Rational(5, 12));
}

TEST(PairSumInt, Rejects) {
    EXPECT_THROW(mengoli::pair_sum_int(2, 2), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum_int(-1, 2), InvalidInput);
}

TEST(PairSumInt, TelescopesAgainstOracle) {
    // a = 0, b = 1: partial sums are 1 - 1/(N+1)
    const mengoli::ProductSeriesSpec spec({Rational(1), Rational(3)});
    const auto r = mengoli::truncated_sum(spec, 100'000);
    EXPECT_TRUE(r.contains(Real::from_rational(Rational(5, 12), 128)));
}

TEST(Prop12, ZetaTwoPattern) {
    using boost::multiprecision::cos;
    using boost::multiprecision::sin;
    for (std::int64_t w = 2; w <= 40; ++w) {
        const auto r = mengoli::pair_sum_prop12(-1, w - 1, 0, 1, w);
        const reference::Ref angle = reference::pi() / w;
        const reference::Ref expected = w * (reference::Ref(w) / 2 - reference::pi() / 2 * cos(angle) / sin(angle));
        ASSERT_LE(reference::distance(r.value, expected), r.error_bound + 1e-40L) << w;
        ASSERT_EQ(r.method, Method::Prop12);
    }
}

TEST(Prop12, Telescoping) {
    const auto r = mengoli::pair_sum_prop12(-1, 1, 0, 1, 2);
    EXPECT_LE(std::fabs((r.value - Real::from_int(2, 128)).to_long_double()), r.error_bound);
    EXPECT_LT(r.error_bound, 1e-30L);
}

TEST(Prop12, AgreesWithDigammaRecurrence) {
    const auto a = mengoli::pair_sum_prop12(0, 1, 0, 3, 4);
    const auto b = mengoli::pair_sum_digamma(Rational(1, 4), Rational(3, 4));
    EXPECT_LE(gap(a, b), a.error_bound + b.error_bound);
    expect_near_reference(a, Rational(1, 4), Rational(3, 4));
}

TEST(Prop12, Rejects) {
    EXPECT_THROW(mengoli::pair_sum_prop12(0, 1, 0, 1, 4), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum_prop12(0, 0, 0, 1, 4), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum_prop12(0, 1, 0, 4, 4), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum_prop12(-2, 1, 0, 1, 4), InvalidInput);
}

TEST(Prop13, HalfAndZero) {
    const auto r = mengoli::pair_sum_prop13(0, 1, 2, 0);
    const reference::Ref expected = 4 - 4 * boost::multiprecision::log(reference::Ref(2));
    EXPECT_LE(reference::distance(r.value, expected), r.error_bound + 1e-40L);
    EXPECT_EQ(r.method, Method::Prop13);
}

TEST(Prop13, AgreesWithOracle) {
    const auto r = mengoli::pair_sum_prop13(0, 1, 2, 1);
    const mengoli::ProductSeriesSpec spec({Rational(1, 2), Rational(1)});
    EXPECT_TRUE(mengoli::verify(spec, r, 1'000'000).pass);
    expect_near_reference(r, Rational(1, 2), Rational(1));
}

TEST(Prop13, Rejects) {
    EXPECT_THROW(mengoli::pair_sum_prop13(0, 1, 2, -1), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum_prop13(0, 0, 2, 1), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum_prop13(-3, 1, 2, 1), InvalidInput);
}

TEST(PairSumDigamma, Examples) {
    const auto r01 = mengoli::pair_sum_digamma(Rational(0), Rational(1));
    EXPECT_EQ(r01.value, Real::from_int(1, 128));
    EXPECT_EQ(r01.method, Method::DigammaRecurrence);

    const auto r = mengoli::pair_sum_digamma(Rational(-1, 2), Rational(1, 2));
    EXPECT_LE(std::fabs((r.value - Real::from_int(2, 128)).to_long_double()), r.error_bound);
    EXPECT_THROW(mengoli::pair_sum_digamma(Rational(1, 3), Rational(1, 3)), InvalidInput);
}

TEST(GeneralizedHarmonic, MatchesReference) {
    for (std::int64_t den = 1; den <= 12; ++den) {
        for (std::int64_t num = -den + 1; num <= 6 * den; ++num) {
            const Rational q(num, den);
            const auto h = mengoli::generalized_harmonic(q);
            ASSERT_LE(reference::distance(h.value, reference::harmonic(q)), h.error + 1e-40L) << q;
        }
    }
}

TEST(PairSum, DispatchExamples) {
    const auto r = mengoli::pair_sum(Rational(2), Rational(5));
    EXPECT_EQ(r.method, Method::Prop11);
    ASSERT_TRUE(r.exact.has_value());
    EXPECT_EQ(*r.exact, Rational(47, 180));
    EXPECT_LT(r.error_bound, 1e-38L);

    const auto z = mengoli::pair_sum(Rational(-1, 7), Rational(1, 7));
    EXPECT_EQ(z.method, Method::Prop12);
    const reference::Ref angle = reference::pi() / 7;
    const reference::Ref expected =
        7 * (reference::Ref(7) / 2 -
             reference::pi() / 2 * boost::multiprecision::cos(angle) / boost::multiprecision::sin(angle));
    EXPECT_LE(reference::distance(z.value, expected), z.error_bound + 1e-40L);

    EXPECT_EQ(mengoli::pair_sum(Rational(3), Rational(1, 3)).method, Method::Prop13);
    EXPECT_EQ(mengoli::pair_sum(Rational(1, 3), Rational(3)).method, Method::Prop13);
}

TEST(PairSum, TelescopingHalf) {
    const auto r = mengoli::pair_sum(Rational(-1, 2), Rational(1, 2));
    EXPECT_LT(std::fabs((r.value - Real::from_int(2, 128)).to_long_double()), 1e-12L);
}

TEST(PairSum, RejectsInadmissible) {
    EXPECT_THROW(mengoli::pair_sum(Rational(1, 2), Rational(1, 2)), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum(Rational(-1), Rational(1, 2)), InvalidInput);
    EXPECT_THROW(mengoli::pair_sum(Rational(-3, 2), Rational(1, 2)), InvalidInput);
    try {
        mengoli::pair_sum(Rational(-2), Rational(0));
        FAIL();
    } catch (const InvalidInput& e) {
        EXPECT_NE(std::string(e.what()).find("negative integer"), std::string::npos);
    }
}

TEST(PairSum, CrossMethodOnRandomPairs) {
    std::mt19937_64 rng(424242);
    for (int t = 0; t < 150; ++t) {
        const auto [q1, q2] = mengoli::random_shift_pair(rng, 24);
        const auto a = mengoli::pair_sum(q1, q2);
        const auto b = mengoli::pair_sum_digamma(q1, q2);
        ASSERT_LE(gap(a, b), a.error_bound + b.error_bound) << q1 << ", " << q2;
        expect_near_reference(a, q1, q2);
        expect_near_reference(b, q1, q2);
    }
}

TEST(PairSum, Symmetry) {
    std::mt19937_64 rng(17);
    for (int t = 0; t < 100; ++t) {
        const auto [q1, q2] = mengoli::random_shift_pair(rng, 12);
        const auto a = mengoli::pair_sum(q1, q2);
        const auto b = mengoli::pair_sum(q2, q1);
        if (a.exact) {
            ASSERT_TRUE(b.exact.has_value());
            ASSERT_EQ(*a.exact, *b.exact);
        } else {
            ASSERT_LE(gap(a, b), a.error_bound + b.error_bound) << q1 << ", " << q2;
        }
    }
}

TEST(PairSum, IntegerLimitContinuity) {
    for (std::int64_t b = 1; b <= 3; ++b) {
        const Real limit = Real::from_rational(mengoli::pair_sum_int(0, b), 128);
        Real previous = Real::from_int(1000, 128);
        for (std::int64_t w = 2; w <= 256; w *= 2) {
            const auto r = mengoli::pair_sum(Rational(1, w), Rational(b));
            const Real d = mengoli::abs(r.value - limit);
            ASSERT_LT(d, previous) << "b=" << b << " w=" << w;
            previous = d;
            const mengoli::ProductSeriesSpec spec({Rational(1, w), Rational(b)});
            ASSERT_TRUE(mengoli::verify(spec, r, 100'000).pass);
        }
        EXPECT_LT(previous.to_double(), 0.01);
    }
}

TEST(Prop14, ReproducesEachBranch) {
    // x = y = 0: integer form
    const auto i = mengoli::pair_sum_prop14(1, 0, 3, 0, 1);
    ASSERT_TRUE(i.exact.has_value());
    EXPECT_EQ(*i.exact, Rational(5, 12));
    EXPECT_EQ(i.method, Method::Prop14);

    for (std::int64_t w = 2; w <= 9; ++w) {
        for (std::int64_t x = 1; x < w; ++x) {
            for (std::int64_t a = -1; a <= 2; ++a) {
                // both fractional
                for (std::int64_t y = 1; y < w; ++y) {
                    if (x == y) continue;
                    const auto u = mengoli::pair_sum_prop14(a, x, 1, y, w);
                    const auto p = mengoli::pair_sum_prop12(a, x, 1, y, w);
                    ASSERT_LE(gap(u, p), u.error_bound + p.error_bound);
                }
                // second shift integer
                for (std::int64_t b = 0; b <= 2; ++b) {
                    const auto u = mengoli::pair_sum_prop14(a, x, b, 0, w);
                    const auto p = mengoli::pair_sum_prop13(a, x, w, b);
                    ASSERT_LE(gap(u, p), u.error_bound + p.error_bound);
                }
            }
        }
    }
}

TEST(Prop14, IntegerFirstSlot) {
    const auto u = mengoli::pair_sum_prop14(2, 0, 0, 1, 3);
    const auto p = mengoli::pair_sum_prop13(0, 1, 3, 2);
    EXPECT_LE(gap(u, p), u.error_bound + p.error_bound);
}

TEST(EvalResult, ErrorBoundsAreFiniteAndNonNegative) {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 50; ++t) {
        const auto [q1, q2] = mengoli::random_shift_pair(rng, 24);
        for (const auto& r : {mengoli::pair_sum(q1, q2), mengoli::pair_sum_digamma(q1, q2)}) {
            ASSERT_TRUE(std::isfinite(r.error_bound));
            ASSERT_GE(r.error_bound, 0.0L);
            ASSERT_TRUE(r.value.is_finite());
        }
    }
}

TEST(PairSum, ErrorBoundHoldsAcrossPrecisions) {
    std::mt19937_64 rng(64);
    for (const unsigned bits : {64u, 96u, 256u}) {
        for (int t = 0; t < 40; ++t) {
            const auto [q1, q2] = mengoli::random_shift_pair(rng, 24);
            const auto r = mengoli::pair_sum(q1, q2, bits);
            const auto d = mengoli::pair_sum_digamma(q1, q2, bits);
            ASSERT_EQ(r.value.precision_bits(), bits);
            const auto ref = reference::product_series({q1, q2});
            ASSERT_LE(reference::distance(r.value, ref), r.error_bound + 1e-45L) << bits << ' ' << q1 << ", " << q2;
            ASSERT_LE(reference::distance(d.value, ref), d.error_bound + 1e-45L) << bits << ' ' << q1 << ", " << q2;
        }
    }
}
