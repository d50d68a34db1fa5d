#include <gtest/gtest.h>

#include "clfcong/identities.hpp"
#include "oracle.hpp"

using namespace clfcong;

namespace {

mpq_class q(const Rational& r) { return mpq_class(r.str()); }

mpz_class c(long n, long k) { return oracle::falling_binomial(n, k); }

mpq_class pw(long base, long exp) {
    mpz_class r;
    mpz_pow_ui(r.get_mpz_t(), mpz_class(base).get_mpz_t(), static_cast<unsigned long>(exp));
    return mpq_class(r);
}

// Left side of the central-binomial identity with the (-4)^k weight replaced
// by `weight`^k.
mpq_class quarter_lhs(long n, long weight) {
    mpq_class s = 0;
    for (long k = 0; k < n; ++k) {
        mpq_class t(c(n, k) * c(2 * k, k));
        t /= (2 * k + 1) * pw(weight, k);
        s += t;
    }
    return s;
}

// Left side of the harmonic-binomial identity with an overridable sign base.
mpq_class harmonic_lhs(long n, long sign_base) {
    mpq_class s = 0;
    for (long k = 0; k < n; ++k) {
        mpq_class t(c(n, k) * c(n + k, k) * pw(sign_base, k).get_num());
        t *= oracle::direct_harmonic(k);
        t /= 2 * k + 1;
        s += t;
    }
    return s;
}

} // namespace

TEST(HarmonicBinomialIdentity, Examples) {
    SequenceCache cache;
    auto one = harmonic_binomial_identity(cache, 1);
    EXPECT_TRUE(one.lhs.is_zero());
    EXPECT_TRUE(one.rhs.is_zero());
    for (unsigned long n : {2ul, 50ul}) {
        auto o = harmonic_binomial_identity(cache, n);
        EXPECT_TRUE(o.holds()) << n;
        EXPECT_EQ(q(o.lhs), harmonic_lhs(static_cast<long>(n), -1)) << n;
    }
}

TEST(CentralBinomialQuarterIdentity, Examples) {
    auto one = central_binomial_quarter_identity(1);
    EXPECT_EQ(one.lhs, Rational(1));
    EXPECT_EQ(one.rhs, Rational(1));
    for (unsigned long n : {2ul, 50ul}) {
        auto o = central_binomial_quarter_identity(n);
        EXPECT_TRUE(o.holds()) << n;
        EXPECT_EQ(q(o.lhs), quarter_lhs(static_cast<long>(n), -4)) << n;
    }
}

TEST(BinomialHalfPowerIdentity, Examples) {
    EXPECT_EQ(binomial_half_power_identity(0).lhs, Rational(1));
    EXPECT_EQ(binomial_half_power_identity(1).lhs, Rational(2));
    auto ten = binomial_half_power_identity(10);
    EXPECT_EQ(ten.lhs, Rational(1024));
    EXPECT_TRUE(ten.holds());
}

TEST(HockeyStickIdentity, Examples) {
    auto a = hockey_stick_identity(4, 2);
    EXPECT_EQ(a.lhs, Rational(10));
    EXPECT_TRUE(a.holds());
    EXPECT_TRUE(hockey_stick_identity(0, 0).holds());
    mpz_class direct = 0;
    for (long k = 7; k <= 30; ++k)
        direct += c(k, 7);
    auto b = hockey_stick_identity(30, 7);
    EXPECT_EQ(q(b.lhs), mpq_class(direct));
    EXPECT_TRUE(b.holds());
    EXPECT_THROW(hockey_stick_identity(3, 4), Error);
}

TEST(HarmonicDoublingIdentity, Examples) {
    SequenceCache cache;
    EXPECT_TRUE(harmonic_doubling_identity(cache, 0).holds());
    auto two = harmonic_doubling_identity(cache, 2);
    EXPECT_EQ(two.lhs, Rational(25, 12));
    EXPECT_EQ(two.rhs, Rational(3, 4) + Rational(4, 3));
    EXPECT_TRUE(harmonic_doubling_identity(cache, 100).holds());
}

TEST(IdentityMutations, DetectedForSmallN) {
    // A checker that accepted these would be vacuous.
    bool quarter_caught = false, sign_caught = false, half_caught = false, split_caught = false;
    SequenceCache cache;
    for (long n = 1; n <= 5; ++n) {
        auto rhs = q(central_binomial_quarter_identity(static_cast<unsigned long>(n)).rhs);
        quarter_caught |= quarter_lhs(n, 4) != rhs;

        auto hrhs = q(harmonic_binomial_identity(cache, static_cast<unsigned long>(n)).rhs);
        sign_caught |= harmonic_lhs(n, 1) != hrhs;

        mpq_class s = 0;
        for (long k = 0; k <= n; ++k)
            s += mpq_class(c(n + k, k)) / pw(3, k);
        half_caught |= s != pw(2, n);

        auto split = harmonic_doubling_identity(cache, static_cast<unsigned long>(n));
        split_caught |= q(split.lhs) != q(cache.harmonic(static_cast<unsigned long>(n))) + q(cache.odd_harmonic(static_cast<unsigned long>(n)));
    }
    EXPECT_TRUE(quarter_caught);
    EXPECT_TRUE(sign_caught);
    EXPECT_TRUE(half_caught);
    EXPECT_TRUE(split_caught);
}

TEST(RunIdentities, SmallBounds) {
    SequenceCache cache;
    for (unsigned long bound : {1ul, 10ul, 100ul}) {
        auto s = run_identities(cache, {bound, 2});
        ASSERT_EQ(s.size(), 5u);
        for (const auto& id : s) {
            EXPECT_TRUE(id.passed()) << id.id << " bound " << bound;
            EXPECT_GT(id.cases, 0u);
        }
        EXPECT_EQ(s[3].cases, (bound + 1) * (bound + 2) / 2);
    }
    EXPECT_THROW(run_identities(cache, {0, 1}), Error);
}
