#include <gtest/gtest.h>

#include <array>

#include "clfcong/congruences.hpp"
#include "oracle.hpp"

using namespace clfcong;

namespace {

const CongruenceCheck& check(const char* id) {
    const CongruenceCheck* c = find_check(id);
    if (!c)
        throw std::runtime_error(std::string("missing check ") + id);
    return *c;
}

unsigned long smallest_applicable(const CongruenceCheck& c) {
    for (unsigned long p : primes_up_to(100))
        if (c.applicable(p))
            return p;
    return 0;
}

Integer power(unsigned long p, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, e);
    return r;
}

} // namespace

TEST(Registry, ContainsEveryCheckOnce) {
    const std::array<const char*, 19> ids{"C-1-1",      "C-1-2",     "C-1-3",   "C-1-4",         "C-REMARK",
                                          "C-1-5",      "C-1-6",     "C-2-1",   "C-2-2",         "C-L22-A",
                                          "C-L22-B",    "C-MORLEY",  "C-2-5",   "C-EULER-SHIFT", "C-BINOM-P1",
                                          "C-TAIL",     "C-16-FULL", "C-SU3-HK", "C-SU3-H2K"};
    ASSERT_EQ(congruence_registry().size(), ids.size());
    for (std::size_t i = 0; i < ids.size(); ++i)
        EXPECT_EQ(congruence_registry()[i].id, ids[i]);
    EXPECT_EQ(find_check("C-XX"), nullptr);
}

TEST(Registry, SelectionIsCanonicalAndValidated) {
    std::vector<std::string> ids{"C-MORLEY", "C-1-1", "C-MORLEY"};
    auto sel = select_checks(ids);
    ASSERT_EQ(sel.size(), 2u);
    EXPECT_EQ(sel[0]->id, "C-1-1");
    EXPECT_EQ(sel[1]->id, "C-MORLEY");
    std::vector<std::string> bad{"C-1-1", "C-XX"};
    try {
        select_checks(bad);
        FAIL() << "expected UnknownCheck";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::UnknownCheck);
    }
}

TEST(Verify, HarmonicDoubleSumAtFive) {
    // Sum is 1/8; -2 * (+1) * E_2 = 2; 1/8 == 2 (mod 5).
    ASSERT_EQ(oracle::exhaustive_reduce(1, 8, 5), 2);
    SequenceCache cache;
    auto r = verify(check("C-1-4"), 5, cache);
    EXPECT_EQ(r.lhs_residue, 2);
    EXPECT_EQ(r.rhs_residue, 2);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.exponent, 1u);
}

TEST(Verify, MorleyAtFive) {
    SequenceCache cache;
    auto r = verify(check("C-MORLEY"), 5, cache);
    // C(4,2) = 6 and 4^4 = 256; 256 - 6 = 2 * 5^3.
    EXPECT_EQ(r.lhs_residue, 6);
    EXPECT_EQ(r.rhs_residue, 256 % 125);
    EXPECT_EQ(r.valuation, static_cast<unsigned long>(oracle::repeated_division_valuation(250, 5)));
    EXPECT_TRUE(r.pass);
}

TEST(Verify, ClfEightAtThree) {
    // 1 + 8/8 + 80/64 = 13/4; 1 + 2(-1)(9)E_0 = -17.
    ASSERT_EQ(oracle::exhaustive_reduce(13, 4, 27), 10);
    ASSERT_EQ(oracle::exhaustive_reduce(-17, 1, 27), 10);
    SequenceCache cache;
    auto r = verify(check("C-1-5"), 3, cache);
    EXPECT_EQ(r.lhs_residue, 10);
    EXPECT_EQ(r.rhs_residue, 10);
    EXPECT_TRUE(r.pass);
}

TEST(Verify, ClfSixteenAtThree) {
    // 1 + 8/16 + 80/256 = 29/16; -1 - 9 = -10.
    ASSERT_EQ(oracle::exhaustive_reduce(29, 16, 27), 17);
    ASSERT_EQ(oracle::exhaustive_reduce(-10, 1, 27), 17);
    SequenceCache cache;
    auto r = verify(check("C-1-6"), 3, cache);
    EXPECT_EQ(r.lhs_residue, 17);
    EXPECT_TRUE(r.pass);
}

TEST(Verify, CentralSquaresAtFive) {
    // 1 + 4/16 + 36/256 = 89/64; (+1) + 25 E_2 = -24.
    ASSERT_EQ(oracle::exhaustive_reduce(89, 64, 125), 101);
    SequenceCache cache;
    auto r = verify(check("C-1-2"), 5, cache);
    EXPECT_EQ(r.lhs_residue, 101);
    EXPECT_EQ(r.rhs_residue, 101);
}

TEST(Verify, UpperQuarterHarmonicAtFive) {
    // Only k = 2 lies in (5/4, 5/2): the sum is 1/2.
    ASSERT_EQ(oracle::exhaustive_reduce(1, 2, 125), 63);
    SequenceCache cache;
    auto r = verify(check("C-L22-B"), 5, cache);
    EXPECT_EQ(r.lhs_residue, 63);
    EXPECT_EQ(r.rhs_residue, 63);
    EXPECT_TRUE(r.pass);
}

TEST(Verify, NotApplicable) {
    SequenceCache cache;
    try {
        verify(check("C-1-1"), 3, cache);
        FAIL() << "expected NotApplicable";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), Errc::NotApplicable);
    }
    EXPECT_THROW(verify(check("C-1-5"), 9, cache), Error);
}

TEST(Verify, FamiliesReportEveryInstance) {
    SequenceCache cache;
    EXPECT_EQ(verify(check("C-2-1"), 11, cache).instances, 6u);     // k = 0..5
    EXPECT_EQ(verify(check("C-BINOM-P1"), 11, cache).instances, 5u); // j = 0..4
    EXPECT_EQ(verify(check("C-TAIL"), 11, cache).instances, 10u);    // two parts for k = 6..10
}

TEST(Verify, SoundUpToTwoHundred) {
    SequenceCache cache;
    std::vector<const CongruenceCheck*> all;
    for (const auto& c : congruence_registry())
        all.push_back(&c);
    auto primes = primes_up_to(200);
    for (const auto& r : verify_range(all, primes, cache, 1)) {
        EXPECT_TRUE(r.pass) << r.check << " p=" << r.p << (r.error ? " " + *r.error : "");
        EXPECT_EQ(r.pass, r.lhs_residue == r.rhs_residue);
        EXPECT_GE(r.valuation, r.exponent);
        EXPECT_LE(r.valuation, r.exponent + kValuationHeadroom);
    }
}

TEST(Verify, MutationSensitivity) {
    SequenceCache cache;
    for (const auto& c : congruence_registry()) {
        for (unsigned long p : {smallest_applicable(c), 13ul}) {
            ASSERT_NE(p, 0u) << c.id;
            // Families mix exponents, so shift each instance by its own p^(e-1).
            if (c.id == "C-TAIL") {
                for (unsigned e : {1u, 2u}) {
                    VerifyOptions shift{power(p, e - 1)};
                    EXPECT_FALSE(verify(c, p, cache, shift).pass) << c.id << " p=" << p;
                }
                EXPECT_TRUE(verify(c, p, cache, {power(p, 2)}).pass) << c.id << " p=" << p;
                continue;
            }
            EXPECT_FALSE(verify(c, p, cache, {power(p, c.exponent - 1)}).pass) << c.id << " p=" << p;
            auto still = verify(c, p, cache, {power(p, c.exponent)});
            EXPECT_TRUE(still.pass) << c.id << " p=" << p;
        }
    }
}

TEST(Verify, DerivationChain) {
    SequenceCache cache;
    for (unsigned long p : primes_up_to(300))
        if (p > 3)
            ASSERT_TRUE(derivation_chain_holds(cache, p)) << p;
    EXPECT_THROW(derivation_chain_holds(cache, 3), Error);
}

TEST(VerifyRange, Examples) {
    SequenceCache cache;
    std::vector<const CongruenceCheck*> morley{&check("C-MORLEY")};
    auto primes = primes_up_to(20);
    auto rows = verify_range(morley, primes, cache);
    std::vector<unsigned long> seen;
    for (const auto& r : rows) {
        seen.push_back(r.p);
        EXPECT_TRUE(r.pass);
    }
    EXPECT_EQ(seen, (std::vector<unsigned long>{5, 7, 11, 13, 17, 19}));

    std::vector<const CongruenceCheck*> squares{&check("C-1-2")};
    auto small = primes_up_to(7);
    rows = verify_range(squares, small, cache);
    ASSERT_EQ(rows.size(), 2u);
    EXPECT_EQ(rows[0].p, 5u);
    EXPECT_EQ(rows[0].lhs_residue, 101);

    EXPECT_TRUE(verify_range({}, primes, cache).empty());
}

TEST(VerifyRange, DeterministicAcrossWorkerCounts) {
    std::vector<const CongruenceCheck*> all;
    for (const auto& c : congruence_registry())
        all.push_back(&c);
    // Unsorted input with a duplicate; output order must not depend on it.
    std::vector<unsigned long> primes{97, 3, 5, 61, 7, 5};
    SequenceCache a, b;
    auto one = verify_range(all, primes, a, 1);
    auto many = verify_range(all, primes, b, 6);
    ASSERT_EQ(one.size(), many.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        EXPECT_EQ(one[i].check, many[i].check);
        EXPECT_EQ(one[i].p, many[i].p);
        EXPECT_EQ(one[i].lhs_residue, many[i].lhs_residue);
        EXPECT_EQ(one[i].rhs_residue, many[i].rhs_residue);
        EXPECT_EQ(one[i].valuation, many[i].valuation);
        EXPECT_EQ(one[i].witness_index, many[i].witness_index);
        if (i > 0 && one[i].check == one[i - 1].check)
            EXPECT_LT(one[i - 1].p, one[i].p);
    }
}

TEST(VerifyRange, ErrorsBecomeRows) {
    // A deliberately broken check whose left side has p in the denominator.
    CongruenceCheck broken{"X-BROKEN", "1/p == 0", 1, [](unsigned long p) { return p > 2; },
                           [](unsigned long) { return SequenceDemand{}; },
                           [](SequenceCache&, unsigned long p) {
                               return std::vector<CongruenceInstance>{
                                   {0, Rational(Integer(1), Integer(p * p)), Rational(0), 1}};
                           }};
    SequenceCache cache;
    try {
        verify(broken, 5, cache);
        FAIL() << "expected DenominatorDivisibleByP";
    } catch (const DenominatorDivisibleByP& e) {
        EXPECT_EQ(e.valuation(), 2u);
    }
    std::vector<const CongruenceCheck*> both{&broken, &check("C-MORLEY")};
    auto primes = primes_up_to(7);
    auto rows = verify_range(both, primes, cache, 2);
    ASSERT_EQ(rows.size(), 5u);  // broken at 3, 5, 7; Morley at 5, 7
    EXPECT_TRUE(rows[0].error.has_value());
    EXPECT_FALSE(rows[0].pass);
    EXPECT_TRUE(rows.back().pass);
}
