#include <gtest/gtest.h>

#include "support.hpp"

using namespace recform;
using recform::testing::family_of;
using recform::testing::Gen;
using recform::testing::golden_families;
using recform::testing::rats;

namespace {

SequenceFamily narayana() { return family_of({1, 0, 1}, {rats({0, 1, 1}), rats({3, 1, 1}), rats({3, 0, 2})}); }

std::vector<long long> range(long long first, long long last) {
    std::vector<long long> out;
    for (long long n = first; n <= last; ++n) out.push_back(n);
    return out;
}

}  // namespace

TEST(VerifyIdentity, GoldenFamiliesPassOnBothSides) {
    for (const auto& [name, f] : golden_families()) {
        auto report = verify_identity(f, build_form(f), -10, 30);
        EXPECT_TRUE(report.ok()) << name;
        EXPECT_EQ(report.count(), 41u);
        EXPECT_EQ(report.passed(), 41u);
    }
}

TEST(VerifyIdentity, TamperedPackageIsCaught) {
    auto f = narayana();
    auto pkg = build_form(f);
    pkg.form_f_tilde.add_term({0, 0, 3}, Rat(1));
    auto report = verify_identity(f, pkg, 0, 9);
    EXPECT_FALSE(report.ok());
    // The added z^3 term is invisible only where C_n = 0, i.e. n = 1.
    EXPECT_EQ(report.passed(), 1u);
    EXPECT_EQ(report.failures.size(), 9u);
    EXPECT_TRUE(report.failures.front().scaled);
}

TEST(VerifyIdentity, ArityMismatchThrows) {
    auto pkg = build_form(family_of({1, 1}, {rats({0, 1}), rats({2, 1})}));
    EXPECT_THROW(verify_identity(narayana(), pkg, 0, 3), DimensionError);
}

TEST(VerificationReport, MergeCombinesRanges) {
    auto f = narayana();
    auto pkg = build_form(f);
    auto a = verify_identity(f, pkg, 0, 10), b = verify_identity(f, pkg, 11, 20);
    auto m = merge(a, b);
    EXPECT_EQ(m.first, 0);
    EXPECT_EQ(m.last, 20);
    EXPECT_EQ(m.count(), 21u);
    EXPECT_TRUE(m.ok());
}

TEST(Diophantine, NarayanaSolutions) {
    auto sols = diophantine_solutions(narayana(), 0, 50);
    ASSERT_EQ(sols.size(), 51u);
    EXPECT_EQ(sols[0].n, 0);
    EXPECT_EQ(sols[0].point, (std::vector<BigInt>{0, 3, 3}));
    EXPECT_EQ(sols[0].rhs, BigInt(-216));
    for (const auto& s : sols) EXPECT_EQ(s.rhs, BigInt(-216));
}

TEST(Diophantine, RationalFamiliesAreRejected) {
    auto f = SequenceFamily(RecurrenceRelation({Rat(1, 2), Rat(1)}), RatMatrix{{0, 1}, {1, 0}});
    EXPECT_THROW(diophantine_solutions(f, 0, 5), DomainError);
}

TEST(Diophantine, NegativeIndicesStopAtNonIntegralTerms) {
    // gamma_0 = 2: backward terms pick up halves.
    auto f = family_of({2, 1}, {rats({0, 1}), rats({1, 0})});
    EXPECT_NO_THROW(diophantine_solutions(f, 0, 20));
    EXPECT_THROW(diophantine_solutions(f, -5, 0), DomainError);
}

TEST(OracleFit, GoldenFamilies) {
    for (const auto& [name, f] : golden_families()) {
        if (name == "table1-row1") continue;
        EXPECT_EQ(oracle_fit_form(f, range(0, 9)), build_form(f).form_f) << name;
    }
}

TEST(OracleFit, SymmetricRootsLeaveTheSystemUnderdetermined) {
    // Roots 2 and -2: alpha^2 = beta^2 makes two monomial columns proportional over every n.
    auto f = family_of({4, 0}, {rats({1, 2}), rats({2, 3})});
    try {
        oracle_fit_form(f, range(0, 9));
        FAIL() << "expected UnderdeterminedError";
    } catch (const UnderdeterminedError& e) {
        EXPECT_EQ(e.rank, 2u);
        EXPECT_EQ(e.unknowns, 3u);
    }
    EXPECT_TRUE(verify_identity(f, build_form(f), 0, 9).ok());
}

TEST(OracleFit, ShortSamplesAreExtended) {
    auto f = narayana();
    EXPECT_EQ(oracle_fit_form(f, {0, 1, 2}), build_form(f).form_f);
}

TEST(OracleFitProperty, RandomFamiliesAgreeWithBuilder) {
    Gen gen(0x5eed0901);
    int checked = 0;
    while (checked < 60) {
        auto f = gen.family(static_cast<std::size_t>(gen.integer(2, 3)), 9);
        try {
            EXPECT_EQ(oracle_fit_form(f, range(0, 12)), build_form(f).form_f);
            ++checked;
        } catch (const UnderdeterminedError&) {
        }
    }
}

TEST(BinomialCount, SmallValues) {
    EXPECT_EQ(binomial_count(3, 2), 3u);
    EXPECT_EQ(binomial_count(5, 3), 10u);
    EXPECT_EQ(binomial_count(7, 4), 35u);
}
