#include <gtest/gtest.h>

#include "support.hpp"

using namespace recform;
using recform::testing::Gen;
using recform::testing::rats;

TEST(Monomials, GradedLexOrder) {
    auto m = monomials(3, 3);
    ASSERT_EQ(m.size(), 10u);
    std::vector<Exponent> expected{{3, 0, 0}, {2, 1, 0}, {2, 0, 1}, {1, 2, 0}, {1, 1, 1},
                                   {1, 0, 2}, {0, 3, 0}, {0, 2, 1}, {0, 1, 2}, {0, 0, 3}};
    EXPECT_EQ(m, expected);
    EXPECT_EQ(monomials(2, 2), (std::vector<Exponent>{{2, 0}, {1, 1}, {0, 2}}));
}

TEST(Monomials, CountIsBinomial) {
    for (std::size_t k = 1; k <= 5; ++k)
        EXPECT_EQ(monomials(k, static_cast<unsigned>(k)).size(), binomial_count(2 * k - 1, k));
}

TEST(Form, TermsAreValidatedAndZerosDropped) {
    HomogeneousForm f(2, 2);
    f.add_term({2, 0}, Rat(3));
    f.add_term({2, 0}, Rat(-3));
    EXPECT_TRUE(f.is_zero());
    EXPECT_THROW(f.add_term({1, 0}, Rat(1)), DimensionError);
    EXPECT_THROW(f.add_term({1, 1, 0}, Rat(1)), DimensionError);
}

TEST(Form, RenderingSparseAndDense) {
    HomogeneousForm f(2, 2);
    f.add_term({2, 0}, Rat(-5));
    f.add_term({0, 2}, Rat(1));
    EXPECT_EQ(f.str(), "-5·x1² + 1·x2²");
    EXPECT_EQ(f.str(true), "-5·x1² + 0·x1·x2 + 1·x2²");
    EXPECT_EQ(HomogeneousForm(2, 2).str(), "0");
}

TEST(Form, EvaluationExactAndApproximate) {
    HomogeneousForm f(2, 2);
    f.add_term({2, 0}, Rat(-5));
    f.add_term({0, 2}, Rat(1));
    EXPECT_EQ(f.eval(rats({1, 1})), Rat(-4));
    EXPECT_EQ(f.eval(rats({1, 3})), Rat(4));
    std::vector<ComplexApprox> p{ComplexApprox(1.0), ComplexApprox(3.0)};
    EXPECT_TRUE(f.eval(p).contains({4.0, 0.0}));
}

TEST(Form, ProductOfLinearFormsExpands) {
    // (x1 + x2)(x1 - x2) = x1^2 - x2^2
    auto f = expand_product<Rat>({{rats({1, 1}), 1}, {rats({1, -1}), 1}});
    HomogeneousForm expected(2, 2);
    expected.add_term({2, 0}, Rat(1));
    expected.add_term({0, 2}, Rat(-1));
    EXPECT_EQ(f, expected);
    auto sq = expand_product<Rat>({{rats({1, 1}), 2}});
    EXPECT_EQ(sq.coeff({1, 1}), Rat(2));
    EXPECT_THROW(expand_product<Rat>({{rats({1, 1}), 1}}), DimensionError);
}

TEST(FormProperty, ProductEvaluatesToProductOfValues) {
    Gen gen(0x5eed0301);
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = static_cast<std::size_t>(gen.integer(2, 4));
        std::vector<std::pair<std::vector<Rat>, unsigned>> factors;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<Rat> c;
            for (std::size_t j = 0; j < k; ++j) c.push_back(gen.rational(9));
            factors.emplace_back(c, 1);
        }
        auto f = expand_product(factors);
        std::vector<Rat> x;
        for (std::size_t j = 0; j < k; ++j) x.push_back(gen.rational(9));
        Rat expected(1);
        for (const auto& [c, m] : factors) expected *= HomogeneousForm::linear(c).eval(x);
        EXPECT_EQ(f.eval(x), expected);
    }
}

TEST(FormProperty, ArithmeticMatchesPointwiseValues) {
    Gen gen(0x5eed0302);
    for (int trial = 0; trial < 200; ++trial) {
        auto mons = monomials(3, 2);
        HomogeneousForm a(3, 2), b(3, 2);
        for (const auto& e : mons) {
            a.add_term(e, gen.rational(9));
            b.add_term(e, gen.rational(9));
        }
        Rat s = gen.rational(9);
        auto x = std::vector<Rat>{gen.rational(9), gen.rational(9), gen.rational(9)};
        EXPECT_EQ((a + b).eval(x), a.eval(x) + b.eval(x));
        EXPECT_EQ((a - b).eval(x), a.eval(x) - b.eval(x));
        EXPECT_EQ((s * a).eval(x), s * a.eval(x));
        EXPECT_EQ((a * b).eval(x), a.eval(x) * b.eval(x));
    }
}
