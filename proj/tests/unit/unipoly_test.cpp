#include <gtest/gtest.h>

#include "support.hpp"

using namespace recform;
using recform::testing::Gen;

namespace {

UniPoly poly(std::initializer_list<long long> low_to_high) {
    std::vector<Rat> c;
    for (long long v : low_to_high) c.emplace_back(v);
    return UniPoly(c);
}

UniPoly product(const std::vector<SquarefreeFactor>& parts) {
    UniPoly acc = UniPoly::constant(Rat(1));
    for (const auto& [f, m] : parts)
        for (int i = 0; i < m; ++i) acc = acc * f;
    return acc;
}

}  // namespace

TEST(UniPoly, BasicArithmetic) {
    UniPoly p = poly({-1, 0, -1, 1});  // x^3 - x^2 - 1
    EXPECT_EQ(p.degree(), 3);
    EXPECT_EQ(p.str(), "x^3 - x^2 - 1");
    EXPECT_EQ(p.derivative(), poly({0, -2, 3}));
    EXPECT_EQ(p.eval(Rat(2)), Rat(3));
    auto [q, r] = divmod(p, poly({-1, 1}));
    EXPECT_EQ(q * poly({-1, 1}) + r, p);
    EXPECT_EQ(r.degree(), 0);
}

TEST(UniPoly, GcdIsMonic) {
    UniPoly a = poly({-1, 1}) * poly({2, 1});  // (x-1)(x+2)
    UniPoly b = poly({-1, 1}) * poly({3, 1});
    EXPECT_EQ(gcd(a, b), poly({-1, 1}));
    EXPECT_EQ(gcd(a * Rat(7), b).leading(), Rat(1));
}

TEST(Squarefree, NarayanaPolynomialIsSquarefree) {
    auto parts = squarefree_decompose(poly({-1, 0, -1, 1}));
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].factor, poly({-1, 0, -1, 1}));
    EXPECT_EQ(parts[0].multiplicity, 1);
}

TEST(Squarefree, RepeatedRoots) {
    // (x - 1)^2 (x + 2)^3
    UniPoly p = poly({-1, 1}) * poly({-1, 1}) * poly({2, 1}) * poly({2, 1}) * poly({2, 1});
    auto parts = squarefree_decompose(p);
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].factor, poly({-1, 1}));
    EXPECT_EQ(parts[0].multiplicity, 2);
    EXPECT_EQ(parts[1].factor, poly({2, 1}));
    EXPECT_EQ(parts[1].multiplicity, 3);
    EXPECT_THROW(squarefree_decompose(UniPoly()), DomainError);
}

TEST(SquarefreeProperty, ProductOfPartsRestoresMonicInput) {
    Gen gen(0x5eed0201);
    for (int trial = 0; trial < 300; ++trial) {
        UniPoly p = UniPoly::constant(Rat(1));
        const int factors = static_cast<int>(gen.integer(1, 4));
        for (int i = 0; i < factors; ++i) {
            UniPoly lin = UniPoly::linear_root(Rat(gen.integer(-3, 3)));
            for (long long m = gen.integer(1, 3); m > 0; --m) p = p * lin;
        }
        auto parts = squarefree_decompose(p);
        EXPECT_EQ(product(parts), p.monic());
        for (const auto& part : parts) EXPECT_EQ(gcd(part.factor, part.factor.derivative()).degree(), 0);
    }
}

TEST(CharacteristicPolynomial, CompanionMatrixGivesRelationPolynomial) {
    Gen gen(0x5eed0202);
    for (int trial = 0; trial < 200; ++trial) {
        auto r = gen.relation(static_cast<std::size_t>(gen.integer(2, 5)), 20);
        EXPECT_EQ(characteristic_polynomial(companion_matrix(r)), r.char_poly());
    }
}

TEST(CharacteristicPolynomial, MatchesDeterminantAtSamplePoints) {
    Gen gen(0x5eed0203);
    for (int trial = 0; trial < 100; ++trial) {
        const auto k = static_cast<std::size_t>(gen.integer(1, 4));
        RatMatrix a = gen.matrix(k, k, 10);
        UniPoly p = characteristic_polynomial(a);
        for (long long x = -2; x <= 2; ++x) {
            RatMatrix shifted = Rat(x) * RatMatrix::identity(k) - a;
            EXPECT_EQ(p.eval(Rat(x)), det(shifted));
        }
    }
}
