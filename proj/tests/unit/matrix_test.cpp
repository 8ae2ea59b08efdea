#include <gtest/gtest.h>

#include "support.hpp"

using namespace recform;
using recform::testing::Gen;

namespace {

Rat cofactor_det(const RatMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) {
        RatMatrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j) minor(r - 1, cc++) = m(r, c);
        Rat term = m(0, j) * cofactor_det(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

}  // namespace

TEST(Matrix, DeterminantsOfKnownMatrices) {
    EXPECT_EQ(det(RatMatrix{{0, 1}, {2, 1}}), Rat(-2));
    EXPECT_EQ(det(RatMatrix{{1, 2}, {1, 5}}), Rat(3));
    EXPECT_EQ(det(RatMatrix{{0, 1, 1}, {3, 1, 1}, {3, 0, 2}}), Rat(-6));
    EXPECT_EQ(det(RatMatrix{{1, 2}, {2, 4}}), Rat(0));
}

TEST(Matrix, InversesOfKnownMatrices) {
    RatMatrix expected{{Rat(5, 3), Rat(-2, 3)}, {Rat(-1, 3), Rat(1, 3)}};
    EXPECT_EQ(inverse(RatMatrix{{1, 2}, {1, 5}}), expected);
    RatMatrix expected2{{Rat(-5, 2), Rat(3, 2)}, {Rat(2), Rat(-1)}};
    EXPECT_EQ(inverse(RatMatrix{{2, 3}, {4, 5}}), expected2);
    EXPECT_THROW(inverse(RatMatrix{{1, 2}, {2, 4}}), SingularError);
}

TEST(Matrix, NonSquareInputsAreRejected) {
    EXPECT_THROW(det(RatMatrix(2, 3)), DimensionError);
    EXPECT_THROW(RatMatrix(2, 3) * RatMatrix(2, 3), DimensionError);
}

TEST(MatrixProperty, RandomInversesAreTwoSided) {
    Gen gen(0x5eed0101);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto k = static_cast<std::size_t>(gen.integer(1, 5));
        RatMatrix a = gen.invertible(k, 20);
        RatMatrix inv = inverse(a);
        EXPECT_EQ(a * inv, RatMatrix::identity(k));
        EXPECT_EQ(inv * a, RatMatrix::identity(k));
    }
}

TEST(MatrixProperty, BareissAgreesWithCofactorExpansion) {
    Gen gen(0x5eed0102);
    for (int trial = 0; trial < 300; ++trial) {
        const auto k = static_cast<std::size_t>(gen.integer(1, 5));
        RatMatrix a = gen.matrix(k, k, 9);
        if (trial % 5 == 0 && k > 1)
            for (std::size_t j = 0; j < k; ++j) a(k - 1, j) = a(0, j) * Rat(3, 2);
        EXPECT_EQ(det(a), cofactor_det(a));
    }
}

TEST(MatrixProperty, DeterminantIsMultiplicative) {
    Gen gen(0x5eed0103);
    for (int trial = 0; trial < 200; ++trial) {
        const auto k = static_cast<std::size_t>(gen.integer(1, 4));
        RatMatrix a = gen.matrix(k, k, 20), b = gen.matrix(k, k, 20);
        EXPECT_EQ(det(a * b), det(a) * det(b));
    }
}

TEST(Matrix, SolveAndKernel) {
    RatMatrix a{{2, 1}, {1, 3}};
    auto x = solve(a, std::vector<Rat>{Rat(3), Rat(5)});
    EXPECT_EQ(a * x, (std::vector<Rat>{Rat(3), Rat(5)}));

    RatMatrix singular{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    EXPECT_EQ(rank(singular), 2u);
    auto v = kernel_vector(singular.transpose());
    ASSERT_TRUE(v.has_value());
    std::vector<Rat> zero(3, Rat(0));
    EXPECT_EQ(singular.transpose() * *v, zero);
    EXPECT_FALSE(kernel_vector(RatMatrix::identity(3)).has_value());
}

TEST(Matrix, RrefOfAugmentedSystem) {
    RatMatrix m{{1, 2, 3}, {2, 4, 7}};
    auto pivots = rref(m);
    EXPECT_EQ(pivots, (std::vector<std::size_t>{0, 2}));
    EXPECT_EQ(m, (RatMatrix{{1, 2, 0}, {0, 0, 1}}));
}

TEST(Matrix, PowersAndApproximateDeterminant) {
    RatMatrix fib{{0, 1}, {1, 1}};
    EXPECT_EQ(fib.pow(10), (RatMatrix{{34, 55}, {55, 89}}));
    ApproxMatrix a(2, 2);
    a(0, 0) = ComplexApprox(1.0); a(0, 1) = ComplexApprox(2.0);
    a(1, 0) = ComplexApprox(3.0); a(1, 1) = ComplexApprox(4.0);
    EXPECT_TRUE(det(a).contains({-2.0, 0.0}));
}
