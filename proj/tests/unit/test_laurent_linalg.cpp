#include <gtest/gtest.h>

#include <random>

#include "knc/errors.hpp"
#include "knc/laurent.hpp"
#include "knc/linalg.hpp"
#include "test_curves.hpp"

using namespace knc;
using knc::testing::frac;
using knc::testing::random_elem;
using knc::testing::unity;

TEST(Laurent, ArithmeticAndZeroPruning) {
    auto a = LaurentPoly::monomial(-2, frac(3)) + LaurentPoly::monomial(4, unity(3));
    auto b = LaurentPoly::monomial(-2, frac(-3));
    auto s = a + b;
    EXPECT_EQ(s.terms().size(), 1u);
    EXPECT_EQ(s.coeff(4), unity(3));
    EXPECT_EQ(s.coeff(-2), frac(0));
    auto prod = LaurentPoly::monomial(-1) * LaurentPoly::monomial(1);
    EXPECT_EQ(prod, LaurentPoly::monomial(0));
    EXPECT_TRUE((a - a).is_zero());
}

TEST(Laurent, DerivativeAndSubstitution) {
    auto f = LaurentPoly::monomial(-3, frac(2)) + LaurentPoly::monomial(0, frac(5)) +
             LaurentPoly::monomial(2, frac(1));
    auto df = f.derivative();
    EXPECT_EQ(df.coeff(-4), frac(-6));
    EXPECT_EQ(df.coeff(1), frac(2));
    EXPECT_EQ(df.coeff(-1), frac(0));
    // f(2 t^{-1})
    auto g = f.substitute(frac(2), -1);
    EXPECT_EQ(g.coeff(3), frac(2, 8));
    EXPECT_EQ(g.coeff(-2), frac(4));
    EXPECT_EQ(f.evaluate(frac(2)), frac(2, 8) + frac(5) + frac(4));
}

TEST(Linalg, InverseSolveAndNullspace) {
    auto m = Matrix::from_rows({{frac(1), unity(3)}, {unity(4), frac(2)}});
    auto inv = m.inverse();
    EXPECT_TRUE((m * inv).is_identity());
    EXPECT_TRUE((inv * m).is_identity());
    EXPECT_EQ(m.determinant(), frac(2) - unity(3) * unity(4));
    auto sing = Matrix::from_rows({{frac(1), frac(2)}, {frac(2), frac(4)}});
    EXPECT_EQ(sing.rank(), 1u);
    EXPECT_THROW(sing.inverse(), DivisionByZero);
    auto ns = sing.nullspace();
    ASSERT_EQ(ns.size(), 1u);
    auto img = sing * ns[0];
    EXPECT_TRUE(img[0].is_zero() && img[1].is_zero());
}

TEST(Linalg, RandomMatricesInvert) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        Matrix m(4, 4);
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < 4; ++c) m(r, c) = random_elem(rng, 12, 3);
        if (m.determinant().is_zero()) continue;
        EXPECT_TRUE((m * m.inverse()).is_identity());
        EXPECT_EQ(m.pow(3), m * m * m);
        EXPECT_TRUE((m.pow(-2) * m.pow(2)).is_identity());
        EXPECT_EQ((m * m).trace(), (m.transpose() * m.transpose()).trace());
    }
}

TEST(Linalg, LargeProductsMatchEntrywiseSums) {
    std::mt19937 rng(11);
    for (unsigned order : {1u, 5u, 12u}) {
        Matrix a(9, 7), b(7, 10);
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 7; ++j) a(i, j) = random_elem(rng, order) * frac(1, 1 + (i + j) % 4);
        for (std::size_t i = 0; i < 7; ++i)
            for (std::size_t j = 0; j < 10; ++j) b(i, j) = random_elem(rng, 3) * frac(2, 3);
        a(0, 0) = frac(1) / 7 + unity(4);
        Matrix p = a * b;
        for (std::size_t i = 0; i < 9; ++i)
            for (std::size_t j = 0; j < 10; ++j) {
                CycloElem acc(0);
                for (std::size_t k = 0; k < 7; ++k) acc += a(i, k) * b(k, j);
                EXPECT_EQ(p(i, j), acc);
            }
    }
}

TEST(Linalg, HugeEntriesFallBackExactly) {
    Matrix a(8, 8), b(8, 8);
    CycloElem big(Rational(Integer("1000000000000000000000"), Integer(3)));
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            a(i, j) = big + unity(5, static_cast<long>(i));
            b(i, j) = unity(5, static_cast<long>(j)) * frac(static_cast<long>(i + 1));
        }
    Matrix p = a * b;
    CycloElem acc(0);
    for (std::size_t k = 0; k < 8; ++k) acc += a(2, k) * b(k, 3);
    EXPECT_EQ(p(2, 3), acc);
}
