#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "knc/errors.hpp"
#include "knc/reduction.hpp"
#include "test_curves.hpp"

using namespace knc;
using knc::testing::frac;
using knc::testing::random_curve;
using knc::testing::random_elem;

namespace {

DifferentialClass omega(long n, long i) { return DifferentialClass::unit(n, i); }

DifferentialClass scaled(DifferentialClass c, const CycloElem& s) {
    c *= s;
    return c;
}

}  // namespace

TEST(Reduction, CubicPRowZero) {
    auto curve = knc::testing::cubic_t3_minus_t();
    auto p = p_table(curve, 0);
    EXPECT_EQ(p.at(0, -1), frac(0));
    EXPECT_EQ(p.at(0, -2), frac(-1, 5));
    EXPECT_EQ(p.at(-1, -1), frac(1));
    EXPECT_EQ(p.at(-2, -2), frac(1));
    EXPECT_EQ(p.at(-2, -1), frac(0));
    auto oracle = reduce_oracle(curve, DifferentialForm::udt_monomial(0));
    EXPECT_EQ(oracle, scaled(omega(1, 2), frac(-1, 5)));
}

TEST(Reduction, CubicQRowThree) {
    auto curve = knc::testing::cubic_t3_minus_t();
    auto qt = q_table(curve, 3);
    EXPECT_EQ(qt.at(1, -1), frac(1));
    EXPECT_EQ(qt.at(2, -2), frac(1));
    // d(t^{-3} u^3) = (-3 t^{-4} p + 3/2 t^{-3} p') u dt = 3/2 t^{-1} u dt + 3/2 t^{-3} u dt,
    // so t^{-3} u dt is the negative of omega_1.
    auto oracle = reduce_oracle(curve, DifferentialForm::udt_monomial(-3));
    EXPECT_EQ(oracle, scaled(omega(1, 1), frac(-1)));
    EXPECT_EQ(qt.at(3, -1), frac(-1));
    EXPECT_EQ(qt.at(3, -2), frac(0));
}

TEST(Reduction, ReduceFormExamples) {
    auto curve = knc::testing::cubic_t3_minus_t();
    EXPECT_TRUE(reduce_form(curve, DifferentialForm::dt_monomial(5)).is_zero());
    EXPECT_EQ(reduce_form(curve, DifferentialForm::dt_monomial(-1)), omega(1, 0));
    EXPECT_EQ(reduce_form(curve, DifferentialForm::udt_monomial(0)), scaled(omega(1, 2), frac(-1, 5)));
}

TEST(Reduction, RecursionResidualsVanish) {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 6; ++trial) {
        auto curve = random_curve(rng);
        long r = 2 * curve.genus();
        auto p = p_table(curve, 8);
        for (long k = 0; k <= 8; ++k)
            for (const auto& v : p_recursion_residual(curve, p, k)) EXPECT_TRUE(v.is_zero());
        auto qt = q_table(curve, r + 8);
        for (long m = r + 1; m <= r + 8; ++m)
            for (const auto& v : q_recursion_residual(curve, qt, m)) EXPECT_TRUE(v.is_zero());
        for (long b = -6; b <= 6; ++b)
            EXPECT_EQ(relation_coefficient(curve, b, r + 1), frac(2 * b + 6 * curve.genus() + 3));
    }
}

TEST(Reduction, BasisIsFixed) {
    std::mt19937 rng(12);
    for (int trial = 0; trial < 5; ++trial) {
        auto curve = random_curve(rng);
        long n = curve.genus();
        EXPECT_EQ(reduce_oracle(curve, DifferentialForm::dt_monomial(-1)), omega(n, 0));
        for (long i = 1; i <= 2 * n; ++i) {
            auto form = DifferentialForm::udt_monomial(-i);
            EXPECT_EQ(reduce_form(curve, form), omega(n, i));
            EXPECT_EQ(reduce_oracle(curve, form), omega(n, i));
        }
    }
}

TEST(Reduction, ExactFormsVanish) {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 5; ++trial) {
        auto curve = random_curve(rng);
        Reducer reducer(curve);
        for (long a = -9; a <= 6; ++a) {
            EXPECT_TRUE(reducer.reduce(exact_dt_form(a)).is_zero());
            EXPECT_TRUE(reduce_oracle(curve, exact_dt_form(a)).is_zero());
            auto du3 = exact_u_form(curve, a, 1);
            EXPECT_TRUE(reducer.reduce(du3).is_zero()) << "a=" << a;
            EXPECT_TRUE(reduce_oracle(curve, du3).is_zero()) << "a=" << a;
            EXPECT_TRUE(reducer.reduce(exact_u_form(curve, a, 2)).is_zero());
            EXPECT_TRUE(reducer.reduce(ingest(curve, exact_kahler_form(a))).is_zero());
            // d(t^a u^2) = a t^{a-1} p dt + 2 t^a u du
            KahlerForm sq;
            sq.f0 = LaurentPoly::monomial(a - 1, frac(a)) * curve.poly();
            sq.g1 = LaurentPoly::monomial(a, frac(2));
            EXPECT_TRUE(reduce_oracle(curve, ingest(curve, sq)).is_zero());
        }
    }
}

TEST(Reduction, OracleAgreesOnRandomMonomials) {
    std::mt19937 rng(14);
    std::uniform_int_distribution<long> expo(-16, 12);
    for (int trial = 0; trial < 4; ++trial) {
        auto curve = random_curve(rng);
        Reducer reducer(curve);
        for (int i = 0; i < 40; ++i) {
            auto coeff = random_elem(rng, curve.field_order(), 4);
            auto form = DifferentialForm::udt_monomial(expo(rng), coeff);
            form += DifferentialForm::dt_monomial(expo(rng), coeff);
            EXPECT_EQ(reducer.reduce(form), reduce_oracle(curve, form));
        }
    }
}

TEST(Reduction, Linearity) {
    std::mt19937 rng(15);
    std::uniform_int_distribution<long> expo(-12, 10);
    auto curve = random_curve(rng);
    Reducer reducer(curve);
    for (int i = 0; i < 10; ++i) {
        auto x = DifferentialForm::udt_monomial(expo(rng), random_elem(rng, curve.field_order()));
        auto y = DifferentialForm::udt_monomial(expo(rng), random_elem(rng, curve.field_order()));
        auto alpha = random_elem(rng, curve.field_order());
        auto beta = random_elem(rng, curve.field_order());
        auto lhs = reducer.reduce(x * alpha + y * beta);
        auto rhs = scaled(reducer.reduce(x), alpha);
        rhs += scaled(reducer.reduce(y), beta);
        EXPECT_EQ(lhs, rhs);
    }
}

TEST(Reduction, ConcurrentReadersSeeOneTable) {
    auto curve = knc::testing::golden_n3k3();
    Reducer shared(curve);
    std::vector<std::vector<CycloElem>> results(4);
    std::vector<std::thread> pool;
    for (int t = 0; t < 4; ++t)
        pool.emplace_back([&, t] { results[t] = shared.u_monomial(t % 2 ? 14 : -20); });
    for (auto& th : pool) th.join();
    Reducer fresh(curve);
    EXPECT_EQ(results[0], fresh.u_monomial(-20));
    EXPECT_EQ(results[1], fresh.u_monomial(14));
    EXPECT_EQ(results[2], results[0]);
    EXPECT_EQ(results[3], results[1]);
}

TEST(Reduction, TableIndexChecks) {
    auto p = p_table(knc::testing::cubic_t3_minus_t(), 2);
    EXPECT_THROW(p.at(3, -1), InvalidArgument);
    EXPECT_THROW(p.at(0, 0), InvalidArgument);
    EXPECT_THROW(p_table(knc::testing::cubic_t3_minus_t(), -1), InvalidArgument);
}
