#include <gtest/gtest.h>

#include "knc/central_rep.hpp"
#include "knc/errors.hpp"
#include "test_curves.hpp"

using namespace knc;
using namespace knc::testing;

namespace {

Matrix oracle_action_matrix(const HyperellipticCurve& curve, const AlgebraMap& map) {
    std::size_t size = static_cast<std::size_t>(2 * curve.genus() + 1);
    Matrix out(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        DifferentialForm basis = j == 0 ? DifferentialForm::dt_monomial(-1)
                                        : DifferentialForm::udt_monomial(-static_cast<long>(j));
        auto image = reduce_oracle(curve, apply_map(map, basis));
        for (std::size_t i = 0; i < size; ++i) out(i, j) = image.coords[i];
    }
    return out;
}

}  // namespace

TEST(CentralRep, OmegaZeroLine) {
    for (const auto& nc : catalog()) {
        auto profile = classify_group(nc.curve);
        Reducer reducer(nc.curve);
        for (const auto& m : profile.element_maps) {
            auto a = action_matrix(reducer, m);
            EXPECT_EQ(a(0, 0), frac(m.kind() == MapKind::Twist ? 1 : -1)) << nc.name;
            for (std::size_t i = 1; i < a.rows(); ++i) {
                EXPECT_TRUE(a(i, 0).is_zero());
                EXPECT_TRUE(a(0, i).is_zero());
            }
        }
    }
}

TEST(CentralRep, TwistsAreDiagonal) {
    for (const auto& nc : catalog()) {
        auto profile = classify_group(nc.curve);
        auto a = action_matrix(nc.curve, profile.y_map);
        EXPECT_TRUE(a.is_diagonal()) << nc.name;
        const CycloElem& root = profile.y_map.twist_root();
        for (long i = 1; i <= 2 * nc.curve.genus(); ++i)
            EXPECT_EQ(a(i, i), root.pow(3 - 2 * i)) << nc.name << " i=" << i;
    }
}

TEST(CentralRep, FlipAntiDiagonalBlock) {
    for (const auto& nc : catalog()) {
        auto profile = classify_group(nc.curve);
        long g = nc.curve.genus();
        if (!profile.x_map || g < 2) continue;
        const auto& flip = *profile.x_map;
        if (!flip.flip_root()) continue;
        auto a = action_matrix(nc.curve, flip);
        const CycloElem& c = *flip.flip_root();
        const CycloElem& sign = *flip.flip_sign();
        for (long i = 1; i <= g + 2; ++i)
            for (long r = 1; r <= 2 * g; ++r) {
                CycloElem expected = r == g + 3 - i ? -sign * c.pow(g + 3 - 2 * i) : CycloElem(0);
                EXPECT_EQ(a(r, i), expected) << nc.name << " column " << i << " row " << r;
            }
    }
}

TEST(CentralRep, GoldenCubicFlip) {
    auto curve = golden_n3k3();
    auto profile = classify_group(curve);
    ASSERT_TRUE(profile.x_map.has_value());
    auto a = action_matrix(curve, *profile.x_map);
    CycloElem c = frac(2);
    for (long i = 1; i <= 5; ++i) EXPECT_EQ(a(6 - i, i), -c.pow(6 - 2 * i));
    EXPECT_EQ(a(6, 6), frac(-1));
    for (long r = 1; r <= 5; ++r) EXPECT_TRUE(a(r, 6).is_zero());
    EXPECT_EQ(u_block_trace(a), frac(-2));
}

TEST(CentralRep, GoldenNonicTraces) {
    auto curve = golden_n9k3();
    auto profile = classify_group(curve);
    Reducer reducer(curve);
    ASSERT_TRUE(profile.x_map.has_value());
    auto psi = action_matrix(reducer, *profile.x_map);
    auto psi_phi = action_matrix(reducer, compose(*profile.x_map, profile.y_map));
    EXPECT_EQ(u_block_trace(psi), frac(-2));
    EXPECT_EQ(u_block_trace(psi_phi), frac(2));
}

TEST(CentralRep, MatchesOracleReduction) {
    for (const auto& nc : catalog()) {
        if (nc.curve.genus() > 5) continue;
        auto profile = classify_group(nc.curve);
        EXPECT_EQ(action_matrix(nc.curve, profile.y_map), oracle_action_matrix(nc.curve, profile.y_map));
        if (profile.x_map)
            EXPECT_EQ(action_matrix(nc.curve, *profile.x_map),
                      oracle_action_matrix(nc.curve, *profile.x_map))
                << nc.name;
    }
}

TEST(CentralRep, HomomorphismAndInverses) {
    for (const auto& nc : catalog()) {
        auto profile = classify_group(nc.curve);
        auto rep = rep_from_profile(nc.curve, profile);
        EXPECT_TRUE(matrix_relations_hold(rep)) << nc.name;
        EXPECT_TRUE(homomorphism_holds(rep)) << nc.name;
        const auto& g = profile.group;
        EXPECT_TRUE(rep.matrix_of(g.identity()).is_identity());
        for (const auto& e : g.elements())
            EXPECT_EQ(rep.matrix_of(g.inverse(e)), rep.matrix_of(e).inverse()) << nc.name;
        ASSERT_EQ(rep.character.size(), rep.classes.size());
        EXPECT_EQ(rep.character[0], frac(2 * nc.curve.genus() + 1));
    }
}

TEST(CentralRep, SignFlipActsAsMinusOneOnUForms) {
    auto curve = curve_from_roots(1, {frac(1), frac(2), frac(3), frac(5)});
    auto profile = classify_group(curve);
    ASSERT_EQ(profile.group.name(), "Cyclic(2)");
    auto rep = rep_from_profile(curve, profile);
    auto a = rep.matrix_of(profile.group.y());
    EXPECT_EQ(a(0, 0), frac(1));
    for (std::size_t i = 1; i < a.rows(); ++i) EXPECT_EQ(a(i, i), frac(-1));
    EXPECT_EQ(rep.character[1], frac(-3));
}

TEST(CentralRep, TraceClosedFormOddGenus) {
    for (const auto& nc : catalog()) {
        long g = nc.curve.genus();
        if (g % 2 == 0 || g < 3) continue;
        Reducer reducer(nc.curve);
        auto report = trace_closed_form(reducer, classify_group(nc.curve));
        if (!report.flip) continue;
        EXPECT_EQ(*report.flip_closed_form, *report.flip_u_trace) << nc.name;
        EXPECT_EQ(*report.flip_full_trace, *report.flip_u_trace - frac(1));
    }
}

TEST(CentralRep, TraceClosedFormEvenGenusAndGenusOne) {
    // The closed form counts a fixed middle vector that only exists for odd genus >= 3.
    for (const auto& nc : catalog()) {
        long g = nc.curve.genus();
        Reducer reducer(nc.curve);
        auto report = trace_closed_form(reducer, classify_group(nc.curve));
        if (!report.flip) continue;
        if (g % 2 == 0)
            EXPECT_EQ(*report.flip_u_trace, *report.flip_closed_form + frac(1)) << nc.name;
        if (g == 1) {
            EXPECT_EQ(*report.flip_closed_form, frac(-1));
            EXPECT_EQ(*report.flip_u_trace, frac(-2));
        }
    }
}

TEST(CentralRep, TwistPowerTraces) {
    for (const auto& nc : catalog()) {
        Reducer reducer(nc.curve);
        auto report = trace_closed_form(reducer, classify_group(nc.curve));
        EXPECT_EQ(report.twist_closed_form, report.twist_full_trace) << nc.name;
        for (const auto& p : report.twist_powers) {
            EXPECT_EQ(p.u_trace, p.diagonal_sum) << nc.name << " power " << p.power;
            if (p.expected_zero) EXPECT_TRUE(p.u_trace.is_zero()) << nc.name << " power " << p.power;
        }
    }
}
