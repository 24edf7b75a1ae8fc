#include <gtest/gtest.h>

#include "knc/decomposition.hpp"
#include "knc/errors.hpp"
#include "test_curves.hpp"

using namespace knc;
using namespace knc::testing;

namespace {

std::vector<long> by_label(const DecompositionReport& r, const std::vector<std::string>& labels) {
    std::vector<long> out;
    for (const auto& l : labels) out.push_back(r.u_multiplicities[r.table.irrep_index(l)]);
    return out;
}

const std::vector<std::string> kDihedral6 = {"rho1", "rho2", "rho3", "rho4", "chi_1", "chi_2"};

}  // namespace

TEST(Decomposition, GoldenCubic) {
    for (const auto& curve : {golden_n3k3(), golden_n3k3_unit()}) {
        auto r = decompose(curve);
        EXPECT_EQ(r.profile.group.name(), "Dihedral(6)");
        EXPECT_EQ(by_label(r, kDihedral6), (std::vector<long>{0, 0, 0, 2, 2, 0}));
        EXPECT_EQ(r.omega0_irrep, "rho2");
    }
}

TEST(Decomposition, GoldenNonic) {
    auto r = decompose(golden_n9k3());
    EXPECT_EQ(by_label(r, kDihedral6), (std::vector<long>{0, 0, 2, 4, 6, 0}));
}

TEST(Decomposition, GoldenQuartic) {
    auto r = decompose(golden_n4k2());
    EXPECT_EQ(r.profile.group.name(), "Dihedral(4)");
    EXPECT_EQ(r.u_multiplicities[r.table.irrep_index("chi_1")], 4);
    EXPECT_EQ(r.closed_forms.clause, "dihedral, twist half-order even");
    for (const auto& c : r.closed_forms.checks)
        EXPECT_EQ(c.status, FormulaStatus::Match) << c.formula << " " << c.target;
}

TEST(Decomposition, DimensionsAddUp) {
    for (const auto& nc : catalog()) {
        auto r = decompose(nc.curve);
        long total = 0, u_total = 0;
        for (std::size_t i = 0; i < r.table.irreps.size(); ++i) {
            total += r.multiplicities[i] * r.table.irreps[i].dim;
            u_total += r.u_multiplicities[i] * r.table.irreps[i].dim;
        }
        long g = nc.curve.genus();
        EXPECT_EQ(total, 2 * g + 1) << nc.name;
        EXPECT_EQ(u_total, 2 * g) << nc.name;
        std::size_t w = r.table.irrep_index(r.omega0_irrep);
        EXPECT_EQ(r.multiplicities[w], r.u_multiplicities[w] + 1) << nc.name;
    }
}

TEST(Decomposition, LinearSystemAgreesWithOrthogonality) {
    for (const auto& nc : catalog()) {
        auto r = decompose(nc.curve);
        ASSERT_FALSE(r.closed_forms.systems.empty());
        const auto& path = r.closed_forms.systems.front();
        ASSERT_TRUE(path.solution.has_value()) << nc.name;
        EXPECT_TRUE(path.agrees) << nc.name;
    }
}

TEST(Decomposition, ClosedFormTracesSystemOddGenus) {
    for (const auto& nc : catalog()) {
        long g = nc.curve.genus();
        auto r = decompose(nc.curve);
        if (r.closed_forms.systems.size() < 2) continue;
        if (g % 2 == 1 && g >= 3) EXPECT_TRUE(r.closed_forms.systems[1].agrees) << nc.name;
    }
}

TEST(Decomposition, RegularRepresentation) {
    for (auto family : {GroupFamily::Cyclic, GroupFamily::Dihedral, GroupFamily::Dicyclic, GroupFamily::U})
        for (long p : {2L, 3L, 4L, 6L}) {
            if (family == GroupFamily::U && p % 2 == 1) continue;
            auto table = character_table(build_group(family, p));
            auto m = regular_multiplicities(table);
            for (std::size_t i = 0; i < m.size(); ++i) EXPECT_EQ(m[i], table.irreps[i].dim);
        }
}

TEST(Decomposition, SolveClassSystemRejectsWrongShape) {
    auto table = character_table(build_group(GroupFamily::Dihedral, 3));
    EXPECT_THROW(solve_class_system(table, {CycloElem(1)}), InvalidArgument);
}

TEST(Decomposition, PairWitnessesGenusTwo) {
    auto curve = curve_from_roots(1, {frac(1), frac(-1), frac(4), frac(-4)});
    ASSERT_EQ(curve.genus(), 2);
    auto r = decompose(curve);
    const auto& w = r.witnesses;
    ASSERT_EQ(w.pairs.size(), 2u);
    EXPECT_EQ(w.pairs[0].first, 1);
    EXPECT_EQ(w.pairs[0].second, 4);
    EXPECT_EQ(w.pairs[1].first, 2);
    EXPECT_EQ(w.pairs[1].second, 3);
    for (const auto& p : w.pairs) EXPECT_TRUE(p.invariant);
    EXPECT_TRUE(w.unpaired.empty());
}

TEST(Decomposition, MiddleLineOddGenus) {
    for (const auto& nc : catalog()) {
        auto r = decompose(nc.curve);
        long g = nc.curve.genus();
        if (g % 2 == 0 || g < 3 || !r.profile.x_map) continue;
        const auto& lines = r.witnesses.lines;
        ASSERT_EQ(lines.size(), 2u) << nc.name;
        EXPECT_EQ(lines[0].irrep, r.omega0_irrep);
        EXPECT_EQ(lines[1].index, (g + 3) / 2);
        if (r.profile.group.family() == GroupFamily::Dihedral && r.profile.twist_half_order % 2 == 1)
            EXPECT_EQ(lines[1].irrep, "rho4") << nc.name;
    }
}

TEST(Decomposition, GoldenCubicWitnesses) {
    auto r = decompose(golden_n3k3());
    const auto& w = r.witnesses;
    ASSERT_EQ(w.pairs.size(), 2u);
    for (const auto& p : w.pairs) {
        EXPECT_TRUE(p.invariant);
        EXPECT_TRUE(p.irreducible);
        EXPECT_EQ(p.summand, "chi_1");
        ASSERT_TRUE(p.dihedral_shape.has_value());
        EXPECT_TRUE(*p.dihedral_shape);
    }
    EXPECT_EQ(w.unpaired, (std::vector<long>{6}));
    EXPECT_EQ(w.witnessed_two_dim, 2);
    EXPECT_EQ(w.computed_two_dim, 2);
    EXPECT_FALSE(w.complete);
}

TEST(Decomposition, GoldenCubicClosedForms) {
    auto r = decompose(golden_n3k3());
    const auto& cf = r.closed_forms;
    ASSERT_TRUE(cf.sum_full.has_value());
    EXPECT_EQ(*cf.sum_full, frac(1));
    bool upsilon_full_match = false;
    for (const auto& c : cf.checks)
        if (c.formula.rfind("Upsilon_", 0) == 0 && c.variant == "full exponents")
            upsilon_full_match = c.status == FormulaStatus::Match;
    EXPECT_TRUE(upsilon_full_match);
    bool xi_match = false;
    for (const auto& c : cf.checks)
        if (c.formula == "Xi_1" && c.variant == "full exponents, Xi_1 -> rho1")
            xi_match = c.status == FormulaStatus::Match;
    EXPECT_TRUE(xi_match);
}

TEST(Decomposition, UndeterminedPropagates) {
    auto curve = curve_from_roots(1, {frac(1), frac(2), frac(3), frac(6)});
    EXPECT_THROW(decompose(curve), UndeterminedGroup);
}
