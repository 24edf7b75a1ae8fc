#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>

#include "knc/central_rep.hpp"
#include "knc/decomposition.hpp"
#include "knc/errors.hpp"
#include "test_curves.hpp"

using namespace knc;
using namespace knc::testing;

namespace {

struct Outcome {
    bool passed = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            passed = false;
            details.push_back("failed: " + what);
        }
    }
    void note(const std::string& what) { details.push_back(what); }
};

std::string str(const CycloElem& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::vector<long> u_mults(const DecompositionReport& r, const std::vector<std::string>& labels) {
    std::vector<long> out;
    for (const auto& l : labels) out.push_back(r.u_multiplicities[r.table.irrep_index(l)]);
    return out;
}

std::string join(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
}

const std::vector<std::string> kDihedralLabels{"rho1", "rho2", "rho3", "rho4", "chi_1", "chi_2"};

// Test curves: the catalog, the goldens, and random curves whose group is determined.
std::vector<NamedCurve> test_curves() {
    auto curves = catalog();
    curves.push_back({"golden n3k3", golden_n3k3(), ""});
    curves.push_back({"golden n3k3 unit", golden_n3k3_unit(), ""});
    curves.push_back({"golden n9k3", golden_n9k3(), ""});
    curves.push_back({"golden n4k2", golden_n4k2(), ""});
    std::mt19937 rng(2024);
    int added = 0;
    while (added < 20) {
        auto c = random_curve(rng, 4);
        try {
            classify_group(c);
        } catch (const UndeterminedGroup&) {
            continue;
        }
        curves.push_back({"random " + std::to_string(added++), c, ""});
    }
    return curves;
}

Outcome golden_cubic() {
    Outcome o;
    auto curve = golden_n3k3();
    Reducer reducer(curve);
    auto report = decompose(reducer);
    if (!report.profile.x_map) {
        o.require(false, "no flip detected");
        return o;
    }
    auto a = action_matrix(reducer, *report.profile.x_map);
    CycloElem c = *report.profile.x_map->flip_root();
    CycloElem alpha_product = frac(1);
    for (const auto& p : curve.normal_form()->params) alpha_product *= p.pow(3);
    // Reference matrix, rows and columns indexed by omega_1..omega_6.
    std::map<std::pair<long, long>, CycloElem> reference{
        {{1, 5}, -c.pow(-2)}, {{2, 4}, -c.pow(-1)}, {{3, 3}, frac(-1)},
        {{4, 2}, -c},         {{5, 1}, -c.pow(2)},  {{6, 6}, -alpha_product * c.pow(-6)},
    };
    long mismatched = 0;
    for (long r = 1; r <= 6; ++r)
        for (long col = 1; col <= 6; ++col) {
            auto it = reference.find({r, col});
            CycloElem expected = it == reference.end() ? frac(0) : it->second;
            if (a(r, col) != expected) {
                ++mismatched;
                o.note("entry (" + std::to_string(r) + "," + std::to_string(col) + "): reference " + str(expected) +
                       ", computed " + str(a(r, col)));
            }
        }
    o.require(mismatched == 0, std::to_string(mismatched) + " of 36 reference entries differ at c = " + str(c));
    o.require(reference.at({6, 6}) == frac(-1), "(6,6) entry evaluates to " + str(reference.at({6, 6})));
    o.require(a(6, 6) == frac(-1), "computed (6,6) entry is " + str(a(6, 6)));
    CycloElem trace = u_block_trace(a);
    o.require(trace == frac(-2), "trace is " + str(trace));
    auto mults = u_mults(report, kDihedralLabels);
    o.require(mults == std::vector<long>{0, 0, 0, 2, 2, 0}, "multiplicities " + join(mults));
    o.note("trace " + str(trace) + ", multiplicities " + join(mults));

    auto unit = golden_n3k3_unit();
    auto unit_profile = classify_group(unit);
    auto b = action_matrix(unit, *unit_profile.x_map);
    bool unit_ok = true;
    for (long r = 1; r <= 6; ++r)
        for (long col = 1; col <= 6; ++col) {
            CycloElem expected = frac(0);
            if (r + col == 6) expected = frac(-1);
            if (r == 6 && col == 6) expected = frac(-1);
            if (b(r, col) != expected) unit_ok = false;
        }
    o.note(std::string("reference matrix at c = 1 ") + (unit_ok ? "matches" : "differs"));
    return o;
}

Outcome golden_nonic() {
    Outcome o;
    auto curve = golden_n9k3();
    Reducer reducer(curve);
    auto report = decompose(reducer);
    if (!report.profile.x_map) {
        o.require(false, "no flip detected");
        return o;
    }
    auto psi = action_matrix(reducer, *report.profile.x_map);
    auto psi_phi = action_matrix(reducer, compose(*report.profile.x_map, report.profile.y_map));
    CycloElem t1 = u_block_trace(psi), t2 = u_block_trace(psi_phi);
    o.require(t1 == frac(-2), "tr(psi) is " + str(t1));
    o.require(t2 == frac(2), "tr(psi phi) is " + str(t2));
    auto mults = u_mults(report, kDihedralLabels);
    o.require(mults == std::vector<long>{0, 0, 2, 4, 6, 0}, "multiplicities " + join(mults));
    o.note("tr(psi) " + str(t1) + ", tr(psi phi) " + str(t2) + ", multiplicities " + join(mults));
    return o;
}

Outcome class_counts() {
    Outcome o;
    for (long n = 1; n <= 20; ++n) {
        auto dic = build_group(GroupFamily::Dicyclic, n);
        long dic_classes = static_cast<long>(conjugacy_classes(dic).size());
        o.require(dic_classes == n + 3, "Dic(" + std::to_string(n) + ") has " + std::to_string(dic_classes));
        auto u = build_group(GroupFamily::U, n);
        long u_classes = static_cast<long>(conjugacy_classes(u).size());
        if (n % 2 == 1) {
            o.require(u.family() == GroupFamily::Dihedral && u.param() == n && u.alias().has_value(),
                      "U(" + std::to_string(n) + ") is " + u.name());
            continue;
        }
        long expected = n % 4 == 2 ? n + 6 : n + 3;
        o.require(u_classes == expected, "U(" + std::to_string(n) + ") has " + std::to_string(u_classes));
    }
    o.note("n = 1..20 checked");
    return o;
}

Outcome character_tables() {
    Outcome o;
    long tables = 0;
    for (auto fam : {GroupFamily::Cyclic, GroupFamily::Dihedral, GroupFamily::Dicyclic, GroupFamily::U})
        for (long p = 1; p <= 80; ++p) {
            if (fam == GroupFamily::U && p % 2 == 1) continue;
            auto g = build_group(fam, p);
            if (g.order() > 80) break;
            auto t = character_table(g);
            ++tables;
            std::string name = g.name();
            o.require(t.irreps.size() == t.classes.size(), name + " irreps != classes");
            long dims = 0;
            for (const auto& rho : t.irreps) dims += rho.dim * rho.dim;
            o.require(dims == g.order(), name + " sum of squared dims is " + std::to_string(dims));
            o.require(t.rows_orthonormal(), name + " rows");
            o.require(t.columns_orthogonal(), name + " columns");
        }
    o.note(std::to_string(tables) + " tables checked");
    return o;
}

Outcome oracle_equivalence() {
    Outcome o;
    std::mt19937 rng(99);
    long compared = 0;
    for (int k = 0; k < 20; ++k) {
        auto curve = random_curve(rng, 4);
        Reducer reducer(curve);
        long n = curve.genus();
        unsigned m = curve.field_order();
        std::uniform_int_distribution<long> expo(-4 * n - 4, 4 * n + 4);
        std::uniform_int_distribution<int> kind(0, 1);
        for (int s = 0; s < 200; ++s) {
            CycloElem coeff = random_elem(rng, m);
            if (coeff.is_zero()) coeff = frac(1);
            long e = expo(rng);
            auto form = kind(rng) ? DifferentialForm::udt_monomial(e, coeff) : DifferentialForm::dt_monomial(e, coeff);
            if (reducer.reduce(form) != reduce_oracle(curve, form)) {
                o.require(false, "curve " + std::to_string(k) + " exponent " + std::to_string(e));
                return o;
            }
            ++compared;
        }
        for (long a = -6; a <= 6; ++a) {
            if (a != 0) {
                auto d = exact_dt_form(a);
                o.require(reducer.reduce(d).is_zero() && reduce_oracle(curve, d).is_zero(),
                          "d(t^" + std::to_string(a) + ") on curve " + std::to_string(k));
            }
            auto du = ingest(curve, exact_kahler_form(a));
            o.require(reducer.reduce(du).is_zero() && reduce_oracle(curve, du).is_zero(),
                      "d(t^" + std::to_string(a) + " u) on curve " + std::to_string(k));
            auto du3 = exact_u_form(curve, a, 1);
            o.require(reducer.reduce(du3).is_zero() && reduce_oracle(curve, du3).is_zero(),
                      "d(t^" + std::to_string(a) + " u^3) on curve " + std::to_string(k));
        }
    }
    o.note("20 curves, " + std::to_string(compared) + " monomials, exact forms for a in -6..6");
    return o;
}

Outcome homomorphism(const std::vector<NamedCurve>& curves) {
    Outcome o;
    for (const auto& nc : curves) {
        auto profile = classify_group(nc.curve);
        auto rep = rep_from_profile(nc.curve, profile);
        o.require(matrix_relations_hold(rep), nc.name + " relations");
        o.require(homomorphism_holds(rep), nc.name + " homomorphism");
    }
    o.note(std::to_string(curves.size()) + " curves");
    return o;
}

Outcome trace_formula(const std::vector<NamedCurve>& curves) {
    Outcome o;
    std::map<long, std::pair<long, long>> by_genus;  // genus -> (agree, total)
    for (const auto& nc : curves) {
        long g = nc.curve.genus();
        if (g > 6) continue;
        Reducer reducer(nc.curve);
        auto report = trace_closed_form(reducer, classify_group(nc.curve));
        if (!report.flip) continue;
        auto& [agree, total] = by_genus[g];
        ++total;
        if (*report.flip_closed_form == *report.flip_u_trace) {
            ++agree;
        } else if (total - agree == 1) {
            o.note(nc.name + ": closed form " + str(*report.flip_closed_form) + ", computed " +
                   str(*report.flip_u_trace));
        }
    }
    for (const auto& [g, counts] : by_genus) {
        o.require(counts.first == counts.second, "genus " + std::to_string(g) + ": " + std::to_string(counts.first) +
                                                     " of " + std::to_string(counts.second) + " flip curves agree");
        if (counts.first == counts.second)
            o.note("genus " + std::to_string(g) + ": " + std::to_string(counts.second) + " of " +
                   std::to_string(counts.second) + " agree");
    }
    return o;
}

Outcome accounting(const std::vector<NamedCurve>& curves) {
    Outcome o;
    std::map<std::string, std::pair<long, long>> statuses;  // formula -> (match, mismatch)
    for (const auto& nc : curves) {
        auto r = decompose(nc.curve);
        long total = 0;
        for (std::size_t i = 0; i < r.table.irreps.size(); ++i) {
            o.require(r.multiplicities[i] >= 0, nc.name + " negative multiplicity");
            total += r.multiplicities[i] * r.table.irreps[i].dim;
        }
        o.require(total == 2 * nc.curve.genus() + 1, nc.name + " dimensions add to " + std::to_string(total));
        o.require(!r.closed_forms.systems.empty() && r.closed_forms.systems.front().agrees,
                  nc.name + " linear system path disagrees");
        for (const auto& check : r.closed_forms.checks) {
            if (check.status == FormulaStatus::NotApplicable) continue;
            std::string key = check.formula + (check.variant.empty() || check.variant == "-" ? "" : " [" + check.variant + "]");
            auto& [match, mismatch] = statuses[key];
            (check.status == FormulaStatus::Match ? match : mismatch) += 1;
        }
    }
    for (const auto& [key, counts] : statuses)
        o.note(key + ": " + std::to_string(counts.first) + " match, " + std::to_string(counts.second) + " mismatch");
    o.require(!statuses.empty(), "no closed form was evaluated");
    o.note(std::to_string(curves.size()) + " curves");
    return o;
}

Outcome dihedral_even_clause() {
    Outcome o;
    auto curve = golden_n4k2();
    auto r = decompose(curve);
    long n = curve.genus(), k = curve.normal_form()->rotation;
    o.note("group " + r.profile.group.name() + ", k = " + std::to_string(r.profile.twist_half_order) +
           ", l = " + std::to_string(r.profile.quotient));
    for (long h = 1; h <= k - 1; ++h) {
        std::string label = "chi_" + std::to_string(h);
        long expected = (1 - (h % 2 == 0 ? 1 : -1)) * n / k;
        long got = r.u_multiplicities[r.table.irrep_index(label)];
        o.require(got == expected, label + " multiplicity " + std::to_string(got) + ", expected " +
                                       std::to_string(expected));
        o.note(label + ": " + std::to_string(got));
    }
    return o;
}

}  // namespace

int main() {
    auto curves = test_curves();
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"golden n=3, k=3 flip matrix, trace and multiplicities", golden_cubic},
        {"golden n=9, k=3 traces and multiplicities", golden_nonic},
        {"conjugacy class counts for n <= 20", class_counts},
        {"character tables up to order 80", character_tables},
        {"reduction equals linear-algebra oracle; exact forms vanish", oracle_equivalence},
        {"action is a homomorphism", [&] { return homomorphism(curves); }},
        {"flip trace closed form, n <= 6", [&] { return trace_formula(curves); }},
        {"decomposition accounting and closed-form reporting", [&] { return accounting(curves); }},
        {"twist-even dihedral clause, n = 4, k = 2", dihedral_even_clause},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.passed) ++failures;
        std::cout << "criterion " << i + 1 << ": " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i].first
                  << " (" << static_cast<long>(secs * 1000) << " ms)\n";
        for (const auto& d : o.details) std::cout << "    " << d << "\n";
    }
    std::cout << criteria.size() - failures << " of " << criteria.size() << " criteria pass\n";
    return failures == 0 ? 0 : 1;
}
