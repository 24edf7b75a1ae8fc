#include <functional>
#include <random>

#include "knc/automorphisms.hpp"
#include "knc/central_rep.hpp"
#include "knc/decomposition.hpp"
#include "knc/errors.hpp"
#include "knc_cli/cli.hpp"

namespace knc::cli {

namespace {

using Check = std::pair<std::string, std::function<bool()>>;

CycloElem q(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return CycloElem(r);
}

CycloElem random_elem(std::mt19937& rng, unsigned order) {
    std::uniform_int_distribution<long> num(-5, 5);
    std::uniform_int_distribution<long> den(1, 3);
    std::vector<Rational> raw(order);
    for (auto& x : raw) {
        x = Rational(num(rng), den(rng));
        x.canonicalize();
    }
    return CycloElem::from_raw(order, raw);
}

std::vector<HyperellipticCurve> small_curves() {
    return {
        curve_from_roots(1, {q(1), q(-1)}),
        curve_from_roots(1, {q(1), q(-1), q(4), q(-4)}),
        curve_normal_form({3, {q(1), q(4)}}),
        curve_normal_form({2, {q(1), q(16), q(2), q(8)}}),
        curve_normal_form({2, {q(1), q(2), q(3)}}),
        curve_from_roots(3, {q(1), q(2), CycloElem::root_of_unity(3, 1), q(5)}),
    };
}

Json suite(const std::string& module, const std::vector<Check>& checks) {
    Json s;
    s["module"] = module;
    Json list = Json::array();
    long passed = 0, failed = 0;
    for (const auto& [name, fn] : checks) {
        bool ok = false;
        std::string error;
        try {
            ok = fn();
        } catch (const std::exception& e) {
            error = e.what();
        }
        Json c{{"name", name}, {"passed", ok}};
        if (!error.empty()) c["error"] = error;
        list.push_back(std::move(c));
        (ok ? passed : failed) += 1;
    }
    s["checks"] = std::move(list);
    s["passed"] = passed;
    s["failed"] = failed;
    return s;
}

std::vector<Check> field_checks() {
    return {
        {"field axioms on random triples",
         [] {
             std::mt19937 rng(1);
             for (unsigned m : {1u, 3u, 4u, 5u, 8u, 12u})
                 for (int i = 0; i < 10; ++i) {
                     auto a = random_elem(rng, m), b = random_elem(rng, m), c = random_elem(rng, m);
                     if ((a + b) + c != a + (b + c) || (a * b) * c != a * (b * c)) return false;
                     if (a * (b + c) != a * b + a * c || a * b != b * a) return false;
                 }
             return true;
         }},
        {"inverses",
         [] {
             std::mt19937 rng(2);
             for (unsigned m : {3u, 5u, 7u, 12u})
                 for (int i = 0; i < 10; ++i) {
                     auto a = random_elem(rng, m);
                     if (!a.is_zero() && !(a * a.inverse()).is_one()) return false;
                 }
             return true;
         }},
        {"reduction modulo the cyclotomic polynomial",
         [] {
             return cyclo_new(4, {0, 0, 1}) == q(-1) &&
                    cyclo_new(3, {0, 0, 1}) == q(-1) - root_of_unity(3, 1) &&
                    root_of_unity(8, 1) * root_of_unity(8, 1) == root_of_unity(4, 1) &&
                    root_of_unity(6, 1) + root_of_unity(6, 5) == q(1);
         }},
        {"square roots square back",
         [] {
             for (unsigned m : {1u, 3u, 4u, 5u})
                 for (long j = 0; j < 5; ++j) {
                     CycloElem a = q(9, 4) * root_of_unity(m, j);
                     auto s = try_sqrt(a);
                     if (!s || *s * *s != a) return false;
                 }
             return !try_sqrt(q(1) + root_of_unity(5, 1)).has_value();
         }},
        {"approximation matches exact value",
         [] {
             auto [re, im] = approx_complex(root_of_unity(6, 1) + root_of_unity(6, 5), 10);
             return re == "1" && im == "0";
         }},
    };
}

std::vector<Check> curve_checks() {
    return {
        {"roots and zero annihilate p",
         [] {
             for (const auto& c : small_curves()) {
                 if (!eval_p(c, q(0)).is_zero()) return false;
                 for (const auto& r : c.roots())
                     if (!eval_p(c, r).is_zero()) return false;
             }
             return true;
         }},
        {"a_1 is the product of the roots",
         [] {
             for (const auto& c : small_curves()) {
                 CycloElem prod(1);
                 for (const auto& r : c.roots()) prod *= r;
                 if (c.coeff(1) != prod) return false;
             }
             return true;
         }},
        {"normal form agrees with raw roots",
         [] {
             auto nf = curve_normal_form({3, {q(1), q(4)}});
             return curve_from_roots(nf.field_order(), nf.roots()).coefficients() == nf.coefficients();
         }},
        {"colliding roots are rejected",
         [] {
             try {
                 curve_from_roots(1, {q(1), q(1)});
             } catch (const InvalidCurve&) {
                 return true;
             }
             return false;
         }},
    };
}

std::vector<Check> reduction_checks() {
    return {
        {"basis forms reduce to themselves",
         [] {
             for (const auto& c : small_curves()) {
                 long n = c.genus();
                 if (reduce_form(c, DifferentialForm::dt_monomial(-1)) != DifferentialClass::unit(n, 0)) return false;
                 for (long i = 1; i <= 2 * n; ++i)
                     if (reduce_form(c, DifferentialForm::udt_monomial(-i)) != DifferentialClass::unit(n, i))
                         return false;
             }
             return true;
         }},
        {"recursive path equals oracle on monomials",
         [] {
             for (const auto& c : small_curves()) {
                 long n = c.genus();
                 for (long e = -3 * n - 2; e <= 2 * n + 2; ++e) {
                     auto f = DifferentialForm::udt_monomial(e);
                     auto g = DifferentialForm::dt_monomial(e);
                     if (reduce_form(c, f) != reduce_oracle(c, f) || reduce_form(c, g) != reduce_oracle(c, g))
                         return false;
                 }
             }
             return true;
         }},
        {"exact forms reduce to zero",
         [] {
             for (const auto& c : small_curves())
                 for (long a = -4; a <= 4; ++a) {
                     if (a != 0 && !reduce_form(c, exact_dt_form(a)).is_zero()) return false;
                     if (!reduce_form(c, exact_u_form(c, a)).is_zero()) return false;
                 }
             return true;
         }},
        {"recurrences hold on the tables",
         [] {
             for (const auto& c : small_curves()) {
                 auto p = p_table(c, 6);
                 auto qt = q_table(c, 4 * c.genus() + 4);
                 for (long k = 0; k <= 6; ++k)
                     for (const auto& v : p_recursion_residual(c, p, k))
                         if (!v.is_zero()) return false;
                 for (long m = 2 * c.genus() + 1; m <= qt.last_row(); ++m)
                     for (const auto& v : q_recursion_residual(c, qt, m))
                         if (!v.is_zero()) return false;
             }
             return true;
         }},
    };
}

std::vector<Check> group_checks() {
    return {
        {"presentations hold",
         [] {
             for (auto fam : {GroupFamily::Cyclic, GroupFamily::Dihedral, GroupFamily::Dicyclic, GroupFamily::U})
                 for (long p = 1; p <= 8; ++p)
                     if (!presentation_holds(build_group(fam, p))) return false;
             return true;
         }},
        {"class counts of dicyclic and U families",
         [] {
             for (long n = 1; n <= 12; ++n) {
                 if (static_cast<long>(conjugacy_classes(build_group(GroupFamily::Dicyclic, n)).size()) != n + 3)
                     return false;
                 if (n % 2 == 1) continue;
                 long expected = n % 4 == 2 ? n + 6 : n + 3;
                 if (static_cast<long>(conjugacy_classes(build_group(GroupFamily::U, n)).size()) != expected)
                     return false;
             }
             return true;
         }},
        {"character tables are orthogonal",
         [] {
             for (auto fam : {GroupFamily::Cyclic, GroupFamily::Dihedral, GroupFamily::Dicyclic, GroupFamily::U})
                 for (long p = 1; p <= 6; ++p) {
                     if (fam == GroupFamily::U && p % 2 == 1) continue;
                     auto t = character_table(build_group(fam, p));
                     if (!t.rows_orthonormal() || !t.columns_orthogonal()) return false;
                 }
             return true;
         }},
    };
}

std::vector<Check> automorphism_checks() {
    return {
        {"golden curve groups",
         [] {
             return classify_group(curve_normal_form({3, {q(1), q(4)}})).group.name() == "Dihedral(6)" &&
                    classify_group(curve_from_roots(1, {q(1), q(-1)})).group.name() == "U(2)" &&
                    classify_group(curve_normal_form({2, {q(1), q(2), q(3)}})).group.name() == "Cyclic(4)";
         }},
        {"every group element is an automorphism",
         [] {
             for (const auto& c : small_curves()) {
                 auto profile = classify_group(c);
                 if (!generator_relations_hold(profile)) return false;
                 for (const auto& m : profile.element_maps)
                     if (!verify_automorphism(c, m)) return false;
             }
             return true;
         }},
    };
}

std::vector<Check> central_rep_checks() {
    return {
        {"action is a homomorphism",
         [] {
             for (const auto& c : small_curves()) {
                 auto rep = rep_from_profile(c, classify_group(c));
                 if (!matrix_relations_hold(rep) || !homomorphism_holds(rep)) return false;
             }
             return true;
         }},
        {"golden flip trace",
         [] {
             auto c = curve_normal_form({3, {q(1), q(4)}});
             auto profile = classify_group(c);
             return profile.x_map && u_block_trace(action_matrix(c, *profile.x_map)) == q(-2);
         }},
    };
}

std::vector<Check> decomposition_checks() {
    return {
        {"golden multiplicities",
         [] {
             auto r = decompose(curve_normal_form({3, {q(1), q(4)}}));
             std::vector<long> got;
             for (const char* l : {"rho1", "rho2", "rho3", "rho4", "chi_1", "chi_2"})
                 got.push_back(r.u_multiplicities[r.table.irrep_index(l)]);
             return got == std::vector<long>{0, 0, 0, 2, 2, 0};
         }},
        {"dimensions and linear system agree",
         [] {
             for (const auto& c : small_curves()) {
                 auto r = decompose(c);
                 long total = 0;
                 for (std::size_t i = 0; i < r.table.irreps.size(); ++i)
                     total += r.multiplicities[i] * r.table.irreps[i].dim;
                 if (total != 2 * c.genus() + 1 || !r.closed_forms.systems.front().agrees) return false;
             }
             return true;
         }},
    };
}

std::vector<Check> serialize_checks() {
    return {
        {"reports round-trip",
         [] {
             auto c = curve_normal_form({3, {q(1), q(4)}});
             auto record = make_decomposition_record(c, decompose(c));
             auto j = emit_report("decompose", record);
             return parse_report<DecompositionRecord>("decompose", Json::parse(j.dump())) == record;
         }},
        {"curve spec parsing",
         [] {
             auto spec = parse_curve_spec(R"({"normal_form": {"k": 3, "params": [1, 4]}})");
             return build_curve(spec).coefficients() == curve_normal_form({3, {q(1), q(4)}}).coefficients();
         }},
    };
}

}  // namespace

Json run_selftest() {
    Json out;
    Json suites = Json::array();
    suites.push_back(suite("exact-field", field_checks()));
    suites.push_back(suite("curve", curve_checks()));
    suites.push_back(suite("reduction", reduction_checks()));
    suites.push_back(suite("groups", group_checks()));
    suites.push_back(suite("automorphisms", automorphism_checks()));
    suites.push_back(suite("central-rep", central_rep_checks()));
    suites.push_back(suite("decomposition", decomposition_checks()));
    suites.push_back(suite("serialize", serialize_checks()));
    long passed = 0, failed = 0;
    for (const auto& s : suites) {
        passed += s["passed"].get<long>();
        failed += s["failed"].get<long>();
    }
    out["suites"] = std::move(suites);
    out["passed"] = passed;
    out["failed"] = failed;
    return out;
}

}  // namespace knc::cli
