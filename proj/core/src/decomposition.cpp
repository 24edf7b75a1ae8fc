#include "knc/decomposition.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "knc/errors.hpp"

namespace knc {

const char* to_string(FormulaStatus s) {
    switch (s) {
        case FormulaStatus::Match: return "match";
        case FormulaStatus::Mismatch: return "mismatch";
        case FormulaStatus::NotApplicable: return "not_applicable";
    }
    return "?";
}

namespace {

long sign_pow(long e) { return e % 2 == 0 ? 1 : -1; }

Rational ratio(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::optional<long> as_long(const CycloElem& v) {
    if (!v.is_rational()) return std::nullopt;
    Rational q = v.rational_value();
    if (!is_integer(q) || !q.get_num().fits_slong_p()) return std::nullopt;
    return q.get_num().get_si();
}

FormulaCheck make_check(std::string formula, std::string variant, std::string target,
                        std::optional<CycloElem> value, std::optional<long> computed,
                        std::string note = {}) {
    FormulaCheck c{std::move(formula), std::move(variant), std::move(target), std::move(value),
                   computed, FormulaStatus::NotApplicable, std::move(note)};
    if (c.value && c.computed) {
        auto v = as_long(*c.value);
        c.status = v && *v == *c.computed ? FormulaStatus::Match : FormulaStatus::Mismatch;
    }
    return c;
}

std::optional<long> multiplicity_of(const CharacterTable& table, const std::vector<long>& mult,
                                    const std::string& label) {
    for (std::size_t i = 0; i < table.irreps.size(); ++i)
        if (table.irreps[i].label == label) return mult[i];
    return std::nullopt;
}

std::string match_one_dim(const CharacterTable& table, const std::vector<CycloElem>& chi) {
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        if (table.irreps[i].dim != 1) continue;
        bool same = true;
        for (std::size_t c = 0; c < chi.size() && same; ++c) same = table.values(i, c) == chi[c];
        if (same) return table.irreps[i].label;
    }
    return {};
}

std::string join_labels(const CharacterTable& table, const std::vector<long>& mult) {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < mult.size(); ++i)
        for (long r = 0; r < mult[i]; ++r) {
            os << (first ? "" : " + ") << table.irreps[i].label;
            first = false;
        }
    return os.str();
}

// sum_{i=g+3}^{2g} c^{e(i)} P_{i-g-3,-i} for the given exponent function.
template <typename Coef>
CycloElem p_sum(const Reducer& reducer, Coef coef) {
    long g = reducer.genus();
    CycloElem sum(0);
    for (long i = g + 3; i <= 2 * g; ++i)
        sum += coef(i) * reducer.p_row(i - g - 3)[static_cast<std::size_t>(i - 1)];
    return sum;
}

void add_system(ClosedFormReport& out, const CharacterTable& table, std::string name,
                std::vector<CycloElem> rhs, const std::vector<long>& expected) {
    LinearSystemPath path{std::move(name), std::move(rhs), std::nullopt, false};
    path.solution = solve_class_system(table, path.rhs);
    if (path.solution) {
        path.agrees = true;
        for (std::size_t i = 0; i < expected.size(); ++i)
            path.agrees = path.agrees && (*path.solution)[i] == CycloElem(expected[i]);
    }
    out.systems.push_back(std::move(path));
}

void dihedral_even_clause(ClosedFormReport& out, const DecompositionReport& report, long n, long k) {
    const auto& t = report.table;
    const auto& m = report.u_multiplicities;
    out.clause = "dihedral, twist half-order even";
    for (const char* label : {"rho1", "rho2"})
        out.checks.push_back(make_check("absent", "", label, CycloElem(0), multiplicity_of(t, m, label)));
    Rational u = ratio((1 - sign_pow(k)) * n, 2 * k);
    for (const char* label : {"rho3", "rho4"})
        out.checks.push_back(make_check(std::string("U_") + label[3], "", label, CycloElem(u),
                                        multiplicity_of(t, m, label)));
    for (long h = 1; h < k; ++h) {
        std::string label = "chi_" + std::to_string(h);
        out.checks.push_back(make_check("V_" + std::to_string(h), "", label,
                                        CycloElem(ratio((1 - sign_pow(h)) * n, k)),
                                        multiplicity_of(t, m, label)));
    }
}

void dihedral_odd_clause(ClosedFormReport& out, const DecompositionReport& report, long n, long k,
                         const Reducer& reducer, const CycloElem& c,
                         const std::function<std::optional<CycloElem>(long)>& half_power) {
    const auto& t = report.table;
    const auto& m = report.u_multiplicities;
    const CycloElem& xi = report.profile.y_map.twist_root();
    out.clause = "dihedral, twist half-order odd";
    for (const char* label : {"rho1", "rho2"})
        out.checks.push_back(make_check("absent", "", label, CycloElem(0), multiplicity_of(t, m, label)));

    CycloElem base(ratio((1 - sign_pow(k)) * n, 2 * k));
    Rational parity = ratio(1 - sign_pow(n), 4);
    for (long i : {3L, 4L}) {
        std::string label = "rho" + std::to_string(i);
        auto computed = multiplicity_of(t, m, label);
        CycloElem lead = base + CycloElem(i == 4 ? parity : Rational(-parity));
        CycloElem half_sign(ratio(sign_pow(i), 2));
        out.checks.push_back(make_check("Upsilon_" + std::to_string(i), "full exponents", label,
                                        lead + half_sign * *out.sum_full, computed));
        out.checks.push_back(make_check(
            "Upsilon_" + std::to_string(i), "halved exponents", label,
            out.sum_half ? std::optional<CycloElem>(lead + half_sign * *out.sum_half) : std::nullopt,
            computed, out.sum_half ? "" : "square root of c not representable"));
    }

    // Sign-ambiguous variant: n/(2k) + eps/4 S + nu/4 sum xi^{2n+3-2i} c^{e(i)} P.
    CycloElem twisted_full =
        p_sum(reducer, [&](long i) { return xi.pow(2 * (2 * n + 3 - 2 * i)) * c.pow(n + 3 - 2 * i); });
    std::optional<CycloElem> twisted_half;
    if (out.sum_half)
        twisted_half = p_sum(reducer, [&](long i) { return xi.pow(2 * n + 3 - 2 * i) * *half_power(n + 3 - 2 * i); });
    CycloElem lead(ratio(n, 2 * k));
    for (long i : {3L, 4L}) {
        std::string label = "rho" + std::to_string(i);
        auto computed = multiplicity_of(t, m, label);
        for (long eps : {1L, -1L})
            for (long nu : {1L, -1L}) {
                std::string signs = "eps=" + std::to_string(eps) + " nu=" + std::to_string(nu);
                CycloElem q_eps(ratio(eps, 4)), q_nu(ratio(nu, 4));
                out.checks.push_back(make_check("Upsilon_" + std::to_string(i) + " (sign form)",
                                                "full exponents, " + signs, label,
                                                lead + q_eps * *out.sum_full + q_nu * twisted_full, computed));
                std::optional<CycloElem> v;
                if (out.sum_half && twisted_half) v = lead + q_eps * *out.sum_half + q_nu * *twisted_half;
                out.checks.push_back(make_check("Upsilon_" + std::to_string(i) + " (sign form)",
                                                "halved exponents, " + signs, label, v, computed,
                                                v ? "" : "square root of c not representable"));
            }
    }
    for (long j = 1; j < k; ++j) {
        std::string label = "chi_" + std::to_string(j);
        out.checks.push_back(make_check("V_" + std::to_string(j), "", label,
                                        CycloElem(ratio((1 - sign_pow(j)) * n, k)),
                                        multiplicity_of(t, m, label)));
    }
}

// Restriction to <x, y^2>, a dihedral group of order 2n, when k = n is odd.
void restricted_dihedral_clause(ClosedFormReport& out, const DecompositionReport& report, long n) {
    FiniteGroup sub = build_group(GroupFamily::Dihedral, n);
    CharacterTable sub_table = character_table(sub);
    const FiniteGroup& g = report.profile.group;
    std::vector<CycloElem> chi;
    for (const auto& cls : sub_table.classes) {
        GroupElement image = g.multiply(g.power(g.x(), cls.representative.flip),
                                        g.power(g.y(), 2 * cls.representative.power));
        chi.push_back(u_block_trace(report.rep.matrix_of(image)));
    }
    auto mult = integer_multiplicities(sub_table, chi);
    auto m_of = [&](const std::string& label) { return multiplicity_of(sub_table, mult, label); };

    struct Variant {
        const char* name;
        std::optional<CycloElem> sum;
    };
    for (const Variant& v : {Variant{"full exponents", out.sum_full}, Variant{"halved exponents", out.sum_half}}) {
        std::optional<CycloElem> xi1, xi2;
        if (v.sum) {
            xi1 = CycloElem(ratio(1, 2)) - CycloElem(ratio(1, 2)) * *v.sum;
            xi2 = CycloElem(ratio(3, 2)) + CycloElem(ratio(1, 2)) * *v.sum;
        }
        std::string note = v.sum ? "restricted to <x, y^2> = " + sub.name() : "square root of c not representable";
        out.checks.push_back(make_check("Xi_1", std::string(v.name) + ", Xi_1 -> rho1", "rho1", xi1, m_of("rho1"), note));
        out.checks.push_back(make_check("Xi_2", std::string(v.name) + ", Xi_2 -> rho2", "rho2", xi2, m_of("rho2"), note));
        out.checks.push_back(make_check("Xi_1", std::string(v.name) + ", Xi_1 -> rho2", "rho2", xi1, m_of("rho2"), note));
        out.checks.push_back(make_check("Xi_2", std::string(v.name) + ", Xi_2 -> rho1", "rho1", xi2, m_of("rho1"), note));
    }
    for (const auto& irrep : sub_table.irreps)
        if (irrep.dim == 2)
            out.checks.push_back(make_check("V_j once", "restricted to " + sub.name(), irrep.label,
                                            CycloElem(1), m_of(irrep.label)));
}

}  // namespace

std::optional<std::vector<CycloElem>> solve_class_system(const CharacterTable& table,
                                                         const std::vector<CycloElem>& rhs) {
    std::size_t size = table.irreps.size();
    if (rhs.size() != table.classes.size() || size != rhs.size())
        throw InvalidArgument("class system shape mismatch");
    Matrix b(size, 1);
    for (std::size_t i = 0; i < size; ++i) b(i, 0) = rhs[i];
    try {
        Matrix x = table.values.transpose().solve(b);
        std::vector<CycloElem> out;
        for (std::size_t i = 0; i < size; ++i) out.push_back(x(i, 0));
        return out;
    } catch (const DivisionByZero&) {
        return std::nullopt;
    }
}

std::vector<long> regular_multiplicities(const CharacterTable& table) {
    const FiniteGroup& g = table.group;
    std::vector<CycloElem> chi;
    for (const auto& cls : table.classes) {
        long fixed = 0;
        for (const auto& h : g.elements()) fixed += g.multiply(cls.representative, h) == h ? 1 : 0;
        chi.push_back(CycloElem(fixed));
    }
    return integer_multiplicities(table, chi);
}

ClosedFormReport closed_form_multiplicities(const Reducer& reducer, const DecompositionReport& report) {
    ClosedFormReport out;
    out.clause = "none";
    const auto& profile = report.profile;
    const auto& table = report.table;
    long n = reducer.genus();
    long k = profile.twist_half_order;

    add_system(out, table, "class system, computed traces", report.u_character, report.u_multiplicities);

    const auto& traces = report.traces;
    if (!traces.flip || !traces.flip->flip_root()) return out;
    const CycloElem& c = *traces.flip->flip_root();
    out.sum_full = p_sum(reducer, [&](long i) { return c.pow(n + 3 - 2 * i); });
    std::optional<CycloElem> root_c = try_sqrt(c);
    // c^{(n+3-2i)/2}: an integer power for odd n, a power of a square root of c otherwise.
    auto half_power = [&](long e) -> std::optional<CycloElem> {
        if (e % 2 == 0) return c.pow(e / 2);
        if (root_c) return root_c->pow(e);
        return std::nullopt;
    };
    if (n % 2 == 1 || root_c) out.sum_half = p_sum(reducer, [&](long i) { return *half_power(n + 3 - 2 * i); });

    // Closed-form traces where stated: twist powers and the sign-1 flip; computed elsewhere.
    std::vector<CycloElem> rhs;
    const FiniteGroup& g = profile.group;
    std::size_t flip_class = table.class_of(g.identity());
    bool flip_located = false;
    for (std::size_t e = 0; e < g.elements().size(); ++e)
        if (profile.element_maps[e] == *traces.flip) {
            flip_class = table.class_of(g.elements()[e]);
            flip_located = true;
        }
    for (std::size_t ci = 0; ci < table.classes.size(); ++ci) {
        const auto& rep = table.classes[ci].representative;
        if (rep.flip == 0) {
            CycloElem power = profile.y_map.twist_root().pow(rep.power);
            CycloElem sum(0);
            for (long i = 1; i <= 2 * n; ++i) sum += power.pow(3 - 2 * i);
            rhs.push_back(sum);
        } else if (flip_located && ci == flip_class) {
            rhs.push_back(*traces.flip_closed_form);
        } else {
            rhs.push_back(report.u_character[ci]);
        }
    }
    add_system(out, table, "closed-form traces", rhs, report.u_multiplicities);

    if (g.family() != GroupFamily::Dihedral || n % k != 0) return out;
    if (k % 2 == 0)
        dihedral_even_clause(out, report, n, k);
    else
        dihedral_odd_clause(out, report, n, k, reducer, c, half_power);
    if (k == n && n % 2 == 1) {
        out.clause += "; restricted dihedral, k = n odd";
        restricted_dihedral_clause(out, report, n);
    }
    return out;
}

WitnessReport two_dim_witnesses(const DecompositionReport& report) {
    WitnessReport out;
    const auto& table = report.table;
    const auto& rep = report.rep;
    long g = report.profile.genus;
    std::vector<const Matrix*> gens{&rep.y_matrix};
    if (rep.x_matrix) gens.push_back(&*rep.x_matrix);

    auto span_invariant = [&](const std::vector<long>& idx) {
        for (const Matrix* m : gens)
            for (long j : idx)
                for (std::size_t r = 0; r < m->rows(); ++r)
                    if (std::find(idx.begin(), idx.end(), static_cast<long>(r)) == idx.end() &&
                        !(*m)(r, static_cast<std::size_t>(j)).is_zero())
                        return false;
        return true;
    };
    auto restricted_character = [&](const std::vector<long>& idx) {
        std::vector<CycloElem> chi;
        for (const auto& cls : table.classes) {
            const Matrix& m = rep.matrix_of(cls.representative);
            CycloElem s(0);
            for (long j : idx) s += m(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
            chi.push_back(s);
        }
        return chi;
    };

    std::set<long> covered;
    out.lines.push_back({0, span_invariant({0}) ? match_one_dim(table, restricted_character({0})) : ""});
    if (g % 2 == 1 && (g + 3) / 2 <= 2 * g) {
        long mid = (g + 3) / 2;
        std::string label = span_invariant({mid}) ? match_one_dim(table, restricted_character({mid})) : "";
        out.lines.push_back({mid, label});
        if (!label.empty()) covered.insert(mid);
    }

    for (long i = 1; i < g + 3 - i && g + 3 - i <= 2 * g; ++i) {
        long j = g + 3 - i;
        PairWitness w{i, j, span_invariant({i, j}), "", false, std::nullopt};
        if (w.invariant) {
            auto chi = restricted_character({i, j});
            for (std::size_t r = 0; r < table.irreps.size() && !w.irreducible; ++r) {
                if (table.irreps[r].dim != 2) continue;
                bool same = true;
                for (std::size_t c = 0; c < chi.size() && same; ++c) same = table.values(r, c) == chi[c];
                if (same) {
                    w.summand = table.irreps[r].label;
                    w.irreducible = true;
                }
            }
            if (!w.irreducible) w.summand = join_labels(table, integer_multiplicities(table, chi));
            if (rep.x_matrix && (*rep.x_matrix * *rep.x_matrix).is_identity()) {
                const Matrix& x = *rep.x_matrix;
                auto at = [&](long r, long col) { return x(static_cast<std::size_t>(r), static_cast<std::size_t>(col)); };
                const CycloElem& a = at(j, i);
                w.dihedral_shape = at(i, i).is_zero() && at(j, j).is_zero() && !a.is_zero() && (at(i, j) * a).is_one();
            }
            covered.insert(i);
            covered.insert(j);
            if (w.irreducible) ++out.witnessed_two_dim;
        }
        out.pairs.push_back(std::move(w));
    }
    for (long i = 1; i <= 2 * g; ++i)
        if (!covered.count(i)) out.unpaired.push_back(i);
    for (std::size_t r = 0; r < table.irreps.size(); ++r)
        if (table.irreps[r].dim == 2) out.computed_two_dim += report.u_multiplicities[r];
    out.complete = out.witnessed_two_dim == out.computed_two_dim && out.unpaired.empty();
    return out;
}

DecompositionReport decompose(const Reducer& reducer) {
    AutProfile profile = classify_group(reducer.curve());
    CharacterTable table = character_table(profile.group);
    CentralRep rep = rep_from_profile(reducer, profile);
    DecompositionReport report{profile, table, rep, {}, {}, {}, {}, {}, {}, {}};

    std::vector<CycloElem> omega0;
    for (std::size_t c = 0; c < rep.classes.size(); ++c) {
        const Matrix& m = rep.matrix_of(table.classes[c].representative);
        report.u_character.push_back(u_block_trace(m));
        omega0.push_back(m(0, 0));
    }
    report.multiplicities = integer_multiplicities(table, rep.character);
    report.u_multiplicities = integer_multiplicities(table, report.u_character);
    report.omega0_irrep = match_one_dim(table, omega0);
    if (report.omega0_irrep.empty()) throw ConsistencyError("omega_0 does not span a 1-dimensional summand");

    long total = 0, u_total = 0;
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        total += report.multiplicities[i] * table.irreps[i].dim;
        u_total += report.u_multiplicities[i] * table.irreps[i].dim;
    }
    long g = reducer.genus();
    if (total != 2 * g + 1 || u_total != 2 * g)
        throw ConsistencyError("multiplicities do not account for every basis form");

    report.traces = trace_closed_form(reducer, profile);
    report.closed_forms = closed_form_multiplicities(reducer, report);
    report.witnesses = two_dim_witnesses(report);
    return report;
}

DecompositionReport decompose(const HyperellipticCurve& curve) { return decompose(Reducer(curve)); }

}  // namespace knc
