#include "knc/groups.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "knc/errors.hpp"

namespace knc {

const char* to_string(GroupFamily f) {
    switch (f) {
        case GroupFamily::Cyclic: return "cyclic";
        case GroupFamily::Dihedral: return "dihedral";
        case GroupFamily::Dicyclic: return "dicyclic";
        case GroupFamily::U: return "u";
    }
    return "unknown";
}

GroupFamily parse_group_family(const std::string& name) {
    std::string s;
    for (char c : name) s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (s == "cyclic" || s == "z") return GroupFamily::Cyclic;
    if (s == "dihedral" || s == "d") return GroupFamily::Dihedral;
    if (s == "dicyclic" || s == "dic") return GroupFamily::Dicyclic;
    if (s == "u") return GroupFamily::U;
    throw InvalidArgument("unknown group family '" + name + "'");
}

std::string to_string(const GroupElement& g) {
    if (g.flip == 0 && g.power == 0) return "1";
    std::string s = g.flip ? "x" : "";
    if (g.power == 1) s += "y";
    if (g.power > 1) s += "y^" + std::to_string(g.power);
    return s;
}

std::string FiniteGroup::name() const {
    switch (family_) {
        case GroupFamily::Cyclic: return "Cyclic(" + std::to_string(param_) + ")";
        case GroupFamily::Dihedral: return "Dihedral(" + std::to_string(param_) + ")";
        case GroupFamily::Dicyclic: return "Dicyclic(" + std::to_string(param_) + ")";
        case GroupFamily::U: return "U(" + std::to_string(param_) + ")";
    }
    return "?";
}

GroupElement FiniteGroup::x() const {
    if (!has_flip()) throw InvalidArgument("cyclic groups have no generator x");
    return {1, 0};
}

GroupElement FiniteGroup::normalize(GroupElement g) const {
    g.power = mod_l(g.power, rotation_);
    return g;
}

GroupElement FiniteGroup::multiply(const GroupElement& a, const GroupElement& b) const {
    if (b.flip == 0) return normalize({a.flip, a.power + b.power});
    long power = a.power * twist_ + b.power;
    if (a.flip == 1) return normalize({0, power + square_});
    return normalize({1, power});
}

GroupElement FiniteGroup::inverse(const GroupElement& a) const {
    for (const auto& b : elements_)
        if (multiply(a, b) == identity()) return b;
    throw ConsistencyError("element without inverse in " + name());
}

GroupElement FiniteGroup::power(const GroupElement& a, long e) const {
    GroupElement base = e < 0 ? inverse(a) : a;
    GroupElement result = identity();
    for (long i = 0; i < std::labs(e); ++i) result = multiply(result, base);
    return result;
}

long FiniteGroup::element_order(const GroupElement& a) const {
    GroupElement g = a;
    long k = 1;
    while (g != identity()) {
        g = multiply(g, a);
        ++k;
    }
    return k;
}

std::size_t FiniteGroup::index_of(const GroupElement& g) const {
    auto h = normalize(g);
    return static_cast<std::size_t>(h.flip * rotation_ + h.power);
}

FiniteGroup build_group(GroupFamily family, long param) {
    if (param < 1) throw InvalidArgument("group parameter must be at least 1");
    FiniteGroup g;
    if (family == GroupFamily::U && param % 2 != 0) {
        g.alias_ = "U(" + std::to_string(param) + ")";
        family = GroupFamily::Dihedral;
    }
    g.family_ = family;
    g.param_ = param;
    switch (family) {
        case GroupFamily::Cyclic:
            g.rotation_ = param;
            break;
        case GroupFamily::Dihedral:
            g.rotation_ = param;
            g.twist_ = -1;
            break;
        case GroupFamily::Dicyclic:
            g.rotation_ = 2 * param;
            g.twist_ = -1;
            g.square_ = param;
            break;
        case GroupFamily::U:
            g.rotation_ = 2 * param;
            g.twist_ = param - 1;
            break;
    }
    for (int s = 0; s <= (g.has_flip() ? 1 : 0); ++s)
        for (long j = 0; j < g.rotation_; ++j) g.elements_.push_back({s, j});
    if (!presentation_holds(g)) throw ConsistencyError("presentation fails for " + g.name());
    return g;
}

namespace {

using Word = std::vector<std::pair<char, long>>;

std::vector<Word> relations(const FiniteGroup& g) {
    long p = g.param();
    switch (g.family()) {
        case GroupFamily::Cyclic: return {{{'y', p}}};
        case GroupFamily::Dihedral: return {{{'x', 2}}, {{'y', p}}, {{'x', 1}, {'y', 1}, {'x', 1}, {'y', 1}}};
        case GroupFamily::Dicyclic:
            return {{{'y', 2 * p}}, {{'x', 2}, {'y', -p}}, {{'y', 1}, {'x', 1}, {'y', 1}, {'x', -1}}};
        case GroupFamily::U:
            return {{{'x', 2}}, {{'y', 2 * p}}, {{'x', 1}, {'y', 1}, {'x', 1}, {'y', p + 1}}};
    }
    return {};
}

}  // namespace

bool presentation_holds(const FiniteGroup& g) {
    for (const auto& word : relations(g)) {
        GroupElement acc = g.identity();
        for (auto [gen, e] : word) acc = g.multiply(acc, g.power(gen == 'x' ? g.x() : g.y(), e));
        if (acc != g.identity()) return false;
    }
    long expected = g.param() * (g.family() == GroupFamily::Cyclic   ? 1
                                 : g.family() == GroupFamily::Dihedral ? 2
                                                                       : 4);
    return g.order() == expected;
}

std::vector<ConjClass> conjugacy_classes(const FiniteGroup& g) {
    std::vector<bool> seen(g.order(), false);
    std::vector<ConjClass> out;
    for (const auto& a : g.elements()) {
        if (seen[g.index_of(a)]) continue;
        std::set<GroupElement> orbit;
        for (const auto& h : g.elements()) orbit.insert(g.multiply(g.multiply(h, a), g.inverse(h)));
        ConjClass cls;
        cls.members.assign(orbit.begin(), orbit.end());
        cls.representative = cls.members.front();
        for (const auto& m : cls.members) seen[g.index_of(m)] = true;
        out.push_back(std::move(cls));
    }
    std::stable_sort(out.begin(), out.end(), [&](const ConjClass& a, const ConjClass& b) {
        bool ai = a.representative == g.identity(), bi = b.representative == g.identity();
        if (ai != bi) return ai;
        if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
        return a.members.front() < b.members.front();
    });
    return out;
}

Matrix Irrep::image(const GroupElement& g) const {
    Matrix m = y_image.pow(g.power);
    return g.flip ? x_image * m : m;
}

CycloElem Irrep::character(const GroupElement& g) const { return image(g).trace(); }

bool irrep_satisfies_presentation(const FiniteGroup& g, const Irrep& rho) {
    for (const auto& word : relations(g)) {
        Matrix acc = Matrix::identity(rho.dim);
        for (auto [gen, e] : word) acc = acc * (gen == 'x' ? rho.x_image : rho.y_image).pow(e);
        if (!acc.is_identity()) return false;
    }
    return true;
}

std::size_t intertwiner_dimension(const FiniteGroup& g, const Irrep& a, const Irrep& b) {
    std::size_t da = a.dim, db = b.dim, unknowns = da * db;
    std::vector<std::pair<const Matrix*, const Matrix*>> gens{{&a.y_image, &b.y_image}};
    if (g.has_flip()) gens.push_back({&a.x_image, &b.x_image});
    Matrix system(gens.size() * unknowns, unknowns);
    std::size_t row = 0;
    for (auto [ma, mb] : gens) {
        // (T A - B T)_{ij} = sum_k T_ik A_kj - sum_k B_ik T_kj, with T_ik at index i*da + k
        for (std::size_t i = 0; i < db; ++i)
            for (std::size_t j = 0; j < da; ++j, ++row) {
                for (std::size_t k = 0; k < da; ++k) system(row, i * da + k) += (*ma)(k, j);
                for (std::size_t k = 0; k < db; ++k) system(row, k * da + j) -= (*mb)(i, k);
            }
    }
    return system.nullspace().size();
}

namespace {

Matrix scalar(const CycloElem& v) {
    Matrix m(1, 1);
    m(0, 0) = v;
    return m;
}

Matrix diag2(const CycloElem& a, const CycloElem& b) {
    Matrix m(2, 2);
    m(0, 0) = a;
    m(1, 1) = b;
    return m;
}

Matrix anti2(const CycloElem& top, const CycloElem& bottom) {
    Matrix m(2, 2);
    m(0, 1) = top;
    m(1, 0) = bottom;
    return m;
}

Irrep one_dim(std::string label, const CycloElem& x, const CycloElem& y,
              std::vector<std::string> aliases = {}) {
    return {std::move(label), std::move(aliases), 1, scalar(x), scalar(y)};
}

std::vector<Irrep> cyclic_irreps(long m) {
    std::vector<Irrep> out;
    for (long r = 0; r < m; ++r) {
        Irrep rho{"chi_" + std::to_string(r), {}, 1, Matrix(), scalar(root_of_unity(m, r))};
        out.push_back(std::move(rho));
    }
    return out;
}

std::vector<Irrep> dihedral_irreps(long m) {
    std::vector<Irrep> out;
    out.push_back(one_dim("rho1", 1, 1));
    out.push_back(one_dim("rho2", -1, 1));
    if (m % 2 == 0) {
        out.push_back(one_dim("rho3", 1, -1));
        out.push_back(one_dim("rho4", -1, -1));
    }
    for (long h = 1; 2 * h < m; ++h)
        out.push_back({"chi_" + std::to_string(h), {}, 2, anti2(1, 1),
                       diag2(root_of_unity(m, h), root_of_unity(m, -h))});
    return out;
}

std::vector<Irrep> dicyclic_irreps(long n) {
    std::vector<Irrep> out;
    bool even = n % 2 == 0;
    CycloElem i4 = root_of_unity(4, 1);
    out.push_back(one_dim("rho1", 1, 1, {"omega_0"}));
    out.push_back(one_dim("rho2", -1, 1, even ? std::vector<std::string>{"omega_1"}
                                              : std::vector<std::string>{}));
    if (even) {
        out.push_back(one_dim("rho3", 1, -1, {"omega_2"}));
        out.push_back(one_dim("rho4", -1, -1, {"omega_3"}));
    } else {
        out.push_back(one_dim("rho3", i4, -1, {"omega_2"}));
        out.push_back(one_dim("rho4", -i4, -1, {"omega_3"}));
    }
    for (long k = 1; k < n; ++k) {
        std::string alias = (k % 2 == 0 ? "sigma_" : (even ? "tau_" : "gamma_")) + std::to_string(k);
        out.push_back({"psi_" + std::to_string(k), {alias}, 2, anti2(k % 2 ? -1 : 1, 1),
                       diag2(root_of_unity(2 * n, k), root_of_unity(2 * n, -k))});
    }
    return out;
}

std::vector<Irrep> u_irreps(const FiniteGroup& g) {
    long n = g.param();
    CycloElem i4 = root_of_unity(4, 1);
    std::vector<Irrep> out;
    out.push_back(one_dim("rho1", 1, 1));
    out.push_back(one_dim("rho2", 1, -1));
    out.push_back(one_dim("rho3", -1, -1));
    out.push_back(one_dim("rho4", -1, 1));
    if (n % 4 == 2) {
        out.push_back(one_dim("rho5", 1, i4));
        out.push_back(one_dim("rho6", 1, -i4));
        out.push_back(one_dim("rho7", -1, -i4));
        out.push_back(one_dim("rho8", -1, i4));
    }
    std::vector<Irrep> two_dim;
    for (long h = 1; h < 2 * n; ++h) {
        Irrep cand = u_candidate(n, h);
        if (intertwiner_dimension(g, cand, cand) != 1) continue;
        bool fresh = true;
        for (const auto& kept : two_dim)
            if (intertwiner_dimension(g, cand, kept) != 0) {
                fresh = false;
                break;
            }
        if (fresh) two_dim.push_back(std::move(cand));
    }
    for (auto& r : two_dim) out.push_back(std::move(r));
    return out;
}

}  // namespace

Irrep u_candidate(long n, long h) {
    CycloElem sign = h % 2 ? CycloElem(-1) : CycloElem(1);
    return {"R_" + std::to_string(h), {}, 2, anti2(1, 1),
            diag2(root_of_unity(2 * n, h), sign * root_of_unity(2 * n, -h))};
}

std::vector<Irrep> irreps(const FiniteGroup& g) {
    std::vector<Irrep> out;
    switch (g.family()) {
        case GroupFamily::Cyclic: out = cyclic_irreps(g.param()); break;
        case GroupFamily::Dihedral: out = dihedral_irreps(g.param()); break;
        case GroupFamily::Dicyclic: out = dicyclic_irreps(g.param()); break;
        case GroupFamily::U: out = u_irreps(g); break;
    }
    long sum_sq = 0;
    for (const auto& r : out) {
        if (!irrep_satisfies_presentation(g, r))
            throw ConsistencyError(r.label + " violates the presentation of " + g.name());
        sum_sq += r.dim * r.dim;
    }
    if (sum_sq != g.order())
        throw ConsistencyError("irreducible dimensions of " + g.name() + " do not square-sum to |G|");
    return out;
}

namespace {

unsigned table_field_order(const FiniteGroup& g) {
    long p = g.param();
    switch (g.family()) {
        case GroupFamily::Cyclic:
        case GroupFamily::Dihedral: return static_cast<unsigned>(p);
        case GroupFamily::Dicyclic: return static_cast<unsigned>(lcm_l(2 * p, 4));
        case GroupFamily::U: return static_cast<unsigned>(2 * p);
    }
    return 1;
}

}  // namespace

CharacterTable character_table(const FiniteGroup& g) {
    CharacterTable t{g, conjugacy_classes(g), irreps(g), {}, {}, table_field_order(g)};
    if (t.irreps.size() != t.classes.size())
        throw ConsistencyError(g.name() + ": " + std::to_string(t.irreps.size()) + " irreps but " +
                               std::to_string(t.classes.size()) + " classes");
    t.values = Matrix(t.irreps.size(), t.classes.size());
    for (const auto& c : t.classes) t.class_sizes.push_back(static_cast<long>(c.members.size()));
    for (std::size_t i = 0; i < t.irreps.size(); ++i)
        for (std::size_t c = 0; c < t.classes.size(); ++c) {
            t.values(i, c) = t.irreps[i].character(t.classes[c].representative).promote(t.field_order);
            for (const auto& m : t.classes[c].members)
                if (t.irreps[i].character(m) != t.values(i, c))
                    throw ConsistencyError("character of " + t.irreps[i].label +
                                           " is not constant on a class");
        }
    return t;
}

Matrix CharacterTable::inverse() const {
    Matrix inv(classes.size(), irreps.size());
    CycloElem order_inv(Rational(1, group.order()));
    for (std::size_t c = 0; c < classes.size(); ++c)
        for (std::size_t i = 0; i < irreps.size(); ++i)
            inv(c, i) = values(i, c).conj() * CycloElem(class_sizes[c]) * order_inv;
    return inv;
}

bool CharacterTable::rows_orthonormal() const { return (values * inverse()).is_identity(); }

bool CharacterTable::columns_orthogonal() const { return (inverse() * values).is_identity(); }

std::size_t CharacterTable::class_of(const GroupElement& g) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (std::binary_search(classes[c].members.begin(), classes[c].members.end(), g)) return c;
    throw InvalidArgument("element " + to_string(g) + " not in any class");
}

std::size_t CharacterTable::irrep_index(const std::string& label) const {
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        if (irreps[i].label == label) return i;
        for (const auto& a : irreps[i].aliases)
            if (a == label) return i;
    }
    throw InvalidArgument("no irreducible representation labelled " + label);
}

std::vector<Rational> multiplicity_inner_product(const CharacterTable& table,
                                                 const std::vector<CycloElem>& chi) {
    if (chi.size() != table.classes.size())
        throw InvalidArgument("class function has the wrong number of entries");
    std::vector<Rational> out;
    Rational order_inv(1, table.group.order());
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        CycloElem acc(0);
        for (std::size_t c = 0; c < chi.size(); ++c)
            acc += chi[c] * table.values(i, c).conj() * CycloElem(table.class_sizes[c]);
        acc *= CycloElem(order_inv);
        if (!acc.is_rational()) {
            std::ostringstream os;
            os << "inner product with " << table.irreps[i].label << " is irrational (" << acc
               << "); class function:";
            for (std::size_t c = 0; c < chi.size(); ++c)
                os << " [" << to_string(table.classes[c].representative) << " size "
                   << table.class_sizes[c] << ": " << chi[c] << "]";
            throw NonIntegerMultiplicity(os.str());
        }
        out.push_back(acc.rational_value());
    }
    return out;
}

std::vector<long> integer_multiplicities(const CharacterTable& table,
                                         const std::vector<CycloElem>& chi) {
    auto m = multiplicity_inner_product(table, chi);
    std::vector<long> out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (!is_integer(m[i]) || sgn(m[i]) < 0) {
            std::ostringstream os;
            os << "multiplicity of " << table.irreps[i].label << " in " << table.group.name()
               << " is " << m[i].get_str() << "; class function:";
            for (std::size_t c = 0; c < chi.size(); ++c)
                os << " [" << to_string(table.classes[c].representative) << " size "
                   << table.class_sizes[c] << ": " << chi[c] << "]";
            throw NonIntegerMultiplicity(os.str());
        }
        out.push_back(m[i].get_num().get_si());
    }
    return out;
}

}  // namespace knc
