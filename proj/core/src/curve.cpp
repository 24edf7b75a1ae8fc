#include "knc/curve.hpp"

#include <unordered_set>

#include "knc/errors.hpp"

namespace knc {

const CycloElem& HyperellipticCurve::coeff(long j) const {
    if (j < 1 || j > degree()) throw InvalidArgument("coefficient index out of range");
    return coeffs_[j - 1];
}

namespace {

void validate_roots(const std::vector<CycloElem>& roots, unsigned order, CurveDefect dup_kind) {
    if (roots.empty()) throw InvalidCurve(CurveDefect::Empty, "curve needs at least two roots");
    if (roots.size() % 2 != 0)
        throw InvalidCurve(CurveDefect::OddRootCount,
                           "root count " + std::to_string(roots.size()) + " is odd");
    std::unordered_set<std::string> seen;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (roots[i].is_zero())
            throw InvalidCurve(CurveDefect::ZeroRoot, "root " + std::to_string(i + 1) + " is zero");
        if (!seen.insert(roots[i].key(order)).second)
            throw InvalidCurve(dup_kind, "root " + std::to_string(i + 1) + " is repeated (" +
                                             roots[i].debug_string() + ")");
    }
}

}  // namespace

HyperellipticCurve curve_from_roots(unsigned order, std::vector<CycloElem> roots) {
    if (order == 0) throw InvalidArgument("field order must be positive");
    long m = order;
    for (const auto& r : roots) m = lcm_l(m, r.order());
    unsigned field = static_cast<unsigned>(m);
    validate_roots(roots, field, CurveDefect::DuplicateRoot);
    for (auto& r : roots) r = r.promote(field);

    LaurentPoly p = LaurentPoly::monomial(1, CycloElem(1).promote(field));
    for (const auto& r : roots) p *= LaurentPoly::monomial(1) - LaurentPoly::monomial(0, r);

    HyperellipticCurve curve;
    curve.n_ = static_cast<long>(roots.size() / 2);
    curve.field_order_ = field;
    curve.roots_ = std::move(roots);
    for (long j = 1; j <= curve.degree(); ++j) curve.coeffs_.push_back(p.coeff(j).promote(field));
    if (p.coeff(0) != CycloElem(0) || !curve.coeffs_.back().is_one())
        throw ConsistencyError("root expansion is not monic with zero constant term");
    CycloElem product(1);
    for (const auto& r : curve.roots_) product *= r;
    if (product != curve.coeffs_.front())
        throw ConsistencyError("a_1 differs from the product of the roots");
    curve.p_ = std::move(p);
    curve.dp_ = curve.p_.derivative();
    return curve;
}

LaurentPoly normal_form_polynomial(const NormalFormSpec& spec) {
    LaurentPoly p = LaurentPoly::monomial(1);
    for (const auto& c : spec.params)
        p *= LaurentPoly::monomial(spec.rotation) - LaurentPoly::monomial(0, c.pow(spec.rotation));
    return p;
}

HyperellipticCurve curve_normal_form(const NormalFormSpec& spec) {
    if (spec.rotation < 1) throw InvalidArgument("normal form needs k >= 1");
    if (spec.params.empty()) throw InvalidCurve(CurveDefect::Empty, "normal form has no parameters");
    long roots_count = spec.rotation * static_cast<long>(spec.params.size());
    if (roots_count % 2 != 0)
        throw InvalidCurve(CurveDefect::OddRootCount,
                           "k * #params = " + std::to_string(roots_count) + " is odd");
    long n = roots_count / 2;
    long m = 4 * n;
    for (const auto& c : spec.params) m = lcm_l(m, c.order());
    unsigned field = static_cast<unsigned>(m);

    std::vector<CycloElem> roots;
    for (const auto& c : spec.params) {
        if (c.is_zero()) throw InvalidCurve(CurveDefect::ZeroRoot, "normal form parameter is zero");
        for (long j = 1; j <= spec.rotation; ++j)
            roots.push_back((c * CycloElem::root_of_unity(static_cast<unsigned>(spec.rotation), j))
                                .promote(field));
    }
    validate_roots(roots, field, CurveDefect::RootCollision);
    HyperellipticCurve curve = curve_from_roots(field, std::move(roots));
    LaurentPoly closed = normal_form_polynomial(spec);
    for (long j = 0; j <= curve.degree(); ++j) {
        CycloElem expected = j == 0 ? CycloElem(0) : curve.coeff(j);
        if (closed.coeff(j) != expected)
            throw ConsistencyError("normal form expansion disagrees with root product at t^" +
                                   std::to_string(j));
    }
    curve.normal_form_ = spec;
    return curve;
}

CycloElem eval_p(const HyperellipticCurve& curve, const CycloElem& x) {
    // Horner over a_{2n+1}, ..., a_1, then one more factor of x.
    CycloElem acc(0);
    for (long j = curve.degree(); j >= 1; --j) acc = acc * x + curve.coeff(j);
    return acc * x;
}

bool coefficient_symmetry(const HyperellipticCurve& curve, const CycloElem& c, int sign) {
    long n = curve.genus();
    for (long j = 1; j <= curve.degree(); ++j) {
        CycloElem rhs = c.pow(2 * n - 2 * j + 2) * curve.coeff(2 * n + 2 - j) * CycloElem(sign);
        if (curve.coeff(j) != rhs) return false;
    }
    return true;
}

}  // namespace knc
