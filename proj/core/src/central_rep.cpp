#include "knc/central_rep.hpp"

#include "knc/errors.hpp"

namespace knc {

DifferentialForm apply_map(const AlgebraMap& map, const DifferentialForm& form) {
    int sigma = map.t_exponent();
    const CycloElem& lambda = map.t_factor();
    DifferentialForm out;
    for (const auto& [a, coeff] : form.dt_part.terms())
        out.dt_part.add_term(sigma * a + sigma - 1, coeff * lambda.pow(a + 1) * CycloElem(sigma));
    for (const auto& [a, coeff] : form.udt_part.terms())
        out.udt_part.add_term(sigma * a + sigma - 1 + map.u_shift(),
                              coeff * lambda.pow(a + 1) * map.u_factor() * CycloElem(sigma));
    return out;
}

Matrix action_matrix(const Reducer& reducer, const AlgebraMap& map) {
    long genus = reducer.genus();
    if (map.genus() != genus) throw InvalidArgument("map and curve have different genus");
    std::size_t size = static_cast<std::size_t>(2 * genus + 1);
    Matrix out(size, size);
    for (std::size_t j = 0; j < size; ++j) {
        DifferentialForm basis = j == 0 ? DifferentialForm::dt_monomial(-1)
                                        : DifferentialForm::udt_monomial(-static_cast<long>(j));
        auto image = reducer.reduce(apply_map(map, basis));
        for (std::size_t i = 0; i < size; ++i) out(i, j) = image.coords[i];
    }
    return out;
}

Matrix action_matrix(const HyperellipticCurve& curve, const AlgebraMap& map) {
    return action_matrix(Reducer(curve), map);
}

CycloElem u_block_trace(const Matrix& action) {
    CycloElem sum(0);
    for (std::size_t i = 1; i < action.rows(); ++i) sum += action(i, i);
    return sum;
}

const Matrix& CentralRep::matrix_of(const GroupElement& g) const {
    return element_matrices.at(profile.group.index_of(g));
}

bool matrix_relations_hold(const CentralRep& rep) {
    const FiniteGroup& g = rep.profile.group;
    const Matrix& y = rep.y_matrix;
    if (!y.pow(g.rotation_order()).is_identity()) return false;
    if (!rep.x_matrix) return !g.has_flip();
    const Matrix& x = *rep.x_matrix;
    GroupElement xx = g.multiply(g.x(), g.x());
    if (!(x * x == y.pow(xx.power))) return false;
    GroupElement yx = g.multiply(g.y(), g.x());
    return y * x == x * y.pow(yx.power);
}

bool homomorphism_holds(const CentralRep& rep) {
    const FiniteGroup& g = rep.profile.group;
    for (const auto& a : g.elements())
        for (const auto& b : g.elements())
            if (!(rep.matrix_of(a) * rep.matrix_of(b) == rep.matrix_of(g.multiply(a, b)))) return false;
    return true;
}

CentralRep rep_from_profile(const Reducer& reducer, const AutProfile& profile) {
    const FiniteGroup& g = profile.group;
    std::vector<Matrix> matrices;
    for (const auto& m : profile.element_maps) matrices.push_back(action_matrix(reducer, m));
    CentralRep rep{profile,
                   conjugacy_classes(g),
                   action_matrix(reducer, profile.y_map),
                   profile.x_map ? std::optional<Matrix>(action_matrix(reducer, *profile.x_map))
                                 : std::nullopt,
                   std::move(matrices),
                   {}};
    if (!matrix_relations_hold(rep))
        throw ConsistencyError("action matrices violate the presentation of " + g.name());
    if (!homomorphism_holds(rep))
        throw ConsistencyError("action matrices do not multiply like " + g.name());
    for (const auto& cls : rep.classes) {
        CycloElem value = rep.matrix_of(cls.representative).trace();
        for (const auto& m : cls.members)
            if (rep.matrix_of(m).trace() != value)
                throw ConsistencyError("character is not constant on the class of " +
                                       to_string(cls.representative));
        rep.character.push_back(value);
    }
    return rep;
}

CentralRep rep_from_profile(const HyperellipticCurve& curve, const AutProfile& profile) {
    return rep_from_profile(Reducer(curve), profile);
}

TraceReport trace_closed_form(const Reducer& reducer, const AutProfile& profile) {
    long genus = reducer.genus();
    const AlgebraMap& y = profile.y_map;
    const CycloElem& root = y.twist_root();
    TraceReport report{};

    CycloElem diagonal(1);
    for (long i = 1; i <= 2 * genus; ++i) diagonal += root.pow(3 - 2 * i);
    report.twist_closed_form = diagonal;
    report.twist_full_trace = action_matrix(reducer, y).trace();
    for (long e = 1; e < 2 * profile.twist_half_order; ++e) {
        CycloElem power = root.pow(e);
        CycloElem sum(0);
        for (long i = 1; i <= 2 * genus; ++i) sum += power.pow(3 - 2 * i);
        report.twist_powers.push_back({e, u_block_trace(action_matrix(reducer, map_power(y, e))), sum,
                                       !(power * power).is_one()});
    }

    auto sign_one = [](const AlgebraMap& m) {
        return m.kind() == MapKind::Flip && m.flip_sign() && m.flip_sign()->is_one();
    };
    if (profile.x_map && sign_one(*profile.x_map)) {
        report.flip = profile.x_map;
    } else {
        for (const auto& m : profile.element_maps)
            if (sign_one(m)) {
                report.flip = m;
                break;
            }
    }
    if (!report.flip) {
        report.flip_note = profile.flip_exists ? "no flip with sign 1 and representable root"
                                               : "no flip";
        return report;
    }
    const CycloElem& c = *report.flip->flip_root();
    CycloElem sum(0);
    for (long i = genus + 3; i <= 2 * genus; ++i)
        sum += c.pow(genus + 3 - 2 * i) * reducer.p_row(i - genus - 3)[static_cast<std::size_t>(i - 1)];
    report.flip_closed_form = CycloElem(-1) - sum;
    Matrix action = action_matrix(reducer, *report.flip);
    report.flip_u_trace = u_block_trace(action);
    report.flip_full_trace = action.trace();
    return report;
}

}  // namespace knc
