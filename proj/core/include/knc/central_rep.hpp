#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knc/automorphisms.hpp"
#include "knc/groups.hpp"
#include "knc/linalg.hpp"
#include "knc/reduction.hpp"

namespace knc {

// Pushes f(t) dt + g(t) u dt forward along the map, without reducing.
DifferentialForm apply_map(const AlgebraMap& map, const DifferentialForm& form);

// Square matrix of size 2g + 1 over (omega_0, ..., omega_{2g}); column j is the image of
// omega_j. The matrix of a o b is the product of the matrices of a and b.
Matrix action_matrix(const Reducer& reducer, const AlgebraMap& map);
Matrix action_matrix(const HyperellipticCurve& curve, const AlgebraMap& map);

// Trace over omega_1..omega_{2g} only.
CycloElem u_block_trace(const Matrix& action);

struct CentralRep {
    AutProfile profile;
    std::vector<ConjClass> classes;
    Matrix y_matrix;
    std::optional<Matrix> x_matrix;
    std::vector<Matrix> element_matrices;  // aligned with profile.group.elements()
    std::vector<CycloElem> character;      // one value per class

    const Matrix& matrix_of(const GroupElement& g) const;
};

// Throws ConsistencyError if the generator matrices violate the presentation or the
// element matrices fail to multiply like the group.
CentralRep rep_from_profile(const Reducer& reducer, const AutProfile& profile);
CentralRep rep_from_profile(const HyperellipticCurve& curve, const AutProfile& profile);

// Relations of the group's presentation evaluated on the generator matrices.
bool matrix_relations_hold(const CentralRep& rep);
// action(a o b) == action(a) action(b) for every ordered pair of group elements.
bool homomorphism_holds(const CentralRep& rep);

struct TwistPowerTrace {
    long power = 0;
    CycloElem u_trace;         // computed from the action matrix
    CycloElem diagonal_sum;    // sum_{i=1}^{2g} root^{power (3 - 2i)}
    bool expected_zero = false;  // root^{2 power} != 1
};

struct TraceReport {
    // Flip with sign 1, the one the closed form describes; empty when none exists.
    std::optional<AlgebraMap> flip;
    std::optional<CycloElem> flip_closed_form;  // -1 - sum_{i=g+3}^{2g} c^{g+3-2i} P_{i-g-3,-i}
    std::optional<CycloElem> flip_u_trace;      // computed
    std::optional<CycloElem> flip_full_trace;   // computed, including omega_0
    std::string flip_note;
    CycloElem twist_closed_form;  // 1 + sum_{i=1}^{2g} root^{3-2i} for the twist generator
    CycloElem twist_full_trace;
    std::vector<TwistPowerTrace> twist_powers;  // powers 1 .. 2k - 1 of the twist generator
};

TraceReport trace_closed_form(const Reducer& reducer, const AutProfile& profile);

}  // namespace knc
