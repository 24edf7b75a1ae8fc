#pragma once

#include <optional>
#include <string>
#include <vector>

#include "knc/automorphisms.hpp"
#include "knc/central_rep.hpp"
#include "knc/groups.hpp"
#include "knc/reduction.hpp"

namespace knc {

enum class FormulaStatus { Match, Mismatch, NotApplicable };

const char* to_string(FormulaStatus s);

// One closed-form multiplicity claim evaluated exactly and compared with the computed value.
struct FormulaCheck {
    std::string formula;  // e.g. "Upsilon_3"
    std::string variant;  // exponent convention or sign choice
    std::string target;   // irrep label the claim is about
    std::optional<CycloElem> value;
    std::optional<long> computed;
    FormulaStatus status = FormulaStatus::NotApplicable;
    std::string note;
};

struct LinearSystemPath {
    std::string name;
    std::vector<CycloElem> rhs;                      // one entry per class
    std::optional<std::vector<CycloElem>> solution;  // one entry per irrep
    bool agrees = false;                             // solution equals the orthogonality result
};

struct ClosedFormReport {
    std::string clause;  // which multiplicity clause applies, or "none"
    std::vector<FormulaCheck> checks;
    std::optional<CycloElem> sum_full;  // sum_{i=g+3}^{2g} c^{g+3-2i} P_{i-g-3,-i}
    std::optional<CycloElem> sum_half;   // same with exponents halved, when representable
    std::vector<LinearSystemPath> systems;
};

struct PairWitness {
    long first = 0;   // omega index
    long second = 0;  // omega index g + 3 - first
    bool invariant = false;
    std::string summand;         // matching 2-dim irrep label, or a sum of 1-dim labels
    bool irreducible = false;
    std::optional<bool> dihedral_shape;  // x -> [[0,1],[1,0]] after rescaling, when x^2 = 1
};

struct LineWitness {
    long index = 0;
    std::string irrep;  // empty when the line is not invariant
};

struct WitnessReport {
    std::vector<PairWitness> pairs;
    std::vector<LineWitness> lines;  // omega_0 and, for odd genus, omega_{(g+3)/2}
    std::vector<long> unpaired;      // u-basis indices covered by no pair or line
    long witnessed_two_dim = 0;
    long computed_two_dim = 0;
    bool complete = false;
};

struct DecompositionReport {
    AutProfile profile;
    CharacterTable table;
    CentralRep rep;
    std::vector<CycloElem> u_character;  // trace on omega_1..omega_{2g} per class
    std::vector<long> multiplicities;    // whole space, per irrep
    std::vector<long> u_multiplicities;  // omega_1..omega_{2g}, per irrep
    std::string omega0_irrep;
    ClosedFormReport closed_forms;
    WitnessReport witnesses;
    TraceReport traces;
};

// Throws UndeterminedGroup, NonIntegerMultiplicity, ConsistencyError.
DecompositionReport decompose(const HyperellipticCurve& curve);
DecompositionReport decompose(const Reducer& reducer);

ClosedFormReport closed_form_multiplicities(const Reducer& reducer, const DecompositionReport& report);
WitnessReport two_dim_witnesses(const DecompositionReport& report);

// Solves values^t * m = rhs by elimination; nullopt when singular.
std::optional<std::vector<CycloElem>> solve_class_system(const CharacterTable& table,
                                                         const std::vector<CycloElem>& rhs);

// Multiplicities of the regular representation, through integer_multiplicities.
std::vector<long> regular_multiplicities(const CharacterTable& table);

}  // namespace knc
