#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "knc/curve.hpp"
#include "knc/decomposition.hpp"
#include "knc/errors.hpp"
#include "knc/groups.hpp"
#include "knc/linalg.hpp"
#include "knc/reduction.hpp"

namespace knc {

using Json = nlohmann::ordered_json;

// {"order": M, "coeffs": [["num", "den"], ...]}, integers as decimal strings.
Json cyclo_to_json(const CycloElem& a);
// Also accepts an integer or a rational string such as "-3/2". Throws ParseError.
CycloElem cyclo_from_json(const Json& j);

using CycloMatrix = std::vector<std::vector<CycloElem>>;
CycloMatrix to_rows(const Matrix& m);

// Curve spec: exactly one of "roots" (with optional "field_order") or
// "normal_form": {"k": k, "params": [...]}; optional "format": "json" | "text".
struct CurveSpec {
    std::optional<unsigned> field_order;
    std::optional<std::vector<CycloElem>> roots;
    std::optional<NormalFormSpec> normal_form;
    std::optional<std::string> format;
};

// Throws ParseError carrying line and column of the offending token.
CurveSpec parse_curve_spec(std::string_view text);
// Throws InvalidCurve, InvalidArgument.
HyperellipticCurve build_curve(const CurveSpec& spec);
Json curve_spec_to_json(const CurveSpec& spec);

// Hex SHA-256 of the curve's canonical coefficient serialization.
std::string curve_hash(const HyperellipticCurve& curve);

struct CurveRecord {
    long genus = 0;
    unsigned field_order = 1;
    std::vector<CycloElem> roots;
    std::vector<CycloElem> coefficients;  // a_1 .. a_{2n+1}
    std::string hash;
    bool operator==(const CurveRecord&) const = default;
};

struct ElementRecord {
    std::string element;  // "x^s y^j"
    std::string map;
    bool operator==(const ElementRecord&) const = default;
};

struct AutRecord {
    CurveRecord curve;
    long k = 0;  // twist half-order
    long l = 0;  // 2n / k
    bool flip_exists = false;
    std::string group;
    long group_order = 0;
    CycloElem twist_root;
    std::optional<CycloElem> flip_scale, flip_root, flip_sign;
    std::string y_map;
    std::optional<std::string> x_map;
    bool relations_hold = false;
    std::vector<ElementRecord> elements;
    bool operator==(const AutRecord&) const = default;
};

struct ClassRecord {
    std::string representative;
    long size = 0;
    std::vector<std::string> members;
    bool operator==(const ClassRecord&) const = default;
};

struct ClassesRecord {
    std::string group;
    long group_order = 0;
    std::optional<std::string> alias;
    std::vector<ClassRecord> classes;
    bool operator==(const ClassesRecord&) const = default;
};

struct IrrepRecord {
    std::string label;
    std::vector<std::string> aliases;
    int dim = 1;
    bool operator==(const IrrepRecord&) const = default;
};

struct TableRecord {
    std::string group;
    long group_order = 0;
    unsigned field_order = 1;
    std::vector<std::string> classes;
    std::vector<long> class_sizes;
    std::vector<IrrepRecord> irreps;
    CycloMatrix values;                          // values[irrep][class]
    std::vector<std::vector<std::string>> rendering;  // symbolic entries, e.g. "2cos(2pi*1/3)"
    bool operator==(const TableRecord&) const = default;
};

struct GeneratorRecord {
    std::string name;  // "y" or "x"
    std::string map;
    CycloMatrix matrix;
    CycloElem trace;
    CycloElem u_trace;
    bool operator==(const GeneratorRecord&) const = default;
};

struct TraceRecord {
    std::optional<std::string> flip;
    std::optional<CycloElem> flip_closed_form, flip_u_trace, flip_full_trace;
    std::string flip_note;
    CycloElem twist_closed_form;
    CycloElem twist_full_trace;
    bool operator==(const TraceRecord&) const = default;
};

struct ActionRecord {
    CurveRecord curve;
    std::string group;
    std::vector<GeneratorRecord> generators;
    std::vector<std::string> classes;
    std::vector<CycloElem> character;
    std::vector<CycloElem> u_character;
    bool relations_hold = false;
    bool homomorphism_holds = false;
    TraceRecord traces;
    bool operator==(const ActionRecord&) const = default;
};

struct CheckRecord {
    std::string formula, variant, target;
    std::optional<CycloElem> value;
    std::optional<long> computed;
    std::string status;
    std::string note;
    bool operator==(const CheckRecord&) const = default;
};

struct SystemRecord {
    std::string name;
    std::vector<CycloElem> rhs;
    std::optional<std::vector<CycloElem>> solution;
    bool agrees = false;
    bool operator==(const SystemRecord&) const = default;
};

struct PairRecord {
    long first = 0, second = 0;
    bool invariant = false;
    std::string summand;
    bool irreducible = false;
    std::optional<bool> dihedral_shape;
    bool operator==(const PairRecord&) const = default;
};

struct LineRecord {
    long index = 0;
    std::string irrep;
    bool operator==(const LineRecord&) const = default;
};

struct DecompositionRecord {
    CurveRecord curve;
    std::string group;
    std::vector<std::string> classes;
    std::vector<IrrepRecord> irreps;
    std::vector<CycloElem> character;
    std::vector<CycloElem> u_character;
    std::vector<long> multiplicities;
    std::vector<long> u_multiplicities;
    std::string omega0_irrep;
    std::string clause;
    std::optional<CycloElem> sum_full, sum_half;
    std::vector<CheckRecord> checks;
    std::vector<SystemRecord> systems;
    std::vector<PairRecord> pairs;
    std::vector<LineRecord> lines;
    std::vector<long> unpaired;
    long witnessed_two_dim = 0;
    long computed_two_dim = 0;
    bool witnesses_complete = false;
    TraceRecord traces;
    bool operator==(const DecompositionRecord&) const = default;
};

struct PQRecord {
    CurveRecord curve;
    long m_max = 0;
    long p_first_row = 0;
    CycloMatrix p_rows;  // t^k u dt for k = p_first_row ..
    CycloMatrix q_rows;  // t^{-m} u dt for m = 1 ..
    bool operator==(const PQRecord&) const = default;
};

CurveRecord make_curve_record(const HyperellipticCurve& curve);
AutRecord make_aut_record(const HyperellipticCurve& curve, const AutProfile& profile);
ClassesRecord make_classes_record(const FiniteGroup& group);
TableRecord make_table_record(const CharacterTable& table);
ActionRecord make_action_record(const Reducer& reducer, const CentralRep& rep, const TraceReport& traces);
DecompositionRecord make_decomposition_record(const HyperellipticCurve& curve, const DecompositionReport& report);
PQRecord make_pq_record(const Reducer& reducer, long m_max);

void to_json(Json& j, const CycloElem& a);
void from_json(const Json& j, CycloElem& a);

#define KNC_DECLARE_JSON(Type)             \
    void to_json(Json& j, const Type& v);  \
    void from_json(const Json& j, Type& v);

KNC_DECLARE_JSON(CurveRecord)
KNC_DECLARE_JSON(ElementRecord)
KNC_DECLARE_JSON(AutRecord)
KNC_DECLARE_JSON(ClassRecord)
KNC_DECLARE_JSON(ClassesRecord)
KNC_DECLARE_JSON(IrrepRecord)
KNC_DECLARE_JSON(TableRecord)
KNC_DECLARE_JSON(GeneratorRecord)
KNC_DECLARE_JSON(TraceRecord)
KNC_DECLARE_JSON(ActionRecord)
KNC_DECLARE_JSON(CheckRecord)
KNC_DECLARE_JSON(SystemRecord)
KNC_DECLARE_JSON(PairRecord)
KNC_DECLARE_JSON(LineRecord)
KNC_DECLARE_JSON(DecompositionRecord)
KNC_DECLARE_JSON(PQRecord)

#undef KNC_DECLARE_JSON

// Wraps a record as {"report": kind, "data": ...}.
template <typename Record>
Json emit_report(const std::string& kind, const Record& record) {
    Json out;
    out["report"] = kind;
    out["data"] = record;
    return out;
}

// Throws ParseError when the kind differs or a field is missing.
template <typename Record>
Record parse_report(const std::string& kind, const Json& j) {
    if (!j.is_object() || !j.contains("report") || j.at("report") != kind)
        throw ParseError("expected a \"" + kind + "\" report");
    try {
        return j.at("data").get<Record>();
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed report: ") + e.what());
    }
}

}  // namespace knc
