#include "knc/serialize.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <cstdio>
#include <set>

#include "knc/errors.hpp"

namespace knc {

namespace {

struct Position {
    std::size_t line = 1;
    std::size_t column = 1;
};

Position position_at(std::string_view text, std::size_t offset) {
    Position p;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++p.line;
            p.column = 1;
        } else {
            ++p.column;
        }
    }
    return p;
}

// Position of the first occurrence of "key" in the source, or 1:1.
Position locate_key(std::string_view text, const std::string& key) {
    auto at = text.find("\"" + key + "\"");
    return at == std::string_view::npos ? Position{} : position_at(text, at);
}

[[noreturn]] void fail_at(std::string_view text, const std::string& key, const std::string& message) {
    Position p = locate_key(text, key);
    throw ParseError(message, p.line, p.column);
}

Integer parse_integer(const Json& j) {
    if (j.is_number_integer()) return Integer(j.dump());
    if (j.is_string()) {
        Integer out;
        if (out.set_str(j.get<std::string>(), 10) != 0) throw ParseError("not an integer: " + j.dump());
        return out;
    }
    throw ParseError("expected an integer or a decimal string, got " + j.dump());
}

template <typename T>
void put(Json& j, const char* key, const T& v) {
    j[key] = v;
}

template <typename T>
void put(Json& j, const char* key, const std::optional<T>& v) {
    j[key] = v ? Json(*v) : Json(nullptr);
}

template <typename T>
void get(const Json& j, const char* key, T& v) {
    j.at(key).get_to(v);
}

template <typename T>
void get(const Json& j, const char* key, std::optional<T>& v) {
    const Json& x = j.at(key);
    if (x.is_null())
        v.reset();
    else
        v = x.get<T>();
}

std::vector<std::string> class_labels(const std::vector<ConjClass>& classes) {
    std::vector<std::string> out;
    for (const auto& c : classes) out.push_back(to_string(c.representative));
    return out;
}

std::vector<IrrepRecord> irrep_records(const CharacterTable& table) {
    std::vector<IrrepRecord> out;
    for (const auto& r : table.irreps) out.push_back({r.label, r.aliases, r.dim});
    return out;
}

TraceRecord make_trace_record(const TraceReport& t) {
    TraceRecord r;
    if (t.flip) r.flip = t.flip->describe();
    r.flip_closed_form = t.flip_closed_form;
    r.flip_u_trace = t.flip_u_trace;
    r.flip_full_trace = t.flip_full_trace;
    r.flip_note = t.flip_note;
    r.twist_closed_form = t.twist_closed_form;
    r.twist_full_trace = t.twist_full_trace;
    return r;
}

}  // namespace

Json cyclo_to_json(const CycloElem& a) {
    Json out;
    Json coeffs = Json::array();
    if (a.is_rational()) {
        Rational q = a.rational_value();
        out["order"] = 1;
        coeffs.push_back(Json::array({q.get_num().get_str(), q.get_den().get_str()}));
    } else {
        out["order"] = a.order();
        for (const auto& q : a.coeffs())
            coeffs.push_back(Json::array({q.get_num().get_str(), q.get_den().get_str()}));
    }
    out["coeffs"] = std::move(coeffs);
    return out;
}

CycloElem cyclo_from_json(const Json& j) {
    if (j.is_number_integer()) return CycloElem(Rational(parse_integer(j)));
    if (j.is_string()) return CycloElem(parse_rational(j.get<std::string>()));
    if (!j.is_object() || !j.contains("order") || !j.contains("coeffs"))
        throw ParseError("field element must be an integer, a rational string, or {\"order\", \"coeffs\"}");
    const Json& order = j.at("order");
    if (!order.is_number_integer() || order.get<long long>() < 1 || order.get<long long>() > 1000000)
        throw ParseError("field order must be a positive integer");
    const Json& coeffs = j.at("coeffs");
    if (!coeffs.is_array()) throw ParseError("coeffs must be an array");
    std::vector<Rational> raw;
    for (const auto& c : coeffs) {
        if (c.is_array() && c.size() == 2) {
            Integer num = parse_integer(c[0]);
            Integer den = parse_integer(c[1]);
            if (den == 0) throw ParseError("zero denominator in " + c.dump());
            Rational q(num, den);
            q.canonicalize();
            raw.push_back(q);
        } else if (c.is_number_integer()) {
            raw.emplace_back(parse_integer(c));
        } else if (c.is_string()) {
            raw.push_back(parse_rational(c.get<std::string>()));
        } else {
            throw ParseError("coefficient must be [\"num\", \"den\"], got " + c.dump());
        }
    }
    return cyclo_new(static_cast<unsigned>(order.get<long long>()), raw);
}

void to_json(Json& j, const CycloElem& a) { j = cyclo_to_json(a); }
void from_json(const Json& j, CycloElem& a) { a = cyclo_from_json(j); }

CycloMatrix to_rows(const Matrix& m) {
    CycloMatrix out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r].push_back(m(r, c));
    return out;
}

CurveSpec parse_curve_spec(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
        Position p = position_at(text, offset);
        throw ParseError(std::string("invalid JSON: ") + e.what(), p.line, p.column);
    }
    if (!j.is_object()) throw ParseError("curve spec must be a JSON object", 1, 1);

    static const std::set<std::string> known = {"field_order", "roots", "normal_form", "format"};
    for (const auto& [key, value] : j.items())
        if (!known.count(key)) fail_at(text, key, "unknown key \"" + key + "\"");

    CurveSpec spec;
    bool has_roots = j.contains("roots");
    bool has_normal = j.contains("normal_form");
    if (has_roots == has_normal)
        throw ParseError("exactly one of \"roots\" and \"normal_form\" must be present", 1, 1);

    auto elements = [&](const Json& arr, const std::string& key) {
        if (!arr.is_array() || arr.empty()) fail_at(text, key, "\"" + key + "\" must be a nonempty array");
        std::vector<CycloElem> out;
        for (const auto& e : arr) {
            try {
                out.push_back(cyclo_from_json(e));
            } catch (const Error& err) {
                fail_at(text, key, "in \"" + key + "\": " + err.what());
            }
        }
        return out;
    };

    if (j.contains("field_order")) {
        const Json& fo = j.at("field_order");
        if (!fo.is_number_integer() || fo.get<long long>() < 1 || fo.get<long long>() > 1000000)
            fail_at(text, "field_order", "\"field_order\" must be a positive integer");
        spec.field_order = static_cast<unsigned>(fo.get<long long>());
    }
    if (has_roots) spec.roots = elements(j.at("roots"), "roots");
    if (has_normal) {
        const Json& nf = j.at("normal_form");
        if (!nf.is_object() || !nf.contains("k") || !nf.contains("params"))
            fail_at(text, "normal_form", "\"normal_form\" needs \"k\" and \"params\"");
        for (const auto& [key, value] : nf.items())
            if (key != "k" && key != "params") fail_at(text, key, "unknown key \"" + key + "\"");
        const Json& k = nf.at("k");
        if (!k.is_number_integer() || k.get<long long>() < 1 || k.get<long long>() > 100000)
            fail_at(text, "k", "\"k\" must be a positive integer");
        spec.normal_form = NormalFormSpec{static_cast<long>(k.get<long long>()), elements(nf.at("params"), "params")};
    }
    if (j.contains("format")) {
        const Json& f = j.at("format");
        if (!f.is_string() || (f != "json" && f != "text"))
            fail_at(text, "format", "\"format\" must be \"json\" or \"text\"");
        spec.format = f.get<std::string>();
    }
    return spec;
}

HyperellipticCurve build_curve(const CurveSpec& spec) {
    if (spec.roots) return curve_from_roots(spec.field_order.value_or(1), *spec.roots);
    if (!spec.normal_form) throw InvalidArgument("curve spec has neither roots nor normal_form");
    HyperellipticCurve curve = curve_normal_form(*spec.normal_form);
    if (!spec.field_order || *spec.field_order == curve.field_order()) return curve;
    if (*spec.field_order % curve.field_order() != 0)
        throw InvalidArgument("field_order " + std::to_string(*spec.field_order) +
                              " is not a multiple of the required order " + std::to_string(curve.field_order()));
    return curve_from_roots(*spec.field_order, curve.roots());
}

Json curve_spec_to_json(const CurveSpec& spec) {
    Json out;
    if (spec.field_order) out["field_order"] = *spec.field_order;
    if (spec.roots) out["roots"] = *spec.roots;
    if (spec.normal_form)
        out["normal_form"] = Json{{"k", spec.normal_form->rotation}, {"params", spec.normal_form->params}};
    if (spec.format) out["format"] = *spec.format;
    return out;
}

std::string curve_hash(const HyperellipticCurve& curve) {
    std::string text = Json(curve.coefficients()).dump();
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int size = 0;
    if (EVP_Digest(text.data(), text.size(), digest, &size, EVP_sha256(), nullptr) != 1)
        throw ConsistencyError("SHA-256 failed");
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < size; ++i) {
        std::snprintf(buf, sizeof buf, "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

CurveRecord make_curve_record(const HyperellipticCurve& curve) {
    return {curve.genus(), curve.field_order(), curve.roots(), curve.coefficients(), curve_hash(curve)};
}

AutRecord make_aut_record(const HyperellipticCurve& curve, const AutProfile& profile) {
    AutRecord r;
    r.curve = make_curve_record(curve);
    r.k = profile.twist_half_order;
    r.l = profile.quotient;
    r.flip_exists = profile.flip_exists;
    r.group = profile.group.name();
    r.group_order = profile.group.order();
    r.twist_root = profile.y_map.twist_root();
    if (profile.x_map) {
        r.flip_scale = profile.x_map->flip_scale();
        r.flip_root = profile.x_map->flip_root();
        r.flip_sign = profile.x_map->flip_sign();
        r.x_map = profile.x_map->describe();
    }
    r.y_map = profile.y_map.describe();
    r.relations_hold = generator_relations_hold(profile);
    const auto& elements = profile.group.elements();
    for (std::size_t i = 0; i < elements.size(); ++i)
        r.elements.push_back({to_string(elements[i]), profile.element_maps[i].describe()});
    return r;
}

ClassesRecord make_classes_record(const FiniteGroup& group) {
    ClassesRecord r{group.name(), group.order(), group.alias(), {}};
    for (const auto& c : conjugacy_classes(group)) {
        ClassRecord cr{to_string(c.representative), static_cast<long>(c.members.size()), {}};
        for (const auto& m : c.members) cr.members.push_back(to_string(m));
        r.classes.push_back(std::move(cr));
    }
    return r;
}

TableRecord make_table_record(const CharacterTable& table) {
    TableRecord r;
    r.group = table.group.name();
    r.group_order = table.group.order();
    r.field_order = table.field_order;
    r.classes = class_labels(table.classes);
    r.class_sizes = table.class_sizes;
    r.irreps = irrep_records(table);
    r.values = to_rows(table.values);
    for (const auto& row : r.values) {
        std::vector<std::string> rendered;
        for (const auto& v : row) rendered.push_back(render_symbolic(v));
        r.rendering.push_back(std::move(rendered));
    }
    return r;
}

ActionRecord make_action_record(const Reducer& reducer, const CentralRep& rep, const TraceReport& traces) {
    ActionRecord r;
    r.curve = make_curve_record(reducer.curve());
    r.group = rep.profile.group.name();
    r.generators.push_back({"y", rep.profile.y_map.describe(), to_rows(rep.y_matrix), rep.y_matrix.trace(),
                            u_block_trace(rep.y_matrix)});
    if (rep.x_matrix)
        r.generators.push_back({"x", rep.profile.x_map->describe(), to_rows(*rep.x_matrix), rep.x_matrix->trace(),
                                u_block_trace(*rep.x_matrix)});
    r.classes = class_labels(rep.classes);
    r.character = rep.character;
    for (const auto& c : rep.classes) r.u_character.push_back(u_block_trace(rep.matrix_of(c.representative)));
    r.relations_hold = matrix_relations_hold(rep);
    r.homomorphism_holds = homomorphism_holds(rep);
    r.traces = make_trace_record(traces);
    return r;
}

DecompositionRecord make_decomposition_record(const HyperellipticCurve& curve, const DecompositionReport& report) {
    DecompositionRecord r;
    r.curve = make_curve_record(curve);
    r.group = report.profile.group.name();
    r.classes = class_labels(report.table.classes);
    r.irreps = irrep_records(report.table);
    r.character = report.rep.character;
    r.u_character = report.u_character;
    r.multiplicities = report.multiplicities;
    r.u_multiplicities = report.u_multiplicities;
    r.omega0_irrep = report.omega0_irrep;
    const auto& cf = report.closed_forms;
    r.clause = cf.clause;
    r.sum_full = cf.sum_full;
    r.sum_half = cf.sum_half;
    for (const auto& c : cf.checks)
        r.checks.push_back({c.formula, c.variant, c.target, c.value, c.computed, to_string(c.status), c.note});
    for (const auto& s : cf.systems) r.systems.push_back({s.name, s.rhs, s.solution, s.agrees});
    const auto& w = report.witnesses;
    for (const auto& p : w.pairs)
        r.pairs.push_back({p.first, p.second, p.invariant, p.summand, p.irreducible, p.dihedral_shape});
    for (const auto& l : w.lines) r.lines.push_back({l.index, l.irrep});
    r.unpaired = w.unpaired;
    r.witnessed_two_dim = w.witnessed_two_dim;
    r.computed_two_dim = w.computed_two_dim;
    r.witnesses_complete = w.complete;
    r.traces = make_trace_record(report.traces);
    return r;
}

PQRecord make_pq_record(const Reducer& reducer, long m_max) {
    PQRecord r;
    r.curve = make_curve_record(reducer.curve());
    r.m_max = m_max;
    PQTable p = reducer.p_table(m_max);
    r.p_first_row = p.first_row;
    r.p_rows = p.rows;
    r.q_rows = reducer.q_table(std::max(1L, m_max)).rows;
    return r;
}

#define KNC_PUT(f) put(j, #f, v.f);
#define KNC_GET(f) get(j, #f, v.f);
#define KNC_DEFINE_JSON(Type, ...)                                                   \
    void to_json(Json& j, const Type& v) {                                           \
        j = Json::object();                                                          \
        NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(KNC_PUT, __VA_ARGS__))                        \
    }                                                                                \
    void from_json(const Json& j, Type& v) { NLOHMANN_JSON_EXPAND(NLOHMANN_JSON_PASTE(KNC_GET, __VA_ARGS__)) }

KNC_DEFINE_JSON(CurveRecord, genus, field_order, roots, coefficients, hash)
KNC_DEFINE_JSON(ElementRecord, element, map)
KNC_DEFINE_JSON(AutRecord, curve, k, l, flip_exists, group, group_order, twist_root, flip_scale, flip_root,
                flip_sign, y_map, x_map, relations_hold, elements)
KNC_DEFINE_JSON(ClassRecord, representative, size, members)
KNC_DEFINE_JSON(ClassesRecord, group, group_order, alias, classes)
KNC_DEFINE_JSON(IrrepRecord, label, aliases, dim)
KNC_DEFINE_JSON(TableRecord, group, group_order, field_order, classes, class_sizes, irreps, values, rendering)
KNC_DEFINE_JSON(GeneratorRecord, name, map, matrix, trace, u_trace)
KNC_DEFINE_JSON(TraceRecord, flip, flip_closed_form, flip_u_trace, flip_full_trace, flip_note, twist_closed_form,
                twist_full_trace)
KNC_DEFINE_JSON(ActionRecord, curve, group, generators, classes, character, u_character, relations_hold,
                homomorphism_holds, traces)
KNC_DEFINE_JSON(CheckRecord, formula, variant, target, value, computed, status, note)
KNC_DEFINE_JSON(SystemRecord, name, rhs, solution, agrees)
KNC_DEFINE_JSON(PairRecord, first, second, invariant, summand, irreducible, dihedral_shape)
KNC_DEFINE_JSON(LineRecord, index, irrep)
KNC_DEFINE_JSON(DecompositionRecord, curve, group, classes, irreps, character, u_character, multiplicities,
                u_multiplicities, omega0_irrep, clause, sum_full, sum_half, checks, systems, pairs, lines, unpaired,
                witnessed_two_dim, computed_two_dim, witnesses_complete, traces)
KNC_DEFINE_JSON(PQRecord, curve, m_max, p_first_row, p_rows, q_rows)

}  // namespace knc
