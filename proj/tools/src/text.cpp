#include <algorithm>
#include <sstream>

#include "knc/errors.hpp"
#include "knc_cli/cli.hpp"

namespace knc::cli {

namespace {

std::string value_text(const Json& j, unsigned digits) {
    if (j.is_null()) return "-";
    CycloElem a = cyclo_from_json(j);
    std::string s = render_symbolic(a);
    if (a.is_rational()) return s;
    auto [re, im] = approx_complex(a, digits);
    std::string sign = im.rfind('-', 0) == 0 ? " - " : " + ";
    if (im.rfind('-', 0) == 0) im.erase(0, 1);
    return s + " ~ " + re + sign + im + "i";
}

std::string short_value(const Json& j) {
    if (j.is_null()) return "-";
    return render_symbolic(cyclo_from_json(j));
}

std::string yes_no(const Json& j) { return j.get<bool>() ? "yes" : "no"; }

// Left-aligned columns separated by two spaces.
std::string grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (width.size() <= c) width.push_back(0);
            width[c] = std::max(width[c], row[c].size());
        }
    std::ostringstream os;
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t c = 0; c < row.size(); ++c) {
            line += row[c];
            if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
        }
        os << line << "\n";
    }
    return os.str();
}

std::string matrix_text(const Json& m) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& row : m) {
        std::vector<std::string> cells;
        for (const auto& v : row) cells.push_back(short_value(v));
        rows.push_back(std::move(cells));
    }
    return grid(rows);
}

void curve_text(std::ostream& os, const Json& c) {
    os << "curve: genus " << c["genus"].get<long>() << " over Q(zeta_" << c["field_order"].get<unsigned>()
       << "), sha256 " << c["hash"].get<std::string>().substr(0, 16) << "\n";
    os << "roots:";
    for (const auto& r : c["roots"]) os << " " << short_value(r);
    os << "\n";
}

void traces_text(std::ostream& os, const Json& t, unsigned digits) {
    os << "twist trace: " << value_text(t["twist_full_trace"], digits)
       << " (closed form " << value_text(t["twist_closed_form"], digits) << ")\n";
    if (t["flip"].is_null()) {
        os << "flip trace: " << t["flip_note"].get<std::string>() << "\n";
        return;
    }
    os << "flip " << t["flip"].get<std::string>() << "\n";
    os << "  trace on omega_1..omega_2n: " << value_text(t["flip_u_trace"], digits) << "\n";
    os << "  full trace: " << value_text(t["flip_full_trace"], digits) << "\n";
    os << "  closed form -1 - sum c^(n+3-2i) P: " << value_text(t["flip_closed_form"], digits) << "\n";
}

std::string aut_text(const Json& d, unsigned digits) {
    std::ostringstream os;
    curve_text(os, d["curve"]);
    os << "group: " << d["group"].get<std::string>() << " (order " << d["group_order"].get<long>() << ")\n";
    os << "k = " << d["k"].get<long>() << ", l = " << d["l"].get<long>() << ", flip: " << yes_no(d["flip_exists"])
       << "\n";
    os << "twist root: " << value_text(d["twist_root"], digits) << "\n";
    if (!d["flip_scale"].is_null()) {
        os << "flip scale: " << value_text(d["flip_scale"], digits) << ", c: " << value_text(d["flip_root"], digits)
           << ", sign: " << value_text(d["flip_sign"], digits) << "\n";
    }
    os << "y -> " << d["y_map"].get<std::string>() << "\n";
    if (!d["x_map"].is_null()) os << "x -> " << d["x_map"].get<std::string>() << "\n";
    os << "relations hold: " << yes_no(d["relations_hold"]) << "\n\n";
    std::vector<std::vector<std::string>> rows{{"element", "map"}};
    for (const auto& e : d["elements"]) rows.push_back({e["element"], e["map"]});
    os << grid(rows);
    return os.str();
}

std::string classes_text(const Json& d) {
    std::ostringstream os;
    os << "group: " << d["group"].get<std::string>() << " (order " << d["group_order"].get<long>() << ")";
    if (!d["alias"].is_null()) os << ", requested as " << d["alias"].get<std::string>();
    os << "\n";
    std::vector<std::vector<std::string>> rows{{"representative", "size", "members"}};
    for (const auto& c : d["classes"]) {
        std::string members;
        for (const auto& m : c["members"]) members += (members.empty() ? "" : " ") + m.get<std::string>();
        rows.push_back({c["representative"], std::to_string(c["size"].get<long>()), members});
    }
    os << grid(rows);
    return os.str();
}

std::string chartab_text(const Json& d) {
    std::ostringstream os;
    os << "group: " << d["group"].get<std::string>() << " (order " << d["group_order"].get<long>()
       << "), values in Q(zeta_" << d["field_order"].get<unsigned>() << ")\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"", "dim"};
    for (const auto& c : d["classes"]) header.push_back(c);
    rows.push_back(header);
    std::vector<std::string> sizes{"size", ""};
    for (const auto& s : d["class_sizes"]) sizes.push_back(std::to_string(s.get<long>()));
    rows.push_back(sizes);
    for (std::size_t i = 0; i < d["irreps"].size(); ++i) {
        const auto& irrep = d["irreps"][i];
        std::vector<std::string> row{irrep["label"], std::to_string(irrep["dim"].get<int>())};
        for (const auto& v : d["rendering"][i]) row.push_back(v);
        rows.push_back(std::move(row));
    }
    os << grid(rows);
    return os.str();
}

std::string action_text(const Json& d, unsigned digits) {
    std::ostringstream os;
    curve_text(os, d["curve"]);
    os << "group: " << d["group"].get<std::string>() << "\n";
    for (const auto& g : d["generators"]) {
        os << "\n" << g["name"].get<std::string>() << " -> " << g["map"].get<std::string>() << "\n";
        if (g["matrix"].size() <= 13)
            os << matrix_text(g["matrix"]);
        else
            os << "(matrix of size " << g["matrix"].size() << " omitted; see JSON output)\n";
        os << "trace " << value_text(g["trace"], digits) << ", on omega_1..omega_2n "
           << value_text(g["u_trace"], digits) << "\n";
    }
    os << "\n";
    std::vector<std::vector<std::string>> rows{{"class", "character", "on omega_1..omega_2n"}};
    for (std::size_t i = 0; i < d["classes"].size(); ++i)
        rows.push_back({d["classes"][i], short_value(d["character"][i]), short_value(d["u_character"][i])});
    os << grid(rows);
    os << "relations hold: " << yes_no(d["relations_hold"]) << ", homomorphism: " << yes_no(d["homomorphism_holds"])
       << "\n";
    traces_text(os, d["traces"], digits);
    return os.str();
}

std::string decompose_text(const Json& d, unsigned digits) {
    std::ostringstream os;
    curve_text(os, d["curve"]);
    os << "group: " << d["group"].get<std::string>() << ", omega_0 spans " << d["omega0_irrep"].get<std::string>()
       << "\n\n";
    std::vector<std::vector<std::string>> rows{{"irrep", "dim", "mult (omega_1..)", "mult (all)", "closed form",
                                                "status", "variants matching"}};
    auto restricted_check = [](const Json& c) {
        std::string f = c["formula"];
        return f.find("Xi") == 0 || f == "V_j once";
    };
    for (std::size_t i = 0; i < d["irreps"].size(); ++i) {
        std::string label = d["irreps"][i]["label"];
        std::string value = "-", status = "-";
        long total = 0, matching = 0;
        for (const auto& c : d["checks"]) {
            if (c["target"] != label || restricted_check(c)) continue;
            if (total == 0) {
                value = short_value(c["value"]);
                status = c["status"];
            }
            ++total;
            if (c["status"] == "match") ++matching;
        }
        rows.push_back({label, std::to_string(d["irreps"][i]["dim"].get<int>()),
                        std::to_string(d["u_multiplicities"][i].get<long>()),
                        std::to_string(d["multiplicities"][i].get<long>()), value, status,
                        total ? std::to_string(matching) + "/" + std::to_string(total) : "-"});
    }
    os << grid(rows);
    std::vector<std::vector<std::string>> variants{{"formula", "variant", "target", "value", "computed", "status"}};
    for (const auto& c : d["checks"])
        variants.push_back({c["formula"], c["variant"].get<std::string>().empty() ? "-" : c["variant"].get<std::string>(),
                            c["target"], short_value(c["value"]),
                            c["computed"].is_null() ? "-" : std::to_string(c["computed"].get<long>()), c["status"]});
    os << "\nclause: " << d["clause"].get<std::string>() << "\n";
    os << "sum (full exponents): " << value_text(d["sum_full"], digits)
       << ", sum (halved exponents): " << value_text(d["sum_half"], digits) << "\n";
    if (variants.size() > 1) os << "\nclosed-form evaluations:\n" << grid(variants);
    for (const auto& s : d["systems"])
        os << "linear system (" << s["name"].get<std::string>() << "): "
           << (s["solution"].is_null() ? "singular" : (s["agrees"].get<bool>() ? "agrees" : "disagrees")) << "\n";
    os << "\nwitness pairs:\n";
    for (const auto& p : d["pairs"]) {
        os << "  (omega_" << p["first"].get<long>() << ", omega_" << p["second"].get<long>() << "): ";
        if (!p["invariant"].get<bool>()) {
            os << "not invariant\n";
            continue;
        }
        os << p["summand"].get<std::string>();
        if (!p["dihedral_shape"].is_null()) os << (p["dihedral_shape"].get<bool>() ? ", dihedral shape" : "");
        os << "\n";
    }
    for (const auto& l : d["lines"])
        os << "  line omega_" << l["index"].get<long>() << ": "
           << (l["irrep"].get<std::string>().empty() ? "not invariant" : l["irrep"].get<std::string>()) << "\n";
    os << "  2-dim summands witnessed " << d["witnessed_two_dim"].get<long>() << " of "
       << d["computed_two_dim"].get<long>();
    if (!d["unpaired"].empty()) {
        os << "; uncovered:";
        for (const auto& i : d["unpaired"]) os << " omega_" << i.get<long>();
    }
    os << "\n\n";
    traces_text(os, d["traces"], digits);
    return os.str();
}

std::string pq_text(const Json& d) {
    std::ostringstream os;
    curve_text(os, d["curve"]);
    long genus = d["curve"]["genus"].get<long>();
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"P row"};
    for (long i = 1; i <= 2 * genus; ++i) header.push_back("omega_" + std::to_string(i));
    rows.push_back(header);
    long k = d["p_first_row"].get<long>();
    for (const auto& row : d["p_rows"]) {
        std::vector<std::string> cells{"t^" + std::to_string(k++) + " u dt"};
        for (const auto& v : row) cells.push_back(short_value(v));
        rows.push_back(std::move(cells));
    }
    os << grid(rows) << "\n";
    rows.clear();
    header[0] = "Q row";
    rows.push_back(header);
    long m = 1;
    for (const auto& row : d["q_rows"]) {
        std::vector<std::string> cells{"t^-" + std::to_string(m++) + " u dt"};
        for (const auto& v : row) cells.push_back(short_value(v));
        rows.push_back(std::move(cells));
    }
    os << grid(rows);
    return os.str();
}

std::string selftest_text(const Json& d) {
    std::ostringstream os;
    std::vector<std::vector<std::string>> rows{{"module", "passed", "failed"}};
    for (const auto& s : d["suites"]) {
        rows.push_back({s["module"], std::to_string(s["passed"].get<long>()), std::to_string(s["failed"].get<long>())});
    }
    os << grid(rows);
    for (const auto& s : d["suites"])
        for (const auto& c : s["checks"])
            if (!c["passed"].get<bool>())
                os << "FAILED " << s["module"].get<std::string>() << ": " << c["name"].get<std::string>() << "\n";
    os << "total: " << d["passed"].get<long>() << " passed, " << d["failed"].get<long>() << " failed\n";
    return os.str();
}

}  // namespace

std::string render_text(const Json& report, unsigned digits) {
    std::string kind = report.at("report");
    const Json& d = report.at("data");
    if (kind == "aut") return aut_text(d, digits);
    if (kind == "classes") return classes_text(d);
    if (kind == "chartab") return chartab_text(d);
    if (kind == "action") return action_text(d, digits);
    if (kind == "decompose") return decompose_text(d, digits);
    if (kind == "pq-table") return pq_text(d);
    if (kind == "selftest") return selftest_text(d);
    throw InvalidArgument("no text rendering for report kind " + kind);
}

}  // namespace knc::cli
