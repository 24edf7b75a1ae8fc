#include "knc_cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "knc/automorphisms.hpp"
#include "knc/central_rep.hpp"
#include "knc/decomposition.hpp"
#include "knc/errors.hpp"

namespace knc::cli {

namespace {

constexpr const char* kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  1  unexpected internal error\n"
    "  2  usage error (bad flags, arguments, or KNCENTER_DIGITS)\n"
    "  3  parse error in a curve spec (line and column reported)\n"
    "  4  invalid curve (repeated, zero, or colliding roots; bad field order)\n"
    "  5  automorphism group undetermined (flip parameter not representable)\n"
    "  6  internal consistency failure (relations, homomorphism, multiplicities)\n"
    "  7  selftest reported failures\n"
    "Errors are written to stderr as JSON: {\"error\", \"kind\", \"message\", ...}.\n"
    "Environment: KNCENTER_DIGITS sets the digits of approximate values in text output.";

struct Failure {
    int code = kInternal;
    Json body;
};

Failure classify(const std::exception& e) {
    Failure f;
    f.body["error"] = true;
    if (const auto* p = dynamic_cast<const ParseError*>(&e)) {
        f.code = kParse;
        f.body["kind"] = p->kind();
        f.body["message"] = p->what();
        f.body["line"] = p->line();
        f.body["column"] = p->column();
        return f;
    }
    if (const auto* k = dynamic_cast<const Error*>(&e)) {
        f.body["kind"] = k->kind();
        if (dynamic_cast<const InvalidCurve*>(&e) || dynamic_cast<const InvalidArgument*>(&e) ||
            dynamic_cast<const DivisionByZero*>(&e))
            f.code = kInvalidCurve;
        else if (dynamic_cast<const UndeterminedGroup*>(&e))
            f.code = kUndetermined;
        else if (dynamic_cast<const ConsistencyError*>(&e) || dynamic_cast<const NonIntegerMultiplicity*>(&e))
            f.code = kConsistency;
    } else {
        f.body["kind"] = "internal";
    }
    f.body["message"] = e.what();
    return f;
}

struct Input {
    std::string name;
    std::string text;
};

Json curve_report(const std::string& command, const HyperellipticCurve& curve, long m_max) {
    if (command == "aut") return emit_report("aut", make_aut_record(curve, classify_group(curve)));
    Reducer reducer(curve);
    if (command == "pq-table") return emit_report("pq-table", make_pq_record(reducer, m_max));
    if (command == "action") {
        auto profile = classify_group(curve);
        auto rep = rep_from_profile(reducer, profile);
        return emit_report("action", make_action_record(reducer, rep, trace_closed_form(reducer, profile)));
    }
    return emit_report("decompose", make_decomposition_record(curve, decompose(reducer)));
}

struct Outcome {
    std::optional<Json> report;
    std::optional<Failure> failure;
    std::optional<std::string> format;
};

Outcome process(const std::string& command, const Input& input, long m_max) {
    Outcome o;
    try {
        CurveSpec spec = parse_curve_spec(input.text);
        o.format = spec.format;
        o.report = curve_report(command, build_curve(spec), m_max);
    } catch (const std::exception& e) {
        o.failure = classify(e);
        o.failure->body["input"] = input.name;
    }
    return o;
}

void emit(std::ostream& out, const Json& report, const std::string& format, unsigned digits) {
    if (format == "text")
        out << render_text(report, digits);
    else
        out << report.dump(2) << "\n";
}

}  // namespace

unsigned display_digits() {
    const char* env = std::getenv("KNCENTER_DIGITS");
    if (!env || !*env) return 6;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 1 || v > 1000) throw CLI::ValidationError("KNCENTER_DIGITS", "must be an integer in 1..1000");
    return static_cast<unsigned>(v);
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Automorphism groups of hyperelliptic Laurent rings and their action on differentials modulo exact forms"};
    app.name("kncenter");
    app.footer(kExitCodes);
    app.require_subcommand(1, 1);
    app.fallthrough();

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "text"}));

    std::vector<std::string> files;
    std::string inline_spec;
    long m_max = 4;
    auto add_curve_input = [&](CLI::App* sub) {
        sub->add_option("files", files, "Curve spec files; '-' or nothing reads standard input");
        sub->add_option("--spec", inline_spec, "Inline curve spec (JSON)");
    };
    auto* aut = app.add_subcommand("aut", "Automorphism group profile of a curve");
    auto* action = app.add_subcommand("action", "Generator action matrices on differentials modulo exact forms");
    auto* decompose_cmd = app.add_subcommand("decompose", "Decomposition into irreducible representations");
    auto* pq = app.add_subcommand("pq-table", "P and Q reduction tables");
    for (auto* sub : {aut, action, decompose_cmd, pq}) add_curve_input(sub);
    pq->add_option("--m-max", m_max, "Largest P row index")->check(CLI::Range(0L, 10000L));

    std::string family;
    long param = 0;
    auto* classes = app.add_subcommand("classes", "Conjugacy classes of a group");
    auto* chartab = app.add_subcommand("chartab", "Character table of a group");
    for (auto* sub : {classes, chartab}) {
        sub->add_option("family", family, "cyclic | dihedral | dicyclic | u")->required();
        sub->add_option("param", param, "Family parameter")->required()->check(CLI::Range(1L, 100000L));
    }
    auto* selftest = app.add_subcommand("selftest", "Invariant checks of every module at small parameters");

    std::vector<std::string> args;
    for (int i = argc - 1; i > 0; --i) args.emplace_back(argv[i]);
    unsigned digits = 6;
    try {
        app.parse(args);
        digits = display_digits();
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::Error& e) {
        Json body{{"error", true}, {"kind", "usage"}, {"message", e.what()}};
        err << body.dump() << "\n";
        return kUsage;
    }
    bool format_given = app.count("--format") > 0;

    auto fail = [&](const Failure& f) {
        err << f.body.dump() << "\n";
        return f.code;
    };

    try {
        if (selftest->parsed()) {
            Json report = emit_report("selftest", run_selftest());
            emit(out, report, format, digits);
            return report["data"]["failed"].get<long>() == 0 ? kOk : kSelftestFailed;
        }
        if (classes->parsed() || chartab->parsed()) {
            FiniteGroup g = build_group(parse_group_family(family), param);
            Json report = classes->parsed() ? emit_report("classes", make_classes_record(g))
                                            : emit_report("chartab", make_table_record(character_table(g)));
            emit(out, report, format, digits);
            return kOk;
        }
    } catch (const std::exception& e) {
        auto f = classify(e);
        if (dynamic_cast<const InvalidArgument*>(&e)) f.code = kUsage;
        return fail(f);
    }

    std::string command = app.get_subcommands().front()->get_name();
    std::vector<Input> inputs;
    if (!inline_spec.empty()) inputs.push_back({"--spec", inline_spec});
    for (const auto& file : files) {
        if (file == "-") {
            std::stringstream ss;
            ss << in.rdbuf();
            inputs.push_back({"<stdin>", ss.str()});
            continue;
        }
        std::ifstream f(file);
        if (!f) {
            Json body{{"error", true}, {"kind", "usage"}, {"message", "cannot read " + file}, {"input", file}};
            err << body.dump() << "\n";
            return kUsage;
        }
        std::stringstream ss;
        ss << f.rdbuf();
        inputs.push_back({file, ss.str()});
    }
    if (inputs.empty()) {
        std::stringstream ss;
        ss << in.rdbuf();
        inputs.push_back({"<stdin>", ss.str()});
    }

    std::vector<std::future<Outcome>> jobs;
    for (const auto& input : inputs)
        jobs.push_back(std::async(std::launch::async, [&, input] { return process(command, input, m_max); }));
    int code = kOk;
    for (auto& job : jobs) {
        Outcome o = job.get();
        if (o.failure) {
            int c = fail(*o.failure);
            if (code == kOk) code = c;
            continue;
        }
        std::string chosen = format_given ? format : o.format.value_or(format);
        emit(out, *o.report, chosen, digits);
    }
    return code;
}

}  // namespace knc::cli
