#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "knc_cli/cli.hpp"

using namespace knc;

namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "kncenter");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(static_cast<int>(argv.size()), argv.data(), in, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(KNC_DATA_DIR) + "/curves/" + name; }

std::vector<long> by_label(const Json& d, const std::vector<std::string>& labels) {
    std::vector<long> out;
    for (const auto& l : labels)
        for (std::size_t i = 0; i < d["irreps"].size(); ++i)
            if (d["irreps"][i]["label"] == l) out.push_back(d["u_multiplicities"][i]);
    return out;
}

}  // namespace

TEST(Cli, DecomposeGoldenCubic) {
    auto r = run_cli({"decompose", data("n3k3.json")});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = Json::parse(r.out);
    EXPECT_EQ(j["report"], "decompose");
    EXPECT_EQ(by_label(j["data"], {"rho1", "rho2", "rho3", "rho4"}), (std::vector<long>{0, 0, 0, 2}));
    EXPECT_EQ(by_label(j["data"], {"chi_1", "chi_2"}), (std::vector<long>{2, 0}));
}

TEST(Cli, ChartabDihedralThree) {
    auto r = run_cli({"chartab", "dihedral", "3"});
    ASSERT_EQ(r.code, 0);
    auto d = Json::parse(r.out)["data"];
    EXPECT_EQ(d["classes"], Json::parse(R"(["1", "y", "x"])"));
    std::vector<std::vector<std::string>> expected{{"1", "1", "1"}, {"1", "1", "-1"}, {"2", "-1", "0"}};
    EXPECT_EQ(d["rendering"].get<std::vector<std::vector<std::string>>>(), expected);
    auto c = run_cli({"chartab", "dihedral", "5", "--format", "text"});
    EXPECT_NE(c.out.find("2cos(2pi*1/5)"), std::string::npos);
}

TEST(Cli, ClassesAndAlias) {
    auto r = run_cli({"classes", "u", "3"});
    ASSERT_EQ(r.code, 0);
    auto d = Json::parse(r.out)["data"];
    EXPECT_EQ(d["group"], "Dihedral(3)");
    EXPECT_EQ(d["alias"], "U(3)");
    EXPECT_EQ(Json::parse(run_cli({"classes", "u", "6"}).out)["data"]["classes"].size(), 12u);
}

TEST(Cli, InputsFromStdinInlineAndFiles) {
    std::string spec = R"({"normal_form": {"k": 3, "params": [1, 4]}})";
    auto from_file = run_cli({"aut", data("n3k3.json")});
    auto from_stdin = run_cli({"aut"}, spec);
    auto from_dash = run_cli({"aut", "-"}, spec);
    auto from_inline = run_cli({"aut", "--spec", spec});
    ASSERT_EQ(from_file.code, 0);
    EXPECT_EQ(from_file.out, from_stdin.out);
    EXPECT_EQ(from_file.out, from_dash.out);
    EXPECT_EQ(from_file.out, from_inline.out);
}

TEST(Cli, MultipleFilesKeepInputOrder) {
    auto both = run_cli({"aut", data("n3k3.json"), data("t3_minus_t.json")});
    ASSERT_EQ(both.code, 0);
    auto first = run_cli({"aut", data("n3k3.json")});
    auto second = run_cli({"aut", data("t3_minus_t.json")});
    EXPECT_EQ(both.out, first.out + second.out);
}

TEST(Cli, OutputIsByteIdentical) {
    auto a = run_cli({"action", data("n3k3.json")});
    auto b = run_cli({"action", data("n3k3.json")});
    ASSERT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, TextIsDerivedFromJson) {
    for (const std::string cmd : {"aut", "action", "decompose", "pq-table"}) {
        auto json = run_cli({cmd, data("n3k3.json")});
        auto text = run_cli({"--format", "text", cmd, data("n3k3.json")});
        ASSERT_EQ(json.code, 0) << cmd;
        EXPECT_EQ(text.out, cli::render_text(Json::parse(json.out), cli::display_digits())) << cmd;
    }
}

TEST(Cli, SpecFileFormatAndFlagPrecedence) {
    std::string spec = R"({"roots": [1, -1], "format": "text"})";
    auto r = run_cli({"aut"}, spec);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(r.out.rfind("curve:", 0), 0u);
    auto j = run_cli({"aut", "--format", "json"}, spec);
    EXPECT_NO_THROW(Json::parse(j.out));
}

TEST(Cli, ExitCodes) {
    auto parse = run_cli({"aut"}, "{\"roots\": [1,\n");
    EXPECT_EQ(parse.code, cli::kParse);
    auto err = Json::parse(parse.err);
    EXPECT_EQ(err["kind"], "parse_error");
    EXPECT_EQ(err["line"], 2);

    EXPECT_EQ(run_cli({"aut"}, R"({"roots": [1, 1]})").code, cli::kInvalidCurve);
    EXPECT_EQ(run_cli({"aut"}, R"({"roots": [1, 2, 0, 3]})").code, cli::kInvalidCurve);
    auto und = run_cli({"decompose", data("undetermined.json")});
    EXPECT_EQ(und.code, cli::kUndetermined);
    EXPECT_EQ(Json::parse(und.err)["kind"], "undetermined_group");

    EXPECT_EQ(run_cli({}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"chartab", "quaternion", "2"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"--format", "yaml", "aut"}).code, cli::kUsage);
    EXPECT_EQ(run_cli({"aut", "/nonexistent/curve.json"}).code, cli::kUsage);

    auto help = run_cli({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_NE(help.out.find("Exit codes"), std::string::npos);
    EXPECT_NE(help.out.find("undetermined"), std::string::npos);
}

TEST(Cli, FirstFailureDecidesExitCodeButOthersStillRun) {
    auto r = run_cli({"aut", data("undetermined.json"), data("n3k3.json")});
    EXPECT_EQ(r.code, cli::kUndetermined);
    EXPECT_EQ(Json::parse(r.out)["data"]["group"], "Dihedral(6)");
}

TEST(Cli, PqTable) {
    auto r = run_cli({"pq-table", "--m-max", "2", data("t3_minus_t.json")});
    ASSERT_EQ(r.code, 0);
    auto d = Json::parse(r.out)["data"];
    EXPECT_EQ(d["m_max"], 2);
    EXPECT_EQ(d["p_first_row"], -2);
    EXPECT_EQ(d["p_rows"].size(), 5u);
    EXPECT_EQ(d["curve"]["hash"].get<std::string>().size(), 64u);
}

TEST(Cli, DigitsOnlyAffectDisplay) {
    setenv("KNCENTER_DIGITS", "3", 1);
    auto short_digits = run_cli({"--format", "text", "aut", data("n3k3.json")});
    auto json_short = run_cli({"aut", data("n3k3.json")});
    setenv("KNCENTER_DIGITS", "20", 1);
    auto long_digits = run_cli({"--format", "text", "aut", data("n3k3.json")});
    auto json_long = run_cli({"aut", data("n3k3.json")});
    setenv("KNCENTER_DIGITS", "zero", 1);
    auto bad = run_cli({"aut", data("n3k3.json")});
    unsetenv("KNCENTER_DIGITS");
    EXPECT_EQ(json_short.out, json_long.out);
    EXPECT_NE(short_digits.out, long_digits.out);
    EXPECT_NE(short_digits.out.find("0.866"), std::string::npos);
    EXPECT_NE(long_digits.out.find("0.86602540378443864676"), std::string::npos);
    EXPECT_EQ(bad.code, cli::kUsage);
}

TEST(Cli, Selftest) {
    auto r = run_cli({"selftest"});
    EXPECT_EQ(r.code, 0) << r.out;
    auto d = Json::parse(r.out)["data"];
    EXPECT_EQ(d["failed"], 0);
    EXPECT_EQ(d["suites"].size(), 8u);
}
