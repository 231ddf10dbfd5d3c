#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qhpp/cli/cli.hpp"
#include "qhpp/cli/report_io.hpp"
#include "qhpp/cli/sweep.hpp"
#include "qhpp/cli/verify.hpp"

namespace qhpp::cli {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string l; std::getline(is, l);) out.push_back(l);
    return out;
}

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("qhpp_test_" + name);
}

TEST(CliEval, Examples) {
    auto r = run_cli({"eval", "3", "2", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_EQ(lines(r.out).at(0), "7/3, |w|=7, d=(3/7,2/7,1/7)");
    r = run_cli({"eval", "2"});
    EXPECT_EQ(lines(r.out).at(0), "2/1, |w|=2, d=(0)");
    r = run_cli({"eval", "1", "2"});
    EXPECT_EQ(r.code, kExitUsage);
    EXPECT_FALSE(r.err.empty());
    EXPECT_EQ(run_cli({"eval", "x"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"eval"}).code, kExitUsage);
}

TEST(CliExpand, Examples) {
    EXPECT_EQ(run_cli({"expand", "31", "19"}).out, "[2,3,4,2]\n");
    EXPECT_EQ(run_cli({"expand", "6", "4"}).code, kExitUsage);
}

TEST(CliKollar, Examples) {
    auto r = run_cli({"kollar", "4", "4", "4", "5"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("w=(64,63,67,51), d=319"), std::string::npos);
    EXPECT_NE(r.out.find("types 1/188(1,153), 1/205(1,158)"), std::string::npos);
    EXPECT_NE(r.out.find("[2,2,2,2,4,4,2,2,2]"), std::string::npos);
    r = run_cli({"kollar", "2", "2", "2", "2"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("w*=5; singularity types not applicable"), std::string::npos);
    EXPECT_EQ(run_cli({"kollar", "2", "2", "2"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"kollar", "1", "2", "2", "2"}).code, kExitUsage);
}

TEST(CliFamily, TextOutput) {
    auto r = run_cli({"family", "T", "3", "3", "3", "3"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("k_class=NumericallyTrivial"), std::string::npos);
    r = run_cli({"family", "S3", "6"});
    EXPECT_NE(r.out.find("k_class=Ample"), std::string::npos);
    EXPECT_NE(r.out.find("k_value=1/47"), std::string::npos);
    EXPECT_EQ(r.out.find("k_value~"), std::string::npos);
    r = run_cli({"family", "S3", "6", "--decimal"});
    EXPECT_NE(r.out.find("k_value~0.021277"), std::string::npos);
}

TEST(CliFamily, JsonRecord) {
    const auto r = run_cli({"family", "S1", "3", "--json"});
    ASSERT_EQ(r.code, kExitOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("family"), "S1");
    EXPECT_EQ(j.at("params"), nlohmann::json::array({3}));
    const auto& s = j.at("singularities").at(0);
    EXPECT_EQ(s.at("q"), 139);
    const int q1 = s.at("q1");
    EXPECT_TRUE(q1 == 55 || (q1 * 55) % 139 == 1);
    EXPECT_EQ(j.at("k_value").at("num"), 18);
    EXPECT_EQ(j.at("k_value").at("den"), 139);
    EXPECT_EQ(j.at("rho"), 1);

    const auto back = record_from_json(j);
    EXPECT_EQ(to_json(back), j);
}

TEST(CliFamily, GraphFiles) {
    const auto dot = temp_file("t.dot"), text = temp_file("t.txt");
    ASSERT_EQ(run_cli({"family", "T", "2", "2", "2", "2", "--graph", dot.string()}).code, kExitOk);
    std::ifstream d(dot);
    std::string content((std::istreambuf_iterator<char>(d)), {});
    EXPECT_EQ(content.rfind("graph \"T\" {", 0), 0u);
    ASSERT_EQ(run_cli({"family", "T", "2", "2", "2", "2", "--graph", text.string(), "--graph-format", "text"}).code,
              kExitOk);
    std::ifstream t(text);
    std::string first;
    std::getline(t, first);
    EXPECT_EQ(first, "L1 -2");
    EXPECT_EQ(run_cli({"family", "T", "2", "2", "2", "2", "--graph", text.string(), "--graph-format", "png"}).code,
              kExitUsage);
    std::filesystem::remove(dot);
    std::filesystem::remove(text);
}

TEST(CliFamily, Errors) {
    EXPECT_EQ(run_cli({"family", "Q", "3"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"family", "S1", "1"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"family", "S1", "3", "4"}).code, kExitUsage);
    EXPECT_EQ(run_cli({}).code, kExitUsage);
    EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
}

TEST(CliSweep, CsvRowsAndOrder) {
    const auto r = run_cli({"sweep", "T", "2..4", "2..4", "2..4", "2..4", "--format", "csv"});
    ASSERT_EQ(r.code, kExitOk);
    const auto ls = lines(r.out);
    ASSERT_EQ(ls.size(), 82u);
    EXPECT_EQ(ls[0], "a1,a2,a3,a4,orders,rho,k_class,k_value\r");
    EXPECT_EQ(ls[1].rfind("2,2,2,2,", 0), 0u);
    EXPECT_EQ(ls[2].rfind("2,2,2,3,", 0), 0u);
    EXPECT_EQ(ls[81].rfind("4,4,4,4,", 0), 0u);
}

TEST(CliSweep, S3AndS1Rows) {
    auto r = run_cli({"sweep", "S3", "2..12"});
    ASSERT_EQ(r.code, kExitOk);
    const auto ls = lines(r.out);
    EXPECT_EQ(ls.at(4), "5,2 7 63,1,NumericallyTrivial,0\r");
    r = run_cli({"sweep", "S1", "2..12", "--format", "json", "--threads", "3"});
    const auto j = nlohmann::json::parse(r.out);
    ASSERT_EQ(j.size(), 11u);
    for (const auto& row : j) EXPECT_EQ(row.at("rho"), 1);
}

TEST(CliSweep, DeterministicAcrossThreadCounts) {
    const auto one = run_cli({"sweep", "V", "2..5", "0..4", "--threads", "1", "--format", "markdown"});
    const auto four = run_cli({"sweep", "V", "2..5", "0..4", "--threads", "4", "--format", "markdown"});
    ASSERT_EQ(one.code, kExitOk);
    EXPECT_EQ(one.out, four.out);
    EXPECT_EQ(lines(one.out).at(0), "| b | c | orders | rho | k_class | k_value |");
}

TEST(CliSweep, OutputFileAndDecimal) {
    const auto path = temp_file("sweep.csv");
    ASSERT_EQ(run_cli({"sweep", "S3", "6", "--decimal", "--output", path.string()}).code, kExitOk);
    std::ifstream f(path, std::ios::binary);
    std::string content((std::istreambuf_iterator<char>(f)), {});
    EXPECT_EQ(content, "b,orders,rho,k_class,k_value,k_value_approx\r\n6,2 7 94,1,Ample,1/47,~0.021277\r\n");
    std::filesystem::remove(path);
}

TEST(CliSweep, Errors) {
    EXPECT_EQ(run_cli({"sweep", "T", "2..4"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "S1", "4..2"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "S1", "1..3"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "S1", "2..x"}).code, kExitUsage);
    EXPECT_EQ(run_cli({"sweep", "S1", "2..3", "--format", "xml"}).code, kExitUsage);
}

TEST(SweepSpec, RangesAndTuples) {
    EXPECT_EQ(parse_range("3").lo, 3);
    EXPECT_EQ(parse_range("2..5").hi, 5);
    EXPECT_THROW(parse_range(".."), std::invalid_argument);
    EXPECT_THROW(parse_range("2..3..4"), std::invalid_argument);
    SweepSpec spec;
    spec.family = FamilyId::V;
    spec.ranges = {{2, 3}, {0, 1}};
    const auto t = sweep_tuples(spec);
    EXPECT_EQ(t, (std::vector<std::vector<std::int64_t>>{{2, 0}, {2, 1}, {3, 0}, {3, 1}}));
}

TEST(ReportIo, CsvQuoting) {
    EXPECT_EQ(csv_field("plain"), "plain");
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(ReportIo, RejectsInconsistentRecord) {
    auto j = nlohmann::json::parse(run_cli({"family", "S3", "6", "--json"}).out);
    j["k_class"] = "AntiAmple";
    EXPECT_THROW(record_from_json(j), std::invalid_argument);
}

TEST(CliVerify, SuitesPass) {
    for (const char* suite : {"hjcf", "kollar"}) {
        const auto r = run_cli({"verify", suite});
        EXPECT_EQ(r.code, kExitOk) << r.out;
        EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    }
    const auto k = run_cli({"verify", "kollar"});
    EXPECT_NE(k.out.find("tuples with w*=1"), std::string::npos);
    EXPECT_EQ(run_cli({"verify", "nope"}).code, kExitUsage);
}

TEST(CliVerify, PrintResultsFailureShape) {
    std::ostringstream os;
    const bool ok = print_results(os, {{"a", true, 3, ""}, {"b", false, 2, "(1,2)"}});
    EXPECT_FALSE(ok);
    EXPECT_EQ(os.str(), "PASS a [3 cases]\nFAIL b [2 cases]: counterexample (1,2)\nFAILED 1/2 checks passed\n");
}

TEST(CliVerify, AllExitsZero) { EXPECT_EQ(run_cli({"verify", "all"}).code, kExitOk); }

TEST(Cli, HelpExitsZero) {
    const auto r = run_cli({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("sweep"), std::string::npos);
}

}  // namespace
}  // namespace qhpp::cli
