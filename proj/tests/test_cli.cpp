#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"
#include "monideal/graph.hpp"
#include "monideal/graph_ideals.hpp"
#include "monideal/ideal_io.hpp"

using namespace monideal;
using nlohmann::json;

namespace {

const std::string kData = MONIDEAL_TEST_DATA;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args, int* code = nullptr) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  if (code) *code = r.code;
  return json::parse(r.out);
}

MonomialIdeal parse_out(const Run& r) { return parse_ideal(r.out); }

}  // namespace

TEST(CliIdeal, PowerListing) {
  const auto r = run({"ideal", "power", "--in", kData + "/I.txt", "--t", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto I = read_ideal_file(kData + "/I.txt");
  EXPECT_EQ(parse_out(r), power(I, 3));
  EXPECT_EQ(r.out, format_ideal(power(I, 3)));
}

TEST(CliIdeal, DualOfCycleNeighbourhoods) {
  const auto r = run({"ideal", "dual", "--in", kData + "/ni_c4.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_out(r), di_ideal(cycle(4)));
}

TEST(CliIdeal, ClosureAddsMixedTerm) {
  const auto r = run({"ideal", "closure", "--in", kData + "/x2y2.txt"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "vars: x y\nx^2\nx*y\ny^2\n");
}

TEST(CliIdeal, BinaryOpsAndColon) {
  const std::string a = kData + "/I.txt";
  const auto I = read_ideal_file(a);
  EXPECT_EQ(parse_out(run({"ideal", "sum", "--in", a, "--in2", a})), I);
  EXPECT_EQ(parse_out(run({"ideal", "product", "--in", a, "--in2", a})), power(I, 2));
  EXPECT_EQ(parse_out(run({"ideal", "intersect", "--in", a, "--in2", a})), I);
  EXPECT_EQ(parse_out(run({"ideal", "colon", "--in", a, "--mono", "x3"})),
            colon(I, Monomial{0, 0, 1}));
  EXPECT_EQ(run({"ideal", "sum", "--in", a}).code, 4);
}

TEST(CliIdeal, ParseErrorsReportPosition) {
  const auto r = run({"ideal", "closure", "--in", kData + "/bad.txt"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("line 3, column 3"), std::string::npos) << r.err;
  EXPECT_EQ(run({"ideal", "closure", "--in", kData + "/missing.txt"}).code, 4);
}

TEST(CliGraph, Outputs) {
  auto r = run({"graph", "K2,3", "--out", "ni"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_out(r).size(), 5U);
  r = run({"graph", "C5", "--out", "di"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_out(r), di_ideal(cycle(5)));
  EXPECT_EQ(parse_out(r).size(), 5U);
  EXPECT_NE(r.out.find("cross-check"), std::string::npos);
  r = run({"graph", kData + "/c5.json", "--out", "domsets"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{1,3}\n{1,4}\n{2,4}\n{2,5}\n{3,5}\n");
  r = run({"graph", "C5", "--out", "jt", "--t", "2"});
  EXPECT_EQ(parse_out(r), di_ideal(cycle(5)));
}

TEST(CliGraph, WheelValidation) {
  auto r = run({"graph", "wheel:1,5,[1,3,5]", "--out", "ni"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.err.find("condition (4) violated"), std::string::npos) << r.err;
  r = run({"graph", "wheel:1,5,[1,2,3]", "--out", "di"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(run({"graph", "P7", "--out", "ni"}).code, 4);
  EXPECT_EQ(run({"graph", "C5", "--out", "xx"}).code, 4);
}

TEST(CliCheck, NormalVerdicts) {
  auto r = run({"check", "normal", "K2,2-ni"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("normal (bound n-1=3 covered)"), std::string::npos) << r.out;
  r = run({"check", "normal", kData + "/x2y2.txt"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("x*y"), std::string::npos);
  r = run({"check", "normal", "C5-di", "--bound", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verified up to t=2"), std::string::npos) << r.out;
  r = run({"check", "integrally-closed", kData + "/x2y2.txt"});
  EXPECT_EQ(r.code, 1);
}

TEST(CliCheck, AssProfileOfBipartiteNeighbourhoodIdeal) {
  int code = -1;
  const auto j = run_json({"check", "ass", "K2,3-ni", "--bound", "3"}, &code);
  EXPECT_EQ(code, 0);
  const auto& per = j["verdict"]["per_power"];
  ASSERT_EQ(per.size(), 3U);
  EXPECT_FALSE(per[0]["maximal_ideal_associated"].get<bool>());
  EXPECT_FALSE(per[1]["maximal_ideal_associated"].get<bool>());
  EXPECT_TRUE(per[2]["maximal_ideal_associated"].get<bool>());
  EXPECT_EQ(j["verdict"]["depth_zero_onset"], 3);
}

TEST(CliCheck, PropertyExitCodes) {
  EXPECT_EQ(run({"check", "ntf", "K2,3-ni", "--bound", "3"}).code, 1);
  EXPECT_EQ(run({"check", "nntf", "K2,2-di"}).code, 0);
  EXPECT_EQ(run({"check", "strong-persistence", "C5-di"}).code, 0);
  EXPECT_EQ(run({"check", "persistence", "K2,3-ni"}).code, 0);
  EXPECT_EQ(run({"check", "ssp", "C5-di", "--bound", "3"}).code, 0);
  // SSP is only defined for squarefree ideals.
  EXPECT_EQ(run({"check", "ssp", kData + "/x2y2.txt"}).code, 2);
  EXPECT_EQ(run({"check", "bogus", "C5-di"}).code, 4);
}

TEST(CliCheck, CriterionVerdicts) {
  EXPECT_EQ(run({"check", "criterion", "meet-power", "--I", kData + "/ni_c4.txt", "--ell", "2"}).code,
            0);
  // (x^2, y^2) is not normal: a hypothesis fails, so the kind does not apply.
  const auto r = run({"check", "criterion", "add-monomial", "--I", kData + "/x2y2.txt", "--H",
                      kData + "/x2y2.txt", "--monomial", "1"});
  EXPECT_EQ(r.code, 2) << r.out << r.err;
  EXPECT_EQ(run({"check", "criterion", "no-such-kind", "--I", kData + "/I.txt"}).code, 4);
}

TEST(CliCheck, TimeoutGivesPartialEvidence) {
  int code = -1;
  const auto j = run_json({"--timeout-sec", "0.000001", "check", "normal", "C7-di"}, &code);
  EXPECT_EQ(code, 3);
  EXPECT_EQ(j["status"], "timeout");
  EXPECT_EQ(j["exit_code"], 3);
}

TEST(CliReport, JsonAndTextAgree) {
  const std::vector<std::vector<std::string>> cmds{
      {"check", "normal", "K2,2-ni"},       {"check", "normal", kData + "/x2y2.txt"},
      {"check", "ntf", "K2,3-ni", "--bound", "3"}, {"check", "nntf", "K2,2-di"},
      {"graph", "C5", "--out", "di"},       {"ideal", "closure", "--in", kData + "/x2y2.txt"}};
  for (const auto& c : cmds) {
    const auto text = run(c);
    int code = -1;
    const auto j = run_json(c, &code);
    EXPECT_EQ(text.code, code);
    EXPECT_EQ(j["exit_code"], code);
    EXPECT_EQ(j["schema"], 1);
    if (j.contains("verdict") && j["verdict"].is_object()) {
      const auto& v = j["verdict"];
      if (v.contains("normal")) {
        EXPECT_EQ(v["normal"].get<bool>(), text.out.find("not normal") == std::string::npos);
      }
      if (v.contains("holds")) {
        EXPECT_EQ(v["holds"].get<bool>(), text.out.find("holds") != std::string::npos);
      }
    }
  }
}

TEST(CliReport, DeterministicApartFromTimings) {
  auto a = run_json({"check", "nntf", "K2,3-di"});
  auto b = run_json({"check", "nntf", "K2,3-di"});
  a.erase("timing_ms");
  b.erase("timing_ms");
  EXPECT_EQ(a, b);
}

TEST(CliReport, WritesReportFile) {
  const std::string path = ::testing::TempDir() + "monideal_report.json";
  const auto r = run({"--report", path, "check", "normal", "C4-di"});
  EXPECT_EQ(r.code, 0);
  std::ifstream f(path);
  ASSERT_TRUE(f);
  const auto j = json::parse(f);
  EXPECT_EQ(j["status"], "verified");
  EXPECT_TRUE(j["verdict"]["normal"].get<bool>());
  std::remove(path.c_str());
}
