// Copyright 2026 The qsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <json.hpp>

#include "analysis_document.hpp"
#include "cli_app.hpp"

namespace qsep::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qsep");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("qsep_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string gen(std::vector<std::string> spec, const std::string& name) {
    spec.insert(spec.begin(), "gen");
    spec.push_back("-o");
    spec.push_back(path(name));
    const Result r = invoke(spec);
    EXPECT_EQ(r.code, kExitOk) << r.err;
    return path(name);
  }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

const CriterionEntry& find(const std::vector<CriterionEntry>& v, const std::string& id) {
  for (const auto& c : v)
    if (c.id == id) return c;
  throw std::runtime_error("missing criterion " + id);
}

TEST(AnalysisDocumentTest, JsonRoundTrip) {
  AnalysisDocument doc;
  doc.state = "sample";
  doc.dim_a = 3;
  doc.dim_b = 4;
  doc.criteria = {{"PPT", 1.0000000000000002, 1.0, 2.2e-16, false, "ok"},
                  {"CCNR", 1.0314682038798537, 1.0, 0.0314682038798537, true, "ok"},
                  {"CM_HS", std::nan(""), 4.0, std::nan(""), false, "numerical"}};
  doc.measures = {{"CONCURRENCE", "LOWER_BOUND", "CAF", 0.0, -0.123456789012345, false}};
  doc.fnf = FnfSummary{12, true, 2.279e-10, {{"CM_TRACE", 4.57506522862, 4.24, 0.33, true, "ok"}}, {}};
  doc.tool_version = "0.1.0";
  doc.timestamp = "2026-01-01T00:00:00Z";
  const AnalysisDocument back = parse_json(to_json(doc));
  EXPECT_TRUE(std::isnan(back.criteria[2].value));
  doc.criteria.pop_back();
  AnalysisDocument trimmed = back;
  trimmed.criteria.pop_back();
  EXPECT_EQ(trimmed, doc);
  EXPECT_EQ(to_json(parse_json(to_json(doc))), to_json(doc));
}

TEST(AnalysisDocumentTest, NumbersKeepTwelveDigits) {
  for (double x : {0.1, 1.0 / 3.0, 4.34279584774594, 1e-300, 123456789.123456789}) {
    EXPECT_EQ(std::stod(format_number(x)), x);
  }
}

TEST_F(CliTest, GenIsDeterministic) {
  const std::string a = gen({"random-separable", "3", "3", "--terms", "10", "--seed", "7"}, "a.json");
  const std::string b = gen({"random-separable", "3", "3", "--terms", "10", "--seed", "7"}, "b.json");
  EXPECT_EQ(slurp(a), slurp(b));
  const auto j = nlohmann::json::parse(slurp(a));
  EXPECT_EQ(j.at("dim_a"), 3);
  EXPECT_EQ(j.at("seed"), 7);
  EXPECT_EQ(j.at("matrix").size(), 9u);
}

TEST_F(CliTest, GenToStdout) {
  const Result r = invoke({"gen", "maxent", "2"});
  ASSERT_EQ(r.code, kExitOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_DOUBLE_EQ(j.at("matrix")[0][3][0].get<double>(), 0.5);
}

TEST_F(CliTest, AnalyzeGenTiles2) {
  const std::string file = gen({"gentiles2", "3", "4"}, "gt.json");
  const Result r = invoke({"analyze", file, "--fnf", "--fnf-eps", "1e-10", "--bounds", "--format",
                           "json", "--deterministic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const AnalysisDocument doc = parse_json(r.out);
  EXPECT_EQ(doc.dim_a, 3);
  EXPECT_FALSE(doc.timestamp.has_value());
  EXPECT_NEAR(find(doc.criteria, "PPT").value, 1.0, 1e-8);
  EXPECT_NEAR(find(doc.criteria, "CCNR").value, 1.0315, 5e-4);
  EXPECT_NEAR(find(doc.criteria, "CM_TRACE").value, 4.3428, 5e-4);
  ASSERT_TRUE(doc.fnf.has_value());
  EXPECT_TRUE(doc.fnf->converged);
  EXPECT_NEAR(find(doc.fnf->criteria, "CM_TRACE").value, 4.5751, 5e-4);
  EXPECT_NEAR(find(doc.fnf->criteria, "CCNR").value, 1.0512, 5e-4);
  bool saw_caf = false, saw_cm = false;
  for (const auto& m : doc.fnf->measures) {
    if (m.source == "CAF") {
      saw_caf = true;
      EXPECT_NEAR(m.value, 0.0296, 5e-4);
    }
    if (m.source == "CM_TRACE_BOUND") {
      saw_cm = true;
      EXPECT_NEAR(m.value, 0.0320, 5e-4);
    }
  }
  EXPECT_TRUE(saw_caf && saw_cm);
}

TEST_F(CliTest, DeterministicOutputIsByteIdentical) {
  const std::string file = gen({"random-mixed", "3", "3", "--rank", "4", "--seed", "3"}, "m.json");
  for (const char* fmt : {"text", "json", "csv"}) {
    const Result a = invoke({"analyze", file, "--fnf", "--bounds", "--format", fmt, "--deterministic"});
    const Result b = invoke({"analyze", file, "--fnf", "--bounds", "--format", fmt, "--deterministic"});
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out) << fmt;
  }
}

TEST_F(CliTest, CsvAndJsonCarryIdenticalNumbers) {
  const std::string file = gen({"gentiles2", "3", "4"}, "gt.json");
  const Result json = invoke({"analyze", file, "--bounds", "--format", "json", "--deterministic"});
  const Result csv = invoke({"analyze", file, "--bounds", "--format", "csv", "--deterministic"});
  ASSERT_EQ(json.code, kExitOk);
  ASSERT_EQ(csv.code, kExitOk);
  const AnalysisDocument doc = parse_json(json.out);
  std::istringstream lines(csv.out);
  std::string line;
  int matched = 0;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    for (std::string cell; std::getline(ss, cell, ',');) cells.push_back(cell);
    if (cells.size() < 5 || cells[0] != "criteria") continue;
    EXPECT_EQ(std::stod(cells[4]), find(doc.criteria, cells[1]).value) << cells[1];
    ++matched;
  }
  EXPECT_EQ(matched, 4);
}

TEST_F(CliTest, BoundsOnBellAndMixed) {
  const std::string bell = gen({"maxent", "2"}, "bell.json");
  const Result r = invoke({"bounds", bell, "--format", "json", "--deterministic"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const AnalysisDocument doc = parse_json(r.out);
  EXPECT_TRUE(doc.criteria.empty());
  EXPECT_EQ(doc.measures.size(), 10u);
  for (const auto& m : doc.measures) EXPECT_NEAR(m.value, 1.0, 1e-9) << m.source;

  const std::string mixed = gen({"mixed", "3", "4"}, "mixed.json");
  const AnalysisDocument md =
      parse_json(invoke({"bounds", mixed, "--format", "json", "--deterministic"}).out);
  for (const auto& m : md.measures) {
    if (m.kind == "LOWER_BOUND") EXPECT_EQ(m.value, 0.0);
    if (m.kind == "UPPER_BOUND") EXPECT_NEAR(m.value, 4.0 / 3.0, 1e-12);
  }
  const AnalysisDocument ad =
      parse_json(invoke({"analyze", mixed, "--format", "json", "--deterministic"}).out);
  for (const auto& c : ad.criteria) EXPECT_FALSE(c.entangled);
}

TEST_F(CliTest, SweepNoise) {
  const std::string gt = gen({"gentiles2", "3", "4"}, "gt.json");
  const Result r = invoke({"sweep-noise", gt, "--fnf", "--criterion", "all", "--bisect-tol",
                           "1e-12", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  std::map<std::string, nlohmann::json> by_id;
  for (const auto& row : j.at("sweep")) by_id[row.at("criterion")] = row;
  EXPECT_NEAR(by_id["CM_TRACE"].at("threshold").get<double>(), 0.9274, 5e-4);
  EXPECT_NEAR(by_id["CCNR"].at("threshold").get<double>(), 0.9330, 5e-4);
  EXPECT_FALSE(by_id["PPT"].at("detected").get<bool>());

  const std::string bell = gen({"maxent", "2"}, "bell.json");
  const Result b = invoke({"sweep-noise", bell, "--criterion", "cm", "--format", "csv"});
  ASSERT_EQ(b.code, kExitOk);
  EXPECT_NE(b.out.find("CM_TRACE,true,0.33333"), std::string::npos) << b.out;

  const std::string sep = gen({"random-separable", "3", "3", "--terms", "10", "--seed", "7"}, "s.json");
  const Result s = invoke({"sweep-noise", sep});
  ASSERT_EQ(s.code, kExitOk);
  EXPECT_EQ(s.out.find("true"), std::string::npos) << s.out;
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(invoke({}).code, kExitUsage);
  EXPECT_EQ(invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "gentiles2", "2", "4"}).code, kExitUsage);
  EXPECT_EQ(invoke({"gen", "nonsense", "3"}).code, kExitUsage);
  EXPECT_EQ(invoke({"analyze", path("missing.json")}).code, kExitUsage);

  std::ofstream(path("bad.json")) << "{ not json";
  const Result bad = invoke({"analyze", path("bad.json")});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_FALSE(bad.err.empty());

  std::ofstream(path("pure.json"))
      << R"({"dim_a":2,"dim_b":2,"matrix":[[[1,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]],)"
      << R"([[0,0],[0,0],[0,0],[0,0]],[[0,0],[0,0],[0,0],[0,0]]]})";
  EXPECT_EQ(invoke({"analyze", path("pure.json")}).code, kExitOk);
  EXPECT_EQ(invoke({"analyze", path("pure.json"), "--fnf"}).code, kExitNumerical);
  EXPECT_EQ(invoke({"analyze", path("pure.json"), "--format", "xml"}).code, kExitUsage);
}

}  // namespace
}  // namespace qsep::cli
