// Copyright 2026 The geolaw Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "geolaw/cli.hpp"
#include "geolaw/report.hpp"

namespace geolaw::cli {
namespace {

namespace fs = std::filesystem;

const std::string kFixtures = GEOLAW_FIXTURES;
const std::string kCli = GEOLAW_CLI;

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("geolaw_test_cli_" + name);
  fs::remove_all(p);
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int shell(const std::string& args) {
  const int status = std::system((kCli + " " + args + " >/dev/null 2>&1").c_str());
  return WEXITSTATUS(status);
}

TEST(CliTest, QuantitySeriesOnSmallCorpus) {
  AnalyzeArgs args;
  args.inputs = {kFixtures + "/abc.conll"};
  args.dims = {Dimension::quantity};
  args.out = scratch("abc").string();
  std::stringstream err;
  // Three points are too few for any family, yet outputs are still written.
  EXPECT_EQ(cmd_analyze(args, err), kFitFailure);
  const Json report = Json::parse(slurp(fs::path(args.out) / "report.json"));
  const auto& pts = report.at("views").at(0).at("points");
  ASSERT_EQ(pts.size(), 3u);
  const double want[3][2] = {{1, 0.6}, {2, 0.2}, {3, 0.2}};
  for (int i = 0; i < 3; ++i) {
    EXPECT_EQ(pts[i][0].get<double>(), want[i][0]);
    EXPECT_NEAR(pts[i][1].get<double>(), want[i][1], 1e-15);
  }
  EXPECT_TRUE(fs::exists(fs::path(args.out) / "QuantityFreqRank.csv"));
  EXPECT_TRUE(fs::exists(fs::path(args.out) / "bins_quantity.csv"));
}

TEST(CliTest, MissingInputWritesNothing) {
  const fs::path out = scratch("missing");
  EXPECT_EQ(shell("analyze " + kFixtures + "/nope.conll --out " + out.string()), kInputError);
  EXPECT_TRUE(!fs::exists(out) || fs::is_empty(out));
}

TEST(CliTest, ParseErrorNamesFileAndLine) {
  AnalyzeArgs args;
  args.inputs = {kFixtures + "/bad_stray.conll"};
  args.strict = true;
  args.out = scratch("stray").string();
  std::stringstream err;
  EXPECT_EQ(cmd_analyze(args, err), kInputError);
  EXPECT_NE(err.str().find("bad_stray.conll"), std::string::npos);
  EXPECT_NE(err.str().find("at line"), std::string::npos);
}

TEST(CliTest, NoEntityPairs) {
  const fs::path out = scratch("single");
  EXPECT_EQ(shell("analyze " + kFixtures + "/single_span_docs.conll --dims distance --out " +
                  out.string()),
            kEmptyDimension);
}

TEST(CliTest, FullAnalysisSucceeds) {
  const fs::path out = scratch("toy12");
  EXPECT_EQ(shell("analyze " + kFixtures + "/toy12.conll --cutoff --out " + out.string()), kOk);
  for (const char* f : {"report.json", "FreqDistance.csv", "FreqDistance_plot.csv",
                        "bins_distance.csv", "bins_length.csv"}) {
    EXPECT_TRUE(fs::exists(out / f)) << f;
  }
  const auto table = [&] {
    std::ifstream in(out / "FreqDistance_plot.csv");
    return read_xy_csv(in);
  }();
  EXPECT_EQ(table.x.size(), 6u);
}

TEST(CliTest, PerFileOutputs) {
  const fs::path out = scratch("perfile");
  EXPECT_EQ(shell("analyze " + kFixtures + "/toy12.conll " + kFixtures +
                  "/abc.conll --dims quantity --per-file --out " + out.string()),
            kFitFailure);
  EXPECT_TRUE(fs::exists(out / "report.json"));
  EXPECT_TRUE(fs::exists(out / "0_toy12" / "report.json"));
  EXPECT_TRUE(fs::exists(out / "1_abc" / "report.json"));
}

TEST(CliTest, SimulateAlwaysSucceeds) {
  const fs::path out = scratch("p1");
  EXPECT_EQ(shell("simulate --p 1 --tokens 100 --out " + out.string()), kOk);
  EXPECT_EQ(slurp(out / "gaps.csv"), "gap,count\n0,100\n");
}

TEST(CliTest, SimulateRejectsBadProbability) {
  EXPECT_EQ(shell("simulate --p 0 --tokens 100 --out " + scratch("p0").string()), kInputError);
  EXPECT_EQ(shell("simulate --p 1.5 --tokens 100 --out " + scratch("p15").string()),
            kInputError);
}

TEST(CliTest, Deterministic) {
  const fs::path a = scratch("det_a"), b = scratch("det_b");
  ASSERT_EQ(shell("simulate --p 0.05 --tokens 1000000 --seed 7 --out " + a.string()), kOk);
  ASSERT_EQ(shell("simulate --p 0.05 --tokens 1000000 --seed 7 --out " + b.string()), kOk);
  EXPECT_EQ(slurp(a / "gaps.csv"), slurp(b / "gaps.csv"));
  EXPECT_EQ(slurp(a / "verdict.json"), slurp(b / "verdict.json"));
  const std::string in = kFixtures + "/toy12.conll --cutoff --out ";
  ASSERT_EQ(shell("analyze " + in + a.string()), kOk);
  ASSERT_EQ(shell("analyze " + in + b.string()), kOk);
  for (const auto& e : fs::directory_iterator(a)) {
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path();
  }
}

TEST(CliTest, ThreadCountDoesNotChangeOutput) {
  const fs::path a = scratch("thr_a"), b = scratch("thr_b");
  const std::string cmd = " " + kCli + " simulate --p 0.1 --tokens 500000 --out ";
  ASSERT_EQ(WEXITSTATUS(std::system(("GEOLAW_THREADS=1" + cmd + a.string()).c_str())), 0);
  ASSERT_EQ(WEXITSTATUS(std::system(("GEOLAW_THREADS=4" + cmd + b.string()).c_str())), 0);
  EXPECT_EQ(slurp(a / "gaps.csv"), slurp(b / "gaps.csv"));
}

TEST(CliTest, LargeSimulationMatchesGeometric) {
  SimulateArgs args;
  args.p = 0.01;
  args.tokens = 100000000;
  args.out = scratch("large").string();
  std::stringstream err;
  ASSERT_EQ(cmd_simulate(args, err), kOk);
  const Json v = Json::parse(slurp(fs::path(args.out) / "verdict.json"));
  EXPECT_LT(v.at("kl_vs_geometric").get<double>(), 1e-3);
  EXPECT_NEAR(v.at("fitted_rate").get<double>(), -std::log(0.99), 0.05 * -std::log(0.99));
}

void write_csv(const fs::path& p, int n, double (*f)(double)) {
  std::ofstream out(p);
  out << "x,y\n";
  for (int i = 1; i <= n; ++i) out << format_double(i) << "," << format_double(f(i)) << "\n";
}

TEST(CliTest, FitRecoversParameters) {
  const fs::path dir = scratch("fit");
  fs::create_directories(dir);
  write_csv(dir / "gamma.csv", 40, [](double x) { return 0.4 * std::pow(x, 1.5) * std::exp(-0.2 * x); });
  FitArgs args;
  args.series = (dir / "gamma.csv").string();
  args.family = "gamma";
  std::stringstream out, err;
  ASSERT_EQ(cmd_fit(args, out, err), kOk);
  const Json j = Json::parse(out.str());
  EXPECT_NEAR(j.at("params").at("c").get<double>(), 0.4, 1e-6);
  EXPECT_NEAR(j.at("params").at("a").get<double>(), 1.5, 1e-6);
  EXPECT_NEAR(j.at("params").at("b").get<double>(), -0.2, 1e-6);

  write_csv(dir / "zipf.csv", 30, [](double x) { return 2.0 / std::pow(x, 1.1); });
  args.series = (dir / "zipf.csv").string();
  args.family = "all";
  std::stringstream out2;
  ASSERT_EQ(cmd_fit(args, out2, err), kOk);
  bool seen = false;
  for (const auto& f : Json::parse(out2.str())) {
    if (f.at("family") == "zipf") {
      seen = true;
      EXPECT_NEAR(f.at("metrics").at("r_squared").get<double>(), 1.0, 1e-9);
    }
  }
  EXPECT_TRUE(seen);
}

TEST(CliTest, FitInputErrors) {
  const fs::path dir = scratch("fiterr");
  fs::create_directories(dir);
  write_csv(dir / "short.csv", 3, [](double x) { return x; });
  EXPECT_EQ(shell("fit --series " + (dir / "short.csv").string()), kEmptyDimension);
  std::ofstream(dir / "bad.csv") << "x,y\n1,zz\n";
  EXPECT_EQ(shell("fit --series " + (dir / "bad.csv").string()), kInputError);
  EXPECT_EQ(shell("fit --series " + (dir / "absent.csv").string()), kInputError);
}

}  // namespace
}  // namespace geolaw::cli
