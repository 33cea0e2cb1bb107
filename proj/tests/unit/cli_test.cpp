// Copyright 2026 The mmbox Authors
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

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mmbox/cli/cli.hpp"
#include "mmbox/core/serialization.hpp"
#include "mmbox/modelgeom/bounds.hpp"
#include "oracles.hpp"

namespace mmbox::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct CliRun {
  int code = 0;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "mmbox");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.emplace_back("--format=json");
  const CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return json::parse(r.out);
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mmbox_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string two_atom(const std::string& name, double d) {
    const auto path = dir_ / name;
    write_space(FiniteMMSpace::uniform(DistanceMatrix::from_rows({{0, d}, {d, 0}})), path);
    return path.string();
  }
  std::string text(const std::string& name, const std::string& body) {
    const auto path = dir_ / name;
    std::ofstream(path) << body;
    return path.string();
  }
  fs::path dir_;
};

TEST(CliBounds, SpecialOrthogonalGap) {
  const auto j = run_json({"bounds", "so", "--n", "4", "--m", "3"});
  ASSERT_FALSE(j["rows"].empty());
  EXPECT_EQ(j["rows"][0]["section"], "grid");
  EXPECT_EQ(j["rows"][0]["value"], 0.5);
}

TEST(CliBounds, SphereGridAndNotApplicable) {
  const auto j = run_json({"bounds", "sphere", "--m", "2,5", "--n", "10,5"});
  bool saw_value = false;
  bool saw_na = false;
  for (const auto& row : j["rows"]) {
    if (row["section"] != "grid") continue;
    if (row["m"] == 2 && row["n"] == 10) {
      EXPECT_NEAR(row["value"].get<double>(), modelgeom::hyouka_max_c(2, 10, 1.0, 1.0).c, 1e-12);
      saw_value = true;
    }
    if (row["m"] == 5 && row["n"] == 5) {
      EXPECT_EQ(row["status"], "not-applicable");
      saw_na = true;
    }
  }
  EXPECT_TRUE(saw_value);
  EXPECT_TRUE(saw_na);
}

TEST_F(CliFiles, BoxTwoAtomFiles) {
  const auto a = two_atom("a.json", 1.0);
  const auto b = two_atom("b.json", 0.4);
  const auto j = run_json({"box", "--x", a, "--y", b, "--mode", "exact", "--lambda", "1"});
  EXPECT_NEAR(j["rows"][0]["upper"].get<double>(), 0.5, 1e-12);
  const auto same = run_json({"box", "--x", a, "--y", a});
  EXPECT_EQ(same["rows"][0]["upper"], 0.0);
}

TEST(CliBox, CodimOneCurve) {
  const auto j = run_json({"box", "--codim1", "sphere", "--n", "3,6", "--N", "150", "--seeds", "1"});
  EXPECT_EQ(j["rows"].size(), 2U);
}

TEST(CliBox, ExactSizeOverflowIsDistinctFromIo) {
  EXPECT_EQ(run({"box", "--x-sample", "sphere:2:20", "--y-sample", "sphere:2:20", "--mode", "exact"}).code,
            kExitSize);
  EXPECT_EQ(run({"box", "--x", "/nonexistent/x.json", "--y", "/nonexistent/y.json"}).code, kExitIo);
}

TEST(CliBox, SamplerSpecCounts) {
  const auto j = run_json({"box", "--x-sample", "hamming:3", "--y-sample", "hamming:2"});
  EXPECT_EQ(j["rows"][0]["atoms_x"], 8);
  EXPECT_EQ(j["rows"][0]["atoms_y"], 4);
  EXPECT_EQ(run({"box", "--x-sample", "sphere:3", "--y-sample", "hamming:2"}).code, kExitConfig);
}

TEST(CliConcentration, EmptyGridIsHeaderOnly) {
  const CliRun r = run({"concentration", "--n", "", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::vector<std::string> body;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') body.push_back(line);
  }
  ASSERT_EQ(body.size(), 1U);
  EXPECT_EQ(body[0].rfind("kind,n,", 0), 0U);
}

TEST(CliConcentration, HammingMatchesBinomialOracle) {
  const auto j = run_json({"concentration", "--kind", "hamming", "--n", "10", "--exhaustive",
                           "--kappa", "0.1"});
  ASSERT_EQ(j["rows"].size(), 1U);
  const auto& row = j["rows"][0];
  std::vector<double> values, masses;
  for (int k = 0; k <= 10; ++k) {
    values.push_back(k * 0.1);
    masses.push_back(oracle::binomial_mass(10, [k](int i) { return i == k; }));
  }
  const double expected = oracle::window_enumeration(values, masses, 0.1);
  EXPECT_NEAR(row["binomial_partial_diameter"].get<double>(), expected, 1e-12);
  EXPECT_NEAR(row["distance_function_partial_diameter"].get<double>(), expected, 1e-12);
  EXPECT_GE(row["observable_diameter"].get<double>(), expected - 1e-12);
}

std::string digits17(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

TEST(CliCertify, PassFailReject) {
  const std::string c = digits17(modelgeom::hyouka_max_c(2, 10, 1.0, 1.0).c);
  const auto pass = run_json({"certify", "--x", "sphere:10", "--y", "sphere:2", "--a", c, "--c", c});
  EXPECT_EQ(pass["rows"][0]["status"], "pass");
  EXPECT_EQ(digits17(pass["rows"][0]["bound"].get<double>()), c);

  const auto fail =
      run_json({"certify", "--x", "sphere:2", "--y", "sphere:2", "--a", "0.5", "--c", "0.5"});
  EXPECT_EQ(fail["rows"][0]["status"], "fail");
  EXPECT_TRUE(fail["rows"][0]["bound"].is_null());

  EXPECT_EQ(run({"certify", "--x", "sphere:2", "--y", "sphere:2", "--a", "0.5", "--c", "1"}).code,
            kExitConfig);
}

TEST_F(CliFiles, CertifyRefusesNonUniformSamples) {
  const auto path = (dir_ / "path.json").string();
  write_space(FiniteMMSpace::uniform(
                  DistanceMatrix::from_rows({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}})),
              path);
  const CliRun r = run({"certify", "--x", "file:" + path, "--y", "sphere:2", "--a", "1", "--c",
                     "0.1", "--format", "json"});
  EXPECT_EQ(r.code, kExitSize);
  EXPECT_EQ(json::parse(r.out)["rows"][0]["status"], "refused");
}

TEST_F(CliFiles, ConfigFileKeysAndErrors) {
  const auto good = text("good.cfg", "# grid\nn=4\nm=3\n\nformat=json\n");
  const auto j = json::parse(run({"bounds", "so", "--config", good}).out);
  EXPECT_EQ(j["config"]["n"], "4");
  EXPECT_EQ(j["rows"][0]["value"], 0.5);

  const auto flag_wins = json::parse(run({"bounds", "so", "--config", good, "--n", "10", "--m", "4"}).out);
  EXPECT_EQ(flag_wins["config"]["n"], "10");

  const auto bad = text("bad.cfg", "n=4\nbogus=1\n");
  EXPECT_EQ(run({"bounds", "so", "--config", bad}).code, kExitConfig);
  EXPECT_EQ(run({"bounds", "so", "--config", (dir_ / "missing.cfg").string()}).code, kExitIo);
  EXPECT_EQ(run({"bounds", "so", "--bogus"}).code, kExitConfig);
  EXPECT_EQ(run({"nosuchcommand"}).code, kExitConfig);
}

TEST_F(CliFiles, OutputReplaysByteIdentically) {
  for (const std::string format : {"csv", "json"}) {
    const auto first = (dir_ / ("first." + format)).string();
    ASSERT_EQ(run({"concentration", "--kind", "sphere", "--n", "2,4", "--N", "60", "--seed", "9",
                   "--ascent", "5", "--format", format, "--out", first})
                  .code,
              kExitOk);
    std::ifstream in(first);
    std::stringstream recorded;
    recorded << in.rdbuf();
    // Rebuild a config file from the recorded header and rerun it.
    std::string cfg;
    if (format == "csv") {
      std::istringstream lines(recorded.str());
      std::string line;
      while (std::getline(lines, line)) {
        if (line.rfind("# ", 0) == 0 && line.rfind("# command=", 0) != 0) cfg += line.substr(2) + "\n";
      }
    } else {
      const json doc = json::parse(recorded.str());
      for (const auto& [k, v] : doc["config"].items())
        cfg += k + "=" + v.get<std::string>() + "\n";
    }
    const auto second = (dir_ / ("second." + format)).string();
    ASSERT_EQ(run({"concentration", "--config", text("replay.cfg", cfg), "--out", second}).code,
              kExitOk);
    std::ifstream in2(second);
    std::stringstream replayed;
    replayed << in2.rdbuf();
    EXPECT_EQ(replayed.str(), recorded.str()) << format;
  }
}

TEST(CliFacts, SphereRow) {
  const auto j = run_json({"facts", "sphere", "--n", "2"});
  ASSERT_EQ(j["rows"].size(), 1U);
}

}  // namespace
}  // namespace mmbox::cli
