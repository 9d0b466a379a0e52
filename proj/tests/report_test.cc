// Copyright 2026 The esf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "esf/report.h"
#include "json.hpp"

namespace esf {
namespace {

TEST(FormatNumberTest, NineSignificantDigits) {
  EXPECT_EQ(FormatNumber(1.4083764), "1.4083764");
  EXPECT_EQ(FormatNumber(std::sqrt(2.0)), "1.41421356");
  EXPECT_EQ(FormatNumber(0.0), "0");
  EXPECT_EQ(FormatNumber(1e6), "1000000");
  EXPECT_EQ(FormatNumber(1e-8), "1e-08");
  EXPECT_EQ(FormatNumber(-200.0), "-200");
  EXPECT_EQ(FormatNumber(123456789012.0), "1.23456789e+11");
}

TEST(ConfigTest, ParsesFlatFile) {
  const auto config = ParseConfig(R"(
# scaled study
N = 5000
n_values = 100, 20    # unsorted on purpose
theta_values = 1,3.5
reps = 250
seed = 99
i = 2
estimators = bc2, nm
c_plus = 1e5
theta_floor = 1e-9
subsample = true
)");
  EXPECT_EQ(config.pop_size, 5000);
  EXPECT_EQ(config.n_values, (std::vector<Count>{100, 20}));
  EXPECT_EQ(config.theta_values, (std::vector<double>{1, 3.5}));
  EXPECT_EQ(config.reps, 250);
  EXPECT_EQ(config.seed, 99u);
  EXPECT_EQ(config.target_index, 2);
  EXPECT_EQ(config.estimators,
            (std::vector<EstimatorKind>{EstimatorKind::kBC2, EstimatorKind::kNM}));
  EXPECT_EQ(config.policy.c_plus, 1e5);
  EXPECT_EQ(config.policy.theta_floor, 1e-9);
  EXPECT_TRUE(config.subsample_from_population);
}

TEST(ConfigTest, RejectsMalformedInput) {
  EXPECT_THROW(ParseConfig("reps 10"), ConfigError);
  EXPECT_THROW(ParseConfig("reps = ten"), ConfigError);
  EXPECT_THROW(ParseConfig("colour = red"), ConfigError);
  EXPECT_THROW(ParseConfig("estimators = nm, mle"), ConfigError);
  EXPECT_THROW(ParseConfig("n_values ="), ConfigError);
  EXPECT_THROW(ParseConfig("subsample = maybe"), ConfigError);
}

TEST(ConfigTest, CanonicalFormRoundTripsAndDigestIsStable) {
  ExperimentConfig config;
  config.n_values = {1000, 20};
  config.theta_values = {9, 1, 1};
  const auto canonical = CanonicalConfig(config);
  const auto reparsed = ParseConfig(canonical);
  EXPECT_EQ(CanonicalConfig(reparsed), canonical);
  EXPECT_EQ(ConfigDigest(reparsed), ConfigDigest(config));
  EXPECT_EQ(ConfigDigest(config).size(), 16u);

  auto other = config;
  other.seed += 1;
  EXPECT_NE(ConfigDigest(other), ConfigDigest(config));
}

TEST(ConfigTest, DefaultCanonicalForm) {
  EXPECT_EQ(CanonicalConfig(ExperimentConfig{}),
            "N = 10000\n"
            "n_values = 20,100,1000\n"
            "theta_values = 1,3,5,7,9,10,30,50,70,90,100,300,500,700,900\n"
            "reps = 10000\n"
            "seed = 20220101\n"
            "i = 1\n"
            "estimators = nm,bc1,bc2\n"
            "c_plus = 1000000\n"
            "theta_floor = 1e-08\n"
            "subsample = false\n");
}

TEST(SummaryCsvTest, SchemaAndFormatting) {
  ExperimentResult result;
  result.cells.push_back(
      {20, 3.0, 10000, 1, EstimatorKind::kBC1, 500, 7, -1.25, 10.5, 0.002, 0.3});
  std::ostringstream out;
  WriteSummaryCsv(out, result);
  EXPECT_EQ(out.str(),
            "n,theta,N,i,estimator,reps,seed,rb_percent,rrmse_percent,"
            "neg_rate,mc_se_rb\n"
            "20,3,10000,1,bc1,500,7,-1.25,10.5,0.002,0.3\n");
}

TEST(ManifestTest, JsonFields) {
  RunManifest manifest{"0.1.0", "00ff", 42, "a", "b", 135, "N = 1\n"};
  const auto j = nlohmann::json::parse(ManifestJson(manifest));
  EXPECT_EQ(j["tool_version"], "0.1.0");
  EXPECT_EQ(j["config_digest"], "00ff");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["row_count"], 135);
  EXPECT_EQ(j["config"], "N = 1\n");
  EXPECT_EQ(UtcNow().size(), 20u);
}

}  // namespace
}  // namespace esf
