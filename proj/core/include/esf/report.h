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

#ifndef ESF_REPORT_H_
#define ESF_REPORT_H_

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "esf/montecarlo.h"

namespace esf {

std::string_view ToolVersion();

// Shortest round-trip-free decimal with 9 significant digits; locale
// independent ("1.41421356", "1e+06", "0").
std::string FormatNumber(double x);

inline constexpr std::string_view kSummaryCsvHeader =
    "n,theta,N,i,estimator,reps,seed,rb_percent,rrmse_percent,neg_rate,"
    "mc_se_rb";

void WriteSummaryCsv(std::ostream& out, const ExperimentResult& result);

// Flat "key = value" text. Lists are comma separated; '#' starts a comment.
// Keys: N, n_values, theta_values, reps, seed, i, estimators, c_plus,
// theta_floor, subsample. Unknown keys and malformed values throw
// ConfigError. Keys not present keep their defaults.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

ExperimentConfig ParseConfig(std::string_view text,
                             ExperimentConfig base = {});

// Applies a single "key = value" assignment.
void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value);

// Canonical form: every key on its own line in a fixed order, numbers via
// FormatNumber.
std::string CanonicalConfig(const ExperimentConfig& config);

// 16-hex-digit FNV-1a 64 digest of CanonicalConfig.
std::string ConfigDigest(const ExperimentConfig& config);

struct RunManifest {
  std::string tool_version;
  std::string config_digest;
  std::uint64_t seed = 0;
  std::string started;
  std::string finished;
  std::int64_t row_count = 0;
  std::string canonical_config;
};

std::string ManifestJson(const RunManifest& manifest);

// UTC timestamp, ISO 8601 with seconds.
std::string UtcNow();

}  // namespace esf

#endif  // ESF_REPORT_H_
