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

#include "esf/report.h"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <chrono>
#include <cmath>
#include <ctime>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include "json.hpp"

#ifndef ESF_VERSION
#define ESF_VERSION "0.0.0"
#endif

namespace esf {

namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> SplitList(std::string_view s) {
  std::vector<std::string_view> items;
  while (true) {
    const auto comma = s.find(',');
    const auto item = Trim(s.substr(0, comma));
    if (!item.empty()) items.push_back(item);
    if (comma == std::string_view::npos) break;
    s = s.substr(comma + 1);
  }
  return items;
}

template <typename T>
T ParseNumber(std::string_view key, std::string_view text) {
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw ConfigError("config key '" + std::string(key) +
                      "': cannot parse '" + std::string(text) + "'");
  }
  return value;
}

template <typename T>
std::vector<T> ParseNumberList(std::string_view key, std::string_view text) {
  std::vector<T> out;
  for (auto item : SplitList(text)) out.push_back(ParseNumber<T>(key, item));
  if (out.empty()) {
    throw ConfigError("config key '" + std::string(key) + "' is empty");
  }
  return out;
}

template <typename T>
std::string JoinNumbers(const std::vector<T>& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    if constexpr (std::is_floating_point_v<T>) {
      out += FormatNumber(v);
    } else {
      out += std::to_string(v);
    }
  }
  return out;
}

std::uint64_t Fnv1a64(std::string_view data) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace

std::string_view ToolVersion() { return ESF_VERSION; }

std::string FormatNumber(double x) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 9);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

void WriteSummaryCsv(std::ostream& out, const ExperimentResult& result) {
  out << kSummaryCsvHeader << '\n';
  for (const auto& cell : result.cells) {
    out << cell.n << ',' << FormatNumber(cell.theta) << ',' << cell.pop_size
        << ',' << cell.target_index << ',' << ToString(cell.estimator) << ','
        << cell.reps << ',' << cell.seed << ',' << FormatNumber(cell.rb_percent)
        << ',' << FormatNumber(cell.rrmse_percent) << ','
        << FormatNumber(cell.neg_rate) << ',' << FormatNumber(cell.mc_se_rb)
        << '\n';
  }
}

void SetConfigValue(ExperimentConfig& config, std::string_view key,
                    std::string_view value) {
  key = Trim(key);
  value = Trim(value);
  if (key == "N") {
    config.pop_size = ParseNumber<Count>(key, value);
  } else if (key == "n_values") {
    config.n_values = ParseNumberList<Count>(key, value);
  } else if (key == "theta_values") {
    config.theta_values = ParseNumberList<double>(key, value);
  } else if (key == "reps") {
    config.reps = ParseNumber<Count>(key, value);
  } else if (key == "seed") {
    config.seed = ParseNumber<std::uint64_t>(key, value);
  } else if (key == "i") {
    config.target_index = ParseNumber<Count>(key, value);
  } else if (key == "estimators") {
    std::vector<EstimatorKind> kinds;
    for (auto name : SplitList(value)) {
      const auto kind = ParseEstimatorKind(name);
      if (!kind) {
        throw ConfigError("unknown estimator '" + std::string(name) + "'");
      }
      kinds.push_back(*kind);
    }
    if (kinds.empty()) throw ConfigError("config key 'estimators' is empty");
    config.estimators = std::move(kinds);
  } else if (key == "c_plus") {
    config.policy.c_plus = ParseNumber<double>(key, value);
  } else if (key == "theta_floor") {
    config.policy.theta_floor = ParseNumber<double>(key, value);
  } else if (key == "subsample") {
    if (value == "true" || value == "1") {
      config.subsample_from_population = true;
    } else if (value == "false" || value == "0") {
      config.subsample_from_population = false;
    } else {
      throw ConfigError("config key 'subsample' must be true or false");
    }
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

ExperimentConfig ParseConfig(std::string_view text, ExperimentConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{}
                                         : text.substr(eol + 1);
    line = Trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    SetConfigValue(base, line.substr(0, eq), line.substr(eq + 1));
  }
  return base;
}

std::string CanonicalConfig(const ExperimentConfig& config) {
  auto n_values = config.n_values;
  std::sort(n_values.begin(), n_values.end());
  n_values.erase(std::unique(n_values.begin(), n_values.end()),
                 n_values.end());
  auto theta_values = config.theta_values;
  std::sort(theta_values.begin(), theta_values.end());
  theta_values.erase(std::unique(theta_values.begin(), theta_values.end()),
                     theta_values.end());
  std::string estimators;
  for (auto kind : config.estimators) {
    if (!estimators.empty()) estimators += ',';
    estimators += ToString(kind);
  }

  std::ostringstream out;
  out << "N = " << config.pop_size << '\n'
      << "n_values = " << JoinNumbers(n_values) << '\n'
      << "theta_values = " << JoinNumbers(theta_values) << '\n'
      << "reps = " << config.reps << '\n'
      << "seed = " << config.seed << '\n'
      << "i = " << config.target_index << '\n'
      << "estimators = " << estimators << '\n'
      << "c_plus = " << FormatNumber(config.policy.c_plus) << '\n'
      << "theta_floor = " << FormatNumber(config.policy.theta_floor) << '\n'
      << "subsample = "
      << (config.subsample_from_population ? "true" : "false") << '\n';
  return out.str();
}

std::string ConfigDigest(const ExperimentConfig& config) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(
                    Fnv1a64(CanonicalConfig(config))));
  return buf;
}

std::string ManifestJson(const RunManifest& manifest) {
  nlohmann::ordered_json j;
  j["tool_version"] = manifest.tool_version;
  j["config_digest"] = manifest.config_digest;
  j["seed"] = manifest.seed;
  j["started"] = manifest.started;
  j["finished"] = manifest.finished;
  j["row_count"] = manifest.row_count;
  j["config"] = manifest.canonical_config;
  return j.dump(2) + "\n";
}

std::string UtcNow() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace esf
