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

#include "esf/partition.h"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string>

namespace esf {

Partition::Partition(Multiplicities multiplicities) {
  for (auto it = multiplicities.begin(); it != multiplicities.end();) {
    const auto [size, count] = *it;
    if (size <= 0) {
      throw std::invalid_argument("partition part size must be positive, got " +
                                  std::to_string(size));
    }
    if (count < 0) {
      throw std::invalid_argument("partition multiplicity must be >= 0, got " +
                                  std::to_string(count));
    }
    if (count == 0) {
      it = multiplicities.erase(it);
      continue;
    }
    n_ += size * count;
    k_ += count;
    ++it;
  }
  if (n_ == 0) throw std::invalid_argument("partition must be non-empty");
  multiplicities_ = std::move(multiplicities);
}

Count Partition::multiplicity(Count part_size) const {
  const auto it = multiplicities_.find(part_size);
  return it == multiplicities_.end() ? 0 : it->second;
}

std::string Partition::ToString() const {
  std::string out;
  for (const auto& [size, count] : multiplicities_) {
    if (!out.empty()) out += ';';
    out += std::to_string(size);
    out += ':';
    out += std::to_string(count);
  }
  return out;
}

namespace {

Count ParseCount(std::string_view text) {
  Count value = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    throw std::invalid_argument("malformed partition entry '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

Partition Partition::Parse(std::string_view text) {
  Multiplicities m;
  while (!text.empty()) {
    const auto semi = text.find(';');
    const auto entry = text.substr(0, semi);
    const auto colon = entry.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("malformed partition entry '" +
                                  std::string(entry) + "'");
    }
    const Count size = ParseCount(entry.substr(0, colon));
    if (!m.emplace(size, ParseCount(entry.substr(colon + 1))).second) {
      throw std::invalid_argument("duplicate part size " +
                                  std::to_string(size));
    }
    text = semi == std::string_view::npos ? std::string_view{}
                                          : text.substr(semi + 1);
  }
  return Partition(std::move(m));
}

double ModelParams::xi() const { return std::log(theta); }

ModelParams ModelParams::Make(double theta, Count pop_size,
                              Count sample_size) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::domain_error("theta must be positive and finite");
  }
  if (sample_size < 2) {
    throw std::domain_error("sample size must be at least 2");
  }
  if (sample_size > pop_size) {
    throw std::domain_error("sample size must not exceed population size");
  }
  return ModelParams{theta, pop_size, sample_size};
}

}  // namespace esf
