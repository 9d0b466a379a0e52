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

#include "esf/ewens.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "esf/numeric.h"

namespace esf {

namespace {

void RequirePositiveTheta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::domain_error("theta must be positive and finite");
  }
}

}  // namespace

double LogPochhammer(double theta, Count m) {
  RequirePositiveTheta(theta);
  if (m < 1) throw std::domain_error("rising factorial length must be >= 1");
  CompensatedSum acc;
  for (Count j = 0; j < m; ++j) acc += std::log(theta + static_cast<double>(j));
  return acc.value();
}

double EwensLogPmf(const Partition& p, double theta) {
  RequirePositiveTheta(theta);
  CompensatedSum acc;
  acc += std::lgamma(static_cast<double>(p.n()) + 1.0);
  acc += static_cast<double>(p.k()) * std::log(theta);
  acc += -LogPochhammer(theta, p.n());
  for (const auto& [size, count] : p.multiplicities()) {
    acc += -static_cast<double>(count) * std::log(static_cast<double>(size));
    acc += -std::lgamma(static_cast<double>(count) + 1.0);
  }
  return acc.value();
}

double KnLogPmf(Count n, Count k, double theta, const StirlingTable& table) {
  RequirePositiveTheta(theta);
  if (n < 1 || n > table.n()) {
    throw std::domain_error("n=" + std::to_string(n) +
                            " not covered by the Stirling table");
  }
  if (k < 1 || k > n) {
    throw std::domain_error("k=" + std::to_string(k) + " outside [1, " +
                            std::to_string(n) + "]");
  }
  return static_cast<double>(k) * std::log(theta) + table.log_s(n, k) -
         LogPochhammer(theta, n);
}

double ExpectedSizeIndex(double theta, Count i, Count pop_size) {
  RequirePositiveTheta(theta);
  if (i < 1 || i > pop_size) {
    throw std::domain_error("size index i=" + std::to_string(i) +
                            " outside [1, N=" + std::to_string(pop_size) +
                            "]");
  }
  // R_i = (theta / i) prod_{j=1}^i (N - j + 1) / (theta + N - j)
  const double big_n = static_cast<double>(pop_size);
  CompensatedSum log_r;
  log_r += std::log(theta);
  log_r += -std::log(static_cast<double>(i));
  for (Count j = 1; j <= i; ++j) {
    const double jd = static_cast<double>(j);
    log_r += std::log(big_n - jd + 1.0);
    log_r += -std::log(theta + big_n - jd);
  }
  return std::exp(log_r.value());
}

double ExpectedNumTypes(double theta, Count m) {
  RequirePositiveTheta(theta);
  if (m < 1) throw std::domain_error("M must be >= 1");
  CompensatedSum acc;
  for (Count j = 1; j <= m; ++j) {
    acc += theta / (theta + static_cast<double>(j - 1));
  }
  return acc.value();
}

std::vector<Partition> EnumeratePartitions(Count n, Count cap) {
  if (n < 1) throw std::domain_error("n must be >= 1");
  if (n > cap) {
    throw std::length_error("enumeration n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
  std::vector<Partition> out;
  Partition::Multiplicities current;
  // Choose the multiplicity of each part size from largest to smallest.
  std::function<void(Count, Count)> recurse = [&](Count remaining,
                                                  Count max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (max_part == 0) return;
    for (Count count = remaining / max_part; count >= 0; --count) {
      if (count > 0) current[max_part] = count;
      recurse(remaining - count * max_part, max_part - 1);
      current.erase(max_part);
    }
  };
  recurse(n, n);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace esf
