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

#include "esf/stirling.h"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

#include "esf/numeric.h"

namespace esf {

StirlingTable::StirlingTable(Count n, Count cap) : n_(n) {
  if (n < 1) throw std::invalid_argument("Stirling table needs n >= 1");
  if (n > cap) {
    throw std::length_error("Stirling table n=" + std::to_string(n) +
                            " exceeds cap " + std::to_string(cap));
  }
  log_s_.assign(Offset(n + 1), kNegInf);
  log_s_[Offset(1)] = 0.0;  // s(1,1) = 1
  // s(m+1, k) = s(m, k-1) + m s(m, k)
  for (Count m = 1; m < n; ++m) {
    const double log_m = std::log(static_cast<double>(m));
    const double* prev = &log_s_[Offset(m)];
    double* next = &log_s_[Offset(m + 1)];
    for (Count k = 1; k <= m + 1; ++k) {
      const double left = k >= 2 ? prev[k - 2] : kNegInf;
      const double right = k <= m ? log_m + prev[k - 1] : kNegInf;
      next[k - 1] = LogAddExp(left, right);
    }
  }
}

double StirlingTable::log_s(Count m, Count k) const {
  if (m < 1 || m > n_) {
    throw std::out_of_range("Stirling table row " + std::to_string(m) +
                            " outside [1, " + std::to_string(n_) + "]");
  }
  if (k < 1 || k > m) return kNegInf;
  return log_s_[Offset(m) + static_cast<std::size_t>(k - 1)];
}

std::shared_ptr<const StirlingTable> SharedStirlingTable(Count n, Count cap) {
  static std::mutex mutex;
  static std::map<Count, std::shared_ptr<const StirlingTable>> cache;

  std::lock_guard lock(mutex);
  // Any cached table with at least n rows serves.
  const auto it = cache.lower_bound(n);
  if (it != cache.end()) return it->second;
  auto table = std::make_shared<const StirlingTable>(n, cap);
  cache.emplace(n, table);
  return table;
}

}  // namespace esf
