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

#ifndef ESF_STIRLING_H_
#define ESF_STIRLING_H_

#include <cstddef>
#include <memory>
#include <vector>

#include "esf/partition.h"

namespace esf {

// Largest n a table may be built for unless the caller raises the cap.
// The triangular table holds n(n+1)/2 doubles.
inline constexpr Count kDefaultStirlingCap = 5000;

// Natural logs of the unsigned Stirling numbers of the first kind s(m, k)
// for 1 <= k <= m <= n, i.e. the coefficients of theta^k in the rising
// factorial theta(theta+1)...(theta+m-1). Immutable once built.
class StirlingTable {
 public:
  // Throws std::invalid_argument for n < 1 and std::length_error when n
  // exceeds cap.
  explicit StirlingTable(Count n, Count cap = kDefaultStirlingCap);

  Count n() const { return n_; }

  // log s(m, k); -inf for k outside [1, m]. Requires 1 <= m <= n().
  double log_s(Count m, Count k) const;

 private:
  static std::size_t Offset(Count m) {
    return static_cast<std::size_t>((m - 1) * m / 2);
  }

  Count n_;
  std::vector<double> log_s_;  // row m starts at Offset(m), holds k = 1..m
};

// Process-wide memoized table covering at least n; the returned table is
// shared and read-only. Thread-safe.
std::shared_ptr<const StirlingTable> SharedStirlingTable(
    Count n, Count cap = kDefaultStirlingCap);

}  // namespace esf

#endif  // ESF_STIRLING_H_
