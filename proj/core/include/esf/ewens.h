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

#ifndef ESF_EWENS_H_
#define ESF_EWENS_H_

#include <vector>

#include "esf/partition.h"
#include "esf/stirling.h"

namespace esf {

// log of the rising factorial theta(theta+1)...(theta+m-1).
double LogPochhammer(double theta, Count m);

// Log-probability of partition p under the Ewens sampling formula with
// diversity theta.
double EwensLogPmf(const Partition& p, double theta);

// log P(K_n = k) = k log theta + log s(n, k) - log theta^[n].
double KnLogPmf(Count n, Count k, double theta, const StirlingTable& table);

// Watterson's expected size index R_i(theta) = E[S_i] for a population of
// size pop_size. Evaluated in log space, so i may be as large as pop_size.
double ExpectedSizeIndex(double theta, Count i, Count pop_size);

// eta(theta) = E[K_M] = sum_{j=1}^M theta / (theta + j - 1).
double ExpectedNumTypes(double theta, Count m);

// Every partition of n, each exactly once, in lexicographic order of the
// multiplicity maps. Throws std::length_error when n > cap.
inline constexpr Count kDefaultEnumerationCap = 12;
std::vector<Partition> EnumeratePartitions(Count n,
                                           Count cap = kDefaultEnumerationCap);

}  // namespace esf

#endif  // ESF_EWENS_H_
