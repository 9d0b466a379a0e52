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

#include "esf/sampler.h"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace esf {

Partition SamplePartition(Count n, double theta, RandomStream& stream) {
  if (n < 1) throw std::domain_error("sample size must be >= 1");
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::domain_error("theta must be positive and finite");
  }
  std::vector<std::int32_t> type_of(static_cast<std::size_t>(n));
  std::vector<Count> type_size;
  for (Count j = 1; j <= n; ++j) {
    const double earlier = static_cast<double>(j - 1);
    std::int32_t type;
    if (stream.Uniform() * (theta + earlier) < theta) {
      type = static_cast<std::int32_t>(type_size.size());
      type_size.push_back(0);
    } else {
      type = type_of[stream.UniformIndex(static_cast<std::uint64_t>(j - 1))];
    }
    type_of[static_cast<std::size_t>(j - 1)] = type;
    ++type_size[static_cast<std::size_t>(type)];
  }
  return Partition::FromTypeSizes(type_size);
}

Partition SubsamplePartition(const Partition& p, Count n,
                             RandomStream& stream) {
  if (n < 1 || n > p.n()) {
    throw std::domain_error("subsample size " + std::to_string(n) +
                            " outside [1, " + std::to_string(p.n()) + "]");
  }
  // One label per individual, then a partial Fisher-Yates shuffle.
  std::vector<std::int32_t> label;
  label.reserve(static_cast<std::size_t>(p.n()));
  std::int32_t type = 0;
  for (const auto& [size, count] : p.multiplicities()) {
    for (Count c = 0; c < count; ++c, ++type) {
      label.insert(label.end(), static_cast<std::size_t>(size), type);
    }
  }
  std::vector<Count> drawn(static_cast<std::size_t>(type), 0);
  const auto total = static_cast<std::uint64_t>(label.size());
  for (std::uint64_t d = 0; d < static_cast<std::uint64_t>(n); ++d) {
    const auto pick = d + stream.UniformIndex(total - d);
    std::swap(label[d], label[pick]);
    ++drawn[static_cast<std::size_t>(label[d])];
  }
  return Partition::FromTypeSizes(drawn);
}

}  // namespace esf
