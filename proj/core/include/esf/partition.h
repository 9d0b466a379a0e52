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

#ifndef ESF_PARTITION_H_
#define ESF_PARTITION_H_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace esf {

using Count = std::int64_t;

// A partition of n stored as its frequency-of-frequencies vector: entry
// (i, s_i) says that s_i types appear exactly i times. Only strictly positive
// multiplicities are stored.
class Partition {
 public:
  using Multiplicities = std::map<Count, Count>;

  // Zero multiplicities are dropped. Throws std::invalid_argument on a
  // non-positive part size, a negative multiplicity, or an empty partition.
  explicit Partition(Multiplicities multiplicities);

  // Builds the partition induced by a list of type sizes (zeros ignored).
  template <typename Range>
  static Partition FromTypeSizes(const Range& sizes) {
    Multiplicities m;
    for (auto size : sizes) {
      if (size > 0) ++m[static_cast<Count>(size)];
    }
    return Partition(std::move(m));
  }

  // Parses the "i:count;i:count" form written by ToString().
  static Partition Parse(std::string_view text);

  Count n() const { return n_; }
  Count k() const { return k_; }
  const Multiplicities& multiplicities() const { return multiplicities_; }

  // s_i, zero when absent.
  Count multiplicity(Count part_size) const;

  // "1:3;2:1" for three singletons and one pair; keys ascending.
  std::string ToString() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.multiplicities_ < b.multiplicities_;
  }

 private:
  Multiplicities multiplicities_;
  Count n_ = 0;
  Count k_ = 0;
};

// Diversity parameter together with population and sample sizes.
struct ModelParams {
  double theta;
  Count pop_size;
  Count sample_size;

  double xi() const;

  // Requires theta > 0 finite and 2 <= sample_size <= pop_size.
  static ModelParams Make(double theta, Count pop_size, Count sample_size);
};

}  // namespace esf

#endif  // ESF_PARTITION_H_
