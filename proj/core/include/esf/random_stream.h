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

#ifndef ESF_RANDOM_STREAM_H_
#define ESF_RANDOM_STREAM_H_

#include <cstdint>
#include <initializer_list>
#include <random>

namespace esf {

// SplitMix64 finalizer; a bijection on 64-bit words.
std::uint64_t Mix64(std::uint64_t x);

// A reproducible source of random numbers. Streams for parallel work are
// derived from a master seed and a tuple of counters, so the numbers a
// replication sees do not depend on which thread runs it.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(Mix64(seed)) {}

  // Stream keyed by (seed, keys...). Distinct key tuples give independent
  // engines.
  static RandomStream Derive(std::uint64_t seed,
                             std::initializer_list<std::uint64_t> keys);

  std::uint64_t NextU64() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double Uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

  // Uniform integer on [0, bound); bound must be positive.
  std::uint64_t UniformIndex(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

}  // namespace esf

#endif  // ESF_RANDOM_STREAM_H_
