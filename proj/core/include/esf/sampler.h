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

#ifndef ESF_SAMPLER_H_
#define ESF_SAMPLER_H_

#include "esf/partition.h"
#include "esf/random_stream.h"

namespace esf {

// Draws a partition of n from the Ewens sampling formula with the
// sequential (Chinese restaurant) construction: individual j starts a new
// type with probability theta / (theta + j - 1) and otherwise copies the
// type of a uniformly chosen earlier individual.
Partition SamplePartition(Count n, double theta, RandomStream& stream);

// Draws n of the p.n() individuals of p without replacement and returns the
// partition they induce.
Partition SubsamplePartition(const Partition& p, Count n,
                             RandomStream& stream);

}  // namespace esf

#endif  // ESF_SAMPLER_H_
