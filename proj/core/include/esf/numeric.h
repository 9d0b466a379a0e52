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

#ifndef ESF_NUMERIC_H_
#define ESF_NUMERIC_H_

#include <algorithm>
#include <cmath>
#include <limits>
#include <span>
#include <utility>

namespace esf {

// Neumaier's variant of Kahan summation. Long sums over j = 1..n with n up
// to 1e4 are accumulated through this so that the score equations stay
// accurate near their roots.
class CompensatedSum {
 public:
  CompensatedSum& operator+=(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      compensation_ += (sum_ - t) + x;
    } else {
      compensation_ += (x - t) + sum_;
    }
    sum_ = t;
    return *this;
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

inline constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log(exp(a) + exp(b)) without overflow; either argument may be -inf.
inline double LogAddExp(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  if (a < b) std::swap(a, b);
  return a + std::log1p(std::exp(b - a));
}

// log(sum(exp(x))) over a span; -inf for an empty span.
inline double LogSumExp(std::span<const double> xs) {
  double max = kNegInf;
  for (double x : xs) max = std::max(max, x);
  if (max == kNegInf) return kNegInf;
  CompensatedSum acc;
  for (double x : xs) acc += std::exp(x - max);
  return max + std::log(acc.value());
}

}  // namespace esf

#endif  // ESF_NUMERIC_H_
