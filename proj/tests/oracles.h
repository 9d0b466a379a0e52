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

#ifndef ESF_TESTS_ORACLES_H_
#define ESF_TESTS_ORACLES_H_

// Test-only reference computations. They deliberately avoid the library's
// log-space paths: direct products in long double, integer polynomial
// expansion, and brute-force generation of partitions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

namespace esf::oracle {

// All partitions of n as non-increasing part lists.
inline void PartsRec(int remaining, int max_part, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    current.push_back(part);
    PartsRec(remaining - part, part, current, out);
    current.pop_back();
  }
}

inline std::vector<std::vector<int>> AllPartsLists(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  PartsRec(n, n, current, out);
  return out;
}

inline std::map<std::int64_t, std::int64_t> ToMultiplicities(
    const std::vector<int>& parts) {
  std::map<std::int64_t, std::int64_t> m;
  for (int p : parts) ++m[p];
  return m;
}

inline long double Factorial(int m) {
  long double f = 1;
  for (int j = 2; j <= m; ++j) f *= j;
  return f;
}

// n! theta^k / theta^[n] * prod 1 / (j^{s_j} s_j!) by direct products.
inline long double EwensPmf(const std::map<std::int64_t, std::int64_t>& s,
                            long double theta) {
  int n = 0;
  int k = 0;
  long double denom = 1;
  for (const auto& [j, sj] : s) {
    n += static_cast<int>(j * sj);
    k += static_cast<int>(sj);
    denom *= std::pow(static_cast<long double>(j), static_cast<long double>(sj)) *
             Factorial(static_cast<int>(sj));
  }
  long double rising = 1;
  for (int j = 1; j <= n; ++j) rising *= theta + j - 1;
  return Factorial(n) * std::pow(theta, static_cast<long double>(k)) /
         (rising * denom);
}

// Coefficients of theta(theta+1)...(theta+n-1); exact up to n = 20.
inline std::vector<std::uint64_t> StirlingRow(int n) {
  std::vector<std::uint64_t> c = {0, 1};  // theta
  for (int m = 1; m < n; ++m) {
    std::vector<std::uint64_t> next(c.size() + 1, 0);
    for (std::size_t d = 0; d < c.size(); ++d) {
      next[d] += c[d] * static_cast<std::uint64_t>(m);
      next[d + 1] += c[d];
    }
    c = std::move(next);
  }
  return c;  // c[k] = s(n, k)
}

// P(K_n = k) summed over partitions with k parts.
inline long double KnPmfByEnumeration(int n, int k, long double theta) {
  long double total = 0;
  for (const auto& parts : AllPartsLists(n)) {
    if (static_cast<int>(parts.size()) == k) {
      total += EwensPmf(ToMultiplicities(parts), theta);
    }
  }
  return total;
}

inline long double ScoreTheta(int k, int n, long double theta) {
  long double s = k / theta;
  for (int j = 1; j <= n; ++j) s -= 1 / (theta + j - 1);
  return s;
}

inline long double FisherInfoXi(long double theta, int n) {
  long double g = 0;
  for (int j = 2; j <= n; ++j) {
    g += theta * (j - 1) / ((theta + j - 1) * (theta + j - 1));
  }
  return g;
}

inline long double Eta(long double theta, int m) {
  long double e = 0;
  for (int j = 1; j <= m; ++j) e += theta / (theta + j - 1);
  return e;
}

// Watterson's product, evaluated directly.
inline long double SizeIndex(long double theta, int i, int big_n) {
  long double r = theta / i;
  for (int j = 1; j <= i; ++j) r *= (big_n - j + 1) / (theta + big_n - j);
  return r;
}

// Bias ratio sum (j-1)/(theta+j-1)^3 / (sum (j-1)/(theta+j-1)^2)^2.
inline long double BiasRatio(long double theta, int n) {
  long double cube = 0;
  long double square = 0;
  for (int j = 2; j <= n; ++j) {
    const long double d = theta + j - 1;
    cube += (j - 1) / (d * d * d);
    square += (j - 1) / (d * d);
  }
  return cube / (square * square);
}

// Root of a decreasing function by plain bisection in theta (long double).
template <typename F>
long double BisectTheta(F f, long double lo, long double hi) {
  for (int it = 0; it < 400; ++it) {
    const long double mid = std::sqrt(lo * hi);
    if (f(mid) > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

// Total variation distance between two distributions over the same keys.
template <typename Key>
double TotalVariation(const std::map<Key, double>& p,
                      const std::map<Key, double>& q) {
  std::map<Key, double> diff = p;
  for (const auto& [key, value] : q) diff[key] -= value;
  double tv = 0;
  for (const auto& [key, value] : diff) tv += std::abs(value);
  return 0.5 * tv;
}

}  // namespace esf::oracle

#endif  // ESF_TESTS_ORACLES_H_
