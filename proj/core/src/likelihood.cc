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

#include "esf/likelihood.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "esf/ewens.h"
#include "esf/numeric.h"

namespace esf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void RequireTheta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) {
    throw std::domain_error("theta must be positive and finite");
  }
}

void RequireSampleSize(Count n) {
  if (n < 2) {
    throw std::domain_error("sample size must be at least 2, got " +
                            std::to_string(n));
  }
}

void RequireTypes(Count k, Count n) {
  if (n < 1 || k < 1 || k > n) {
    throw std::domain_error("need 1 <= k <= n, got k=" + std::to_string(k) +
                            " n=" + std::to_string(n));
  }
}

// sum_{j=2}^n (j - 1) / (theta + j - 1)^power
double WeightedInversePowerSum(double theta, Count n, int power) {
  CompensatedSum acc;
  for (Count j = 2; j <= n; ++j) {
    const double m = static_cast<double>(j - 1);
    acc += m / std::pow(theta + m, power);
  }
  return acc.value();
}

// theta * AdjustmentScore(theta, n), finite on [0, inf]. Tends to 0 as
// theta -> 0 and to -1 as theta -> inf.
double ScaledAdjustment(double theta, Count n) {
  if (theta == 0.0) return 0.0;
  if (theta == kInf) return -1.0;
  if (theta < 1.0) {
    return -theta * WeightedInversePowerSum(theta, n, 3) /
           WeightedInversePowerSum(theta, n, 2);
  }
  // With v_j = theta / (theta + j - 1) the ratio is a v-weighted mean of v,
  // which stays representable for huge theta.
  CompensatedSum num;
  CompensatedSum den;
  for (Count j = 2; j <= n; ++j) {
    const double m = static_cast<double>(j - 1);
    const double v = theta / (theta + m);
    num += m * v * v * v;
    den += m * v * v;
  }
  return -num.value() / den.value();
}

using XiFunction = std::function<double(double)>;

// Bisects a decreasing function on [lo, hi] with f(lo) > 0 >= f(hi).
ThetaSolution Bisect(const XiFunction& f, double lo, double hi,
                     const SolverOptions& options, Count k, Count n) {
  int iterations = 0;
  while (hi - lo > options.xi_tolerance &&
         iterations < options.max_iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  const double xi = 0.5 * (lo + hi);
  return ThetaSolution{ThetaSolution::Kind::kInterior, std::exp(xi),
                       iterations, f(xi), k, n};
}

ThetaSolution Degenerate(ThetaSolution::Kind kind, Count k, Count n) {
  return ThetaSolution{kind, 0.0, 0, 0.0, k, n};
}

void ValidateOptions(const SolverOptions& options) {
  if (!(options.lower_theta > 0.0) ||
      !(options.upper_theta > options.lower_theta)) {
    throw std::invalid_argument("solver bracket must satisfy 0 < lower < upper");
  }
  if (options.probe_points < 2) {
    throw std::invalid_argument("solver needs at least two probe points");
  }
}

// Moves lo down geometrically until f(lo) > 0. Returns false if the xi
// limit is reached first.
bool ExpandDown(const XiFunction& f, double& lo, double hi,
                const SolverOptions& options) {
  double step = hi - lo;
  for (int e = 0; f(lo) <= 0.0; ++e) {
    if (lo <= -options.xi_limit || e >= options.max_expansions) return false;
    lo = std::max(lo - step, -options.xi_limit);
    step *= 2.0;
  }
  return true;
}

bool ExpandUp(const XiFunction& f, double lo, double& hi,
              const SolverOptions& options) {
  double step = hi - lo;
  for (int e = 0; f(hi) >= 0.0; ++e) {
    if (hi >= options.xi_limit || e >= options.max_expansions) return false;
    hi = std::min(hi + step, options.xi_limit);
    step *= 2.0;
  }
  return true;
}

}  // namespace

double ScoreTheta(Count k, Count n, double theta) {
  RequireTypes(k, n);
  RequireTheta(theta);
  CompensatedSum acc;
  acc += static_cast<double>(k) / theta;
  for (Count j = 1; j <= n; ++j) {
    acc += -1.0 / (theta + static_cast<double>(j - 1));
  }
  return acc.value();
}

double ScoreXi(Count k, Count n, double xi) {
  RequireTypes(k, n);
  if (std::isnan(xi)) throw std::domain_error("xi is NaN");
  const double theta = std::exp(xi);
  CompensatedSum acc;
  acc += static_cast<double>(k - n);
  if (theta == kInf) return acc.value();
  for (Count j = 2; j <= n; ++j) {
    const double m = static_cast<double>(j - 1);
    acc += m / (theta + m);
  }
  return acc.value();
}

double FisherInfoXi(double theta, Count n) {
  RequireTheta(theta);
  RequireSampleSize(n);
  CompensatedSum acc;
  for (Count j = 2; j <= n; ++j) {
    const double m = static_cast<double>(j - 1);
    const double d = theta + m;
    acc += theta * m / (d * d);
  }
  return acc.value();
}

double DgXi(double theta, Count n) {
  RequireTheta(theta);
  RequireSampleSize(n);
  CompensatedSum acc;
  for (Count j = 2; j <= n; ++j) {
    const double m = static_cast<double>(j - 1);
    const double d = theta + m;
    acc += theta * m * (m - theta) / (d * d * d);
  }
  return acc.value();
}

double AdjustmentScore(double theta, Count n) {
  RequireTheta(theta);
  RequireSampleSize(n);
  return ScaledAdjustment(theta, n) / theta;
}

double BiasTerm(double theta, Count i, Count pop_size, Count n) {
  RequireTheta(theta);
  RequireSampleSize(n);
  const double cubic = WeightedInversePowerSum(theta, n, 3);
  const double square = WeightedInversePowerSum(theta, n, 2);
  return cubic / (square * square) * ExpectedSizeIndex(theta, i, pop_size);
}

double DThetaSizeIndex(double theta, Count i, Count pop_size) {
  const double r = ExpectedSizeIndex(theta, i, pop_size);
  const double big_n = static_cast<double>(pop_size);
  CompensatedSum acc;
  acc += 1.0;
  for (Count j = 1; j <= i; ++j) {
    acc += -theta / (theta + big_n - static_cast<double>(j));
  }
  return r / theta * acc.value();
}

double D2ThetaSizeIndex(double theta, Count i, Count pop_size) {
  const double r = ExpectedSizeIndex(theta, i, pop_size);
  const double big_n = static_cast<double>(pop_size);
  CompensatedSum linear;
  CompensatedSum a_sum;
  CompensatedSum a_sq;
  for (Count j = 1; j <= i; ++j) {
    const double rest = big_n - static_cast<double>(j);
    const double a = 1.0 / (theta + rest);
    linear += rest * a * a;
    a_sum += a;
    a_sq += a * a;
  }
  // sum_{j != s} a_j a_s = (sum a)^2 - sum a^2
  const double cross = a_sum.value() * a_sum.value() - a_sq.value();
  return r / theta * (-2.0 * linear.value() + theta * cross);
}

InfoSummary Info(double theta, Count n) {
  return InfoSummary{FisherInfoXi(theta, n), DgXi(theta, n),
                     AdjustmentScore(theta, n)};
}

double AdjustedScoreXi(Count k, Count n, double xi) {
  RequireSampleSize(n);
  return ScoreXi(k, n, xi) + ScaledAdjustment(std::exp(xi), n);
}

std::string_view ToString(ThetaSolution::Kind kind) {
  switch (kind) {
    case ThetaSolution::Kind::kInterior:
      return "Interior";
    case ThetaSolution::Kind::kDegenerateZero:
      return "DegenerateZero";
    case ThetaSolution::Kind::kDivergentAbove:
      return "DivergentAbove";
  }
  return "Unknown";
}

ThetaSolution SolveMle(Count k, Count n, const SolverOptions& options) {
  RequireTypes(k, n);
  RequireSampleSize(n);
  ValidateOptions(options);
  if (k == 1) return Degenerate(ThetaSolution::Kind::kDegenerateZero, k, n);
  if (k == n) return Degenerate(ThetaSolution::Kind::kDivergentAbove, k, n);

  // Strictly decreasing in xi from k - 1 > 0 to k - n < 0.
  const XiFunction score = [k, n](double xi) { return ScoreXi(k, n, xi); };
  double lo = std::log(options.lower_theta);
  double hi = std::log(options.upper_theta);
  if (!ExpandDown(score, lo, hi, options)) {
    return Degenerate(ThetaSolution::Kind::kDegenerateZero, k, n);
  }
  if (!ExpandUp(score, lo, hi, options)) {
    return Degenerate(ThetaSolution::Kind::kDivergentAbove, k, n);
  }
  return Bisect(score, lo, hi, options, k, n);
}

ThetaSolution SolveAdjustedMle(Count k, Count n,
                               const SolverOptions& options) {
  RequireTypes(k, n);
  RequireSampleSize(n);
  ValidateOptions(options);
  if (k == 1) return Degenerate(ThetaSolution::Kind::kDegenerateZero, k, n);

  // Tends to k - 1 > 0 as xi -> -inf and to k - n - 1 < 0 as xi -> inf.
  const XiFunction score = [k, n](double xi) {
    return AdjustedScoreXi(k, n, xi);
  };
  double lo = std::log(options.lower_theta);
  const double hi = std::log(options.upper_theta);
  if (!ExpandDown(score, lo, hi, options)) {
    return Degenerate(ThetaSolution::Kind::kDegenerateZero, k, n);
  }
  if (score(hi) >= 0.0) {
    return Degenerate(ThetaSolution::Kind::kDivergentAbove, k, n);
  }

  // Uniqueness of the adjusted root is not known in general; refuse to pick
  // one if the probe grid sees several.
  const int points = options.probe_points;
  std::vector<double> grid(static_cast<std::size_t>(points));
  std::vector<double> values(grid.size());
  for (int p = 0; p < points; ++p) {
    grid[p] = p + 1 == points ? hi : lo + (hi - lo) * p / (points - 1);
    values[p] = score(grid[p]);
  }
  int changes = 0;
  int last_change = -1;
  for (int p = 0; p + 1 < points; ++p) {
    if ((values[p] > 0.0) != (values[p + 1] > 0.0)) {
      ++changes;
      last_change = p;
    }
  }
  if (changes != 1) {
    throw std::runtime_error(
        "adjusted score has " + std::to_string(changes) +
        " sign changes on the probe grid for k=" + std::to_string(k) +
        " n=" + std::to_string(n));
  }
  return Bisect(score, grid[last_change], grid[last_change + 1], options, k,
                n);
}

}  // namespace esf
