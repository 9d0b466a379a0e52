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

#ifndef ESF_LIKELIHOOD_H_
#define ESF_LIKELIHOOD_H_

#include <string_view>

#include "esf/partition.h"

namespace esf {

// Score, information and adjustment terms of the Ewens log-likelihood in
// theta or in the natural parameter xi = log theta. K_n (the number of
// types) is the complete sufficient statistic, so these depend on the data
// only through (k, n).

// d/dtheta l = k / theta - sum_{j=1}^n 1 / (theta + j - 1).
double ScoreTheta(Count k, Count n, double theta);

// d/dxi l = k - n + sum_{j=2}^n (j - 1) / (e^xi + j - 1). Well defined for
// xi = +-inf.
double ScoreXi(Count k, Count n, double xi);

// g_xi = -d^2/dxi^2 l = sum_{j=2}^n theta (j - 1) / (theta + j - 1)^2.
double FisherInfoXi(double theta, Count n);

// d/dxi g_xi = sum_{j=2}^n theta (j - 1)(j - 1 - theta) / (theta + j - 1)^3.
double DgXi(double theta, Count n);

// Derivative in theta of the log adjustment factor:
//   -sum (j - 1) / (theta + j - 1)^3 / sum (j - 1) / (theta + j - 1)^2.
// Strictly negative.
double AdjustmentScore(double theta, Count n);

// Additive bias term B_i(theta) of the plug-in estimator R_i(theta_ML). The
// ratio of sums runs over the sample (size n), R_i over the population.
double BiasTerm(double theta, Count i, Count pop_size, Count n);

// d/dtheta R_i and d^2/dtheta^2 R_i. Diagnostics only.
double DThetaSizeIndex(double theta, Count i, Count pop_size);
double D2ThetaSizeIndex(double theta, Count i, Count pop_size);

struct InfoSummary {
  double g_xi;
  double dg_xi;
  double adj_score_theta;
};

InfoSummary Info(double theta, Count n);

struct SolverOptions {
  double lower_theta = 1e-8;  // initial bracket
  double upper_theta = 1e6;   // initial bracket; C_+ for the adjusted solver
  double xi_tolerance = 1e-12;
  int max_iterations = 200;
  int probe_points = 64;
  int max_expansions = 64;
  double xi_limit = 700.0;  // |xi| never leaves [-xi_limit, xi_limit]
};

// Outcome of a score-equation solve.
struct ThetaSolution {
  enum class Kind { kInterior, kDegenerateZero, kDivergentAbove };

  Kind kind;
  double theta = 0.0;  // meaningful for kInterior
  int iterations = 0;
  double residual = 0.0;  // xi-score at the returned root
  Count k = 0;
  Count n = 0;

  bool is_interior() const { return kind == Kind::kInterior; }
};

std::string_view ToString(ThetaSolution::Kind kind);

// Maximum likelihood estimate of theta from (k, n). k = 1 has no root
// (likelihood increasing as theta -> 0) and k = n none either (increasing
// as theta -> inf); otherwise the root of ScoreXi is bracketed and bisected
// in xi. Requires 1 <= k <= n and n >= 2.
ThetaSolution SolveMle(Count k, Count n, const SolverOptions& options = {});

// Adjusted maximum likelihood estimate: root of
// ScoreTheta + AdjustmentScore. Exists for 2 <= k <= n, including k = n.
// A root above options.upper_theta is reported as kDivergentAbove and one
// below the xi floor as kDegenerateZero. Throws std::runtime_error if the
// probe grid shows more than one sign change.
ThetaSolution SolveAdjustedMle(Count k, Count n,
                               const SolverOptions& options = {});

// xi-form of the adjusted score: ScoreXi + theta * AdjustmentScore.
double AdjustedScoreXi(Count k, Count n, double xi);

}  // namespace esf

#endif  // ESF_LIKELIHOOD_H_
