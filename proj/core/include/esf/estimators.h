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

#ifndef ESF_ESTIMATORS_H_
#define ESF_ESTIMATORS_H_

#include <functional>
#include <optional>
#include <string_view>

#include "esf/likelihood.h"
#include "esf/partition.h"

namespace esf {

// Clipping of estimated theta to the admissible set (0, c_plus].
struct ClipPolicy {
  double c_plus = 1e6;
  // Used in place of a non-positive adjusted solution when k > 1.
  double theta_floor = 1e-8;
  // R_i estimate when k = 1.
  double value_at_k1 = 0.0;
  // Estimate of E[K_N] when k = 1. K_N >= 1 always; set to 0 for the
  // theta -> 0 limit of eta instead.
  double eta_at_k1 = 1.0;

  // Throws std::invalid_argument unless 0 < theta_floor < c_plus.
  void Validate() const;
};

enum class EstimatorKind { kNM, kBC1, kBC2, kEtaUMVUE, kRisk };
enum class Branch { kK1Zero, kInterior, kClippedAtCPlus, kFloored };

std::string_view ToString(EstimatorKind kind);
std::string_view ToString(Branch branch);

// "nm", "bc1", "bc2", "eta", "risk" (case-insensitive).
std::optional<EstimatorKind> ParseEstimatorKind(std::string_view name);

struct EstimateRecord {
  EstimatorKind kind;
  double value = 0.0;
  double theta_used = 0.0;
  Branch branch = Branch::kInterior;
  // Set for kRisk only.
  double sampling_ratio = 0.0;
  double raw_estimate = 0.0;
  EstimatorKind scheme = EstimatorKind::kNM;
};

using ThetaFunction = std::function<double(double)>;

// The clipped estimation scheme shared by every estimator:
//   k = 1                 -> policy.value_at_k1            (kK1Zero)
//   non-positive root     -> f(theta_floor)                (kFloored)
//   root in (0, c_plus]   -> f(root)                       (kInterior)
//   root above c_plus     -> clipped(c_plus)               (kClippedAtCPlus)
// clipped defaults to f. The bias-corrected plug-in uses the uncorrected
// R_i at c_plus.
EstimateRecord ApplyScheme(const ThetaSolution& solution,
                           const ThetaFunction& f, const ClipPolicy& policy,
                           EstimatorKind kind,
                           const ThetaFunction& clipped = nullptr);

// R_i(theta_ML).
EstimateRecord EstimateNm(Count k, Count n, Count i, Count pop_size,
                          const ClipPolicy& policy = {});

// R_i(theta_ML) - B_i(theta_ML). Not truncated at zero.
EstimateRecord EstimateBc1(Count k, Count n, Count i, Count pop_size,
                           const ClipPolicy& policy = {});

// R_i(theta_A) at the adjusted maximum likelihood root.
EstimateRecord EstimateBc2(Count k, Count n, Count i, Count pop_size,
                           const ClipPolicy& policy = {});

// Dispatches on kind; kind must be one of kNM, kBC1, kBC2.
EstimateRecord EstimateSizeIndex(EstimatorKind kind, Count k, Count n,
                                 Count i, Count pop_size,
                                 const ClipPolicy& policy = {});

// eta_N(theta_ML), an estimate of the number of types in the population.
EstimateRecord EstimatePopulationNumTypes(Count k, Count n, Count pop_size,
                                          const ClipPolicy& policy = {});

// Risk of "population and sample unique": f * R_1 hat with f = n / N.
// value holds the risk, raw_estimate the R_1 estimate (population uniques).
EstimateRecord PopulationUniqueRisk(Count k, Count n, Count pop_size,
                                    EstimatorKind scheme,
                                    const ClipPolicy& policy = {});

}  // namespace esf

#endif  // ESF_ESTIMATORS_H_
