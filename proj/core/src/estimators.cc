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

#include "esf/estimators.h"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <string>

#include "esf/ewens.h"

namespace esf {

namespace {

void RequireSizes(Count k, Count n, Count pop_size) {
  if (k < 1 || k > n) {
    throw std::domain_error("need 1 <= k <= n, got k=" + std::to_string(k) +
                            " n=" + std::to_string(n));
  }
  if (n < 2) throw std::domain_error("sample size must be at least 2");
  if (n > pop_size) {
    throw std::domain_error("sample size n=" + std::to_string(n) +
                            " exceeds population size N=" +
                            std::to_string(pop_size));
  }
}

SolverOptions SolverFor(const ClipPolicy& policy) {
  SolverOptions options;
  options.lower_theta = std::min(options.lower_theta, policy.theta_floor);
  options.upper_theta = policy.c_plus;
  return options;
}

}  // namespace

void ClipPolicy::Validate() const {
  if (!(theta_floor > 0.0) || !(theta_floor < c_plus)) {
    throw std::invalid_argument("clip policy needs 0 < theta_floor < c_plus");
  }
}

std::string_view ToString(EstimatorKind kind) {
  switch (kind) {
    case EstimatorKind::kNM:
      return "nm";
    case EstimatorKind::kBC1:
      return "bc1";
    case EstimatorKind::kBC2:
      return "bc2";
    case EstimatorKind::kEtaUMVUE:
      return "eta";
    case EstimatorKind::kRisk:
      return "risk";
  }
  return "unknown";
}

std::string_view ToString(Branch branch) {
  switch (branch) {
    case Branch::kK1Zero:
      return "K1Zero";
    case Branch::kInterior:
      return "Interior";
    case Branch::kClippedAtCPlus:
      return "ClippedAtCPlus";
    case Branch::kFloored:
      return "Floored";
  }
  return "Unknown";
}

std::optional<EstimatorKind> ParseEstimatorKind(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  for (auto kind : {EstimatorKind::kNM, EstimatorKind::kBC1,
                    EstimatorKind::kBC2, EstimatorKind::kEtaUMVUE,
                    EstimatorKind::kRisk}) {
    if (lower == ToString(kind)) return kind;
  }
  return std::nullopt;
}

EstimateRecord ApplyScheme(const ThetaSolution& solution,
                           const ThetaFunction& f, const ClipPolicy& policy,
                           EstimatorKind kind, const ThetaFunction& clipped) {
  policy.Validate();
  EstimateRecord record{kind};
  switch (solution.kind) {
    case ThetaSolution::Kind::kDegenerateZero:
      if (solution.k == 1) {
        record.value = policy.value_at_k1;
        record.theta_used = 0.0;
        record.branch = Branch::kK1Zero;
      } else {
        record.value = f(policy.theta_floor);
        record.theta_used = policy.theta_floor;
        record.branch = Branch::kFloored;
      }
      return record;
    case ThetaSolution::Kind::kInterior:
      if (solution.theta <= policy.c_plus) {
        record.value = f(solution.theta);
        record.theta_used = solution.theta;
        record.branch = Branch::kInterior;
        return record;
      }
      break;
    case ThetaSolution::Kind::kDivergentAbove:
      break;
  }
  record.value = clipped ? clipped(policy.c_plus) : f(policy.c_plus);
  record.theta_used = policy.c_plus;
  record.branch = Branch::kClippedAtCPlus;
  return record;
}

EstimateRecord EstimateNm(Count k, Count n, Count i, Count pop_size,
                          const ClipPolicy& policy) {
  RequireSizes(k, n, pop_size);
  const auto r_i = [i, pop_size](double theta) {
    return ExpectedSizeIndex(theta, i, pop_size);
  };
  return ApplyScheme(SolveMle(k, n, SolverFor(policy)), r_i, policy,
                     EstimatorKind::kNM);
}

EstimateRecord EstimateBc1(Count k, Count n, Count i, Count pop_size,
                           const ClipPolicy& policy) {
  RequireSizes(k, n, pop_size);
  const auto corrected = [i, pop_size, n](double theta) {
    return ExpectedSizeIndex(theta, i, pop_size) -
           BiasTerm(theta, i, pop_size, n);
  };
  const auto r_i = [i, pop_size](double theta) {
    return ExpectedSizeIndex(theta, i, pop_size);
  };
  return ApplyScheme(SolveMle(k, n, SolverFor(policy)), corrected, policy,
                     EstimatorKind::kBC1, r_i);
}

EstimateRecord EstimateBc2(Count k, Count n, Count i, Count pop_size,
                           const ClipPolicy& policy) {
  RequireSizes(k, n, pop_size);
  const auto r_i = [i, pop_size](double theta) {
    return ExpectedSizeIndex(theta, i, pop_size);
  };
  return ApplyScheme(SolveAdjustedMle(k, n, SolverFor(policy)), r_i, policy,
                     EstimatorKind::kBC2);
}

EstimateRecord EstimateSizeIndex(EstimatorKind kind, Count k, Count n,
                                 Count i, Count pop_size,
                                 const ClipPolicy& policy) {
  switch (kind) {
    case EstimatorKind::kNM:
      return EstimateNm(k, n, i, pop_size, policy);
    case EstimatorKind::kBC1:
      return EstimateBc1(k, n, i, pop_size, policy);
    case EstimatorKind::kBC2:
      return EstimateBc2(k, n, i, pop_size, policy);
    default:
      throw std::invalid_argument("not a size-index estimator: " +
                                  std::string(ToString(kind)));
  }
}

EstimateRecord EstimatePopulationNumTypes(Count k, Count n, Count pop_size,
                                          const ClipPolicy& policy) {
  RequireSizes(k, n, pop_size);
  const auto eta = [pop_size](double theta) {
    return ExpectedNumTypes(theta, pop_size);
  };
  auto record = ApplyScheme(SolveMle(k, n, SolverFor(policy)), eta, policy,
                            EstimatorKind::kEtaUMVUE);
  if (record.branch == Branch::kK1Zero) record.value = policy.eta_at_k1;
  return record;
}

EstimateRecord PopulationUniqueRisk(Count k, Count n, Count pop_size,
                                    EstimatorKind scheme,
                                    const ClipPolicy& policy) {
  auto record = EstimateSizeIndex(scheme, k, n, 1, pop_size, policy);
  record.sampling_ratio =
      static_cast<double>(n) / static_cast<double>(pop_size);
  record.raw_estimate = record.value;
  record.value = record.sampling_ratio * record.raw_estimate;
  record.kind = EstimatorKind::kRisk;
  record.scheme = scheme;
  return record;
}

}  // namespace esf
