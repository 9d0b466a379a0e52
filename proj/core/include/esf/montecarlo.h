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

#ifndef ESF_MONTECARLO_H_
#define ESF_MONTECARLO_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "esf/estimators.h"
#include "esf/partition.h"
#include "esf/random_stream.h"

namespace esf {

struct ExperimentConfig {
  Count pop_size = 10000;
  std::vector<Count> n_values = {20, 100, 1000};
  std::vector<double> theta_values = {1,   3,   5,   7,   9,   10,  30, 50,
                                      70,  90,  100, 300, 500, 700, 900};
  Count reps = 10000;
  std::uint64_t seed = 20220101;
  Count target_index = 1;
  std::vector<EstimatorKind> estimators = {
      EstimatorKind::kNM, EstimatorKind::kBC1, EstimatorKind::kBC2};
  ClipPolicy policy;
  // Draw a population of pop_size and subsample it instead of drawing the
  // sample directly. Same law, slower; kept for validation.
  bool subsample_from_population = false;

  // Throws std::invalid_argument on an inconsistent configuration.
  void Validate() const;
};

struct ReplicationValue {
  EstimatorKind estimator;
  double value;
  Branch branch;
};

struct Replication {
  Count k = 0;
  std::vector<ReplicationValue> values;
};

// Draws one sample partition and evaluates every requested estimator of
// R_i at population size pop_size.
Replication RunReplication(Count n, double theta, Count pop_size, Count i,
                           std::span<const EstimatorKind> estimators,
                           const ClipPolicy& policy, RandomStream& stream,
                           bool subsample_from_population = false);

struct CellStats {
  double rb_percent;
  double rrmse_percent;
  double neg_rate;
  double mc_se_rb;  // Monte Carlo standard error of rb_percent
};

// Relative bias and relative RMSE (both in percent) of values against the
// constant truth, plus the share of negative values.
CellStats SummarizeCell(std::span<const double> values, double truth);

struct CellSummary {
  Count n;
  double theta;
  Count pop_size;
  Count target_index;
  EstimatorKind estimator;
  Count reps;
  std::uint64_t seed;
  double rb_percent;
  double rrmse_percent;
  double neg_rate;
  double mc_se_rb;
};

struct ExperimentResult {
  std::vector<CellSummary> cells;
  // One entry per aborted replication.
  std::vector<std::string> diagnostics;
};

// Runs every (n, theta) cell, n ascending then theta ascending, estimators
// in configured order. Replication r of cell (n, theta) draws from the
// stream derived from (seed, n, theta, r), and values are reduced in
// replication order, so the result does not depend on workers.
// workers = 0 uses the hardware concurrency.
ExperimentResult RunExperiment(const ExperimentConfig& config,
                               unsigned workers = 1);

// The stream used for replication rep of cell (n, theta).
RandomStream ReplicationStream(std::uint64_t seed, Count n, double theta,
                               Count rep);

}  // namespace esf

#endif  // ESF_MONTECARLO_H_
