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

#include "esf/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>

#include "esf/ewens.h"
#include "esf/numeric.h"
#include "esf/sampler.h"

namespace esf {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Runs task(index) for index in [0, count) on up to `workers` threads.
void ParallelFor(std::size_t count, unsigned workers,
                 const std::function<void(std::size_t)>& task) {
  workers = std::max(1u, std::min<unsigned>(workers, count));
  if (workers == 1) {
    for (std::size_t idx = 0; idx < count; ++idx) task(idx);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&] {
      for (std::size_t idx = next++; idx < count; idx = next++) task(idx);
    });
  }
}

template <typename T>
std::vector<T> SortedUnique(std::vector<T> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

Partition DrawSample(Count n, double theta, Count pop_size,
                     RandomStream& stream, bool subsample_from_population) {
  if (!subsample_from_population) return SamplePartition(n, theta, stream);
  const Partition population = SamplePartition(pop_size, theta, stream);
  return SubsamplePartition(population, n, stream);
}

// Estimates for one value of k; depends on the sample only through k.
struct KOutcome {
  std::vector<ReplicationValue> values;
  std::optional<std::string> error;
};

KOutcome EvaluateK(Count k, Count n, Count i, Count pop_size,
                   std::span<const EstimatorKind> estimators,
                   const ClipPolicy& policy) {
  KOutcome outcome;
  try {
    for (auto kind : estimators) {
      const auto record = EstimateSizeIndex(kind, k, n, i, pop_size, policy);
      outcome.values.push_back({kind, record.value, record.branch});
    }
  } catch (const std::exception& e) {
    outcome.values.clear();
    outcome.error = e.what();
  }
  return outcome;
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (pop_size < 2) throw std::invalid_argument("N must be at least 2");
  if (n_values.empty()) throw std::invalid_argument("n_values is empty");
  for (Count n : n_values) {
    if (n < 2 || n > pop_size) {
      throw std::invalid_argument("sample size " + std::to_string(n) +
                                  " outside [2, N=" +
                                  std::to_string(pop_size) + "]");
    }
  }
  if (theta_values.empty()) {
    throw std::invalid_argument("theta_values is empty");
  }
  for (double theta : theta_values) {
    if (!(theta > 0.0) || !std::isfinite(theta)) {
      throw std::invalid_argument("theta values must be positive and finite");
    }
  }
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (target_index < 1 || target_index > pop_size) {
    throw std::invalid_argument("target index i outside [1, N]");
  }
  if (estimators.empty()) throw std::invalid_argument("no estimators");
  for (auto kind : estimators) {
    if (kind != EstimatorKind::kNM && kind != EstimatorKind::kBC1 &&
        kind != EstimatorKind::kBC2) {
      throw std::invalid_argument("simulation estimators are nm, bc1, bc2");
    }
  }
  policy.Validate();
}

Replication RunReplication(Count n, double theta, Count pop_size, Count i,
                           std::span<const EstimatorKind> estimators,
                           const ClipPolicy& policy, RandomStream& stream,
                           bool subsample_from_population) {
  const Partition sample =
      DrawSample(n, theta, pop_size, stream, subsample_from_population);
  Replication replication{sample.k(), {}};
  for (auto kind : estimators) {
    const auto record =
        EstimateSizeIndex(kind, sample.k(), n, i, pop_size, policy);
    replication.values.push_back({kind, record.value, record.branch});
  }
  return replication;
}

CellStats SummarizeCell(std::span<const double> values, double truth) {
  if (!(truth > 0.0)) throw std::domain_error("truth must be positive");
  if (values.empty()) throw std::invalid_argument("no values to summarize");
  const double count = static_cast<double>(values.size());
  CompensatedSum error;
  CompensatedSum squared;
  std::size_t negatives = 0;
  for (double v : values) {
    const double e = v - truth;
    error += e;
    squared += e * e;
    if (v < 0.0) ++negatives;
  }
  const double mean_error = error.value() / count;
  CompensatedSum centered;
  for (double v : values) {
    const double c = v - truth - mean_error;
    centered += c * c;
  }
  const double se =
      values.size() > 1
          ? std::sqrt(centered.value() / (count - 1.0)) / std::sqrt(count)
          : 0.0;
  return CellStats{mean_error / truth * 100.0,
                   std::sqrt(squared.value() / count) / truth * 100.0,
                   static_cast<double>(negatives) / count,
                   se / truth * 100.0};
}

RandomStream ReplicationStream(std::uint64_t seed, Count n, double theta,
                               Count rep) {
  return RandomStream::Derive(
      seed, {static_cast<std::uint64_t>(n), std::bit_cast<std::uint64_t>(theta),
             static_cast<std::uint64_t>(rep)});
}

ExperimentResult RunExperiment(const ExperimentConfig& config,
                               unsigned workers) {
  config.Validate();
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());

  const auto reps = static_cast<std::size_t>(config.reps);
  ExperimentResult result;
  for (Count n : SortedUnique(config.n_values)) {
    for (double theta : SortedUnique(config.theta_values)) {
      std::vector<Count> ks(reps);
      ParallelFor(reps, workers, [&](std::size_t rep) {
        auto stream =
            ReplicationStream(config.seed, n, theta, static_cast<Count>(rep));
        ks[rep] = DrawSample(n, theta, config.pop_size, stream,
                             config.subsample_from_population)
                      .k();
      });

      const auto distinct = SortedUnique(ks);
      std::vector<KOutcome> outcomes(distinct.size());
      ParallelFor(distinct.size(), workers, [&](std::size_t idx) {
        outcomes[idx] = EvaluateK(distinct[idx], n, config.target_index,
                                  config.pop_size, config.estimators,
                                  config.policy);
      });
      std::map<Count, const KOutcome*> by_k;
      for (std::size_t idx = 0; idx < distinct.size(); ++idx) {
        by_k[distinct[idx]] = &outcomes[idx];
      }

      const double truth =
          ExpectedSizeIndex(theta, config.target_index, config.pop_size);
      std::vector<std::vector<double>> values(config.estimators.size());
      for (std::size_t rep = 0; rep < reps; ++rep) {
        const KOutcome& outcome = *by_k.at(ks[rep]);
        if (outcome.error) {
          result.diagnostics.push_back(
              "n=" + std::to_string(n) + " theta=" + std::to_string(theta) +
              " rep=" + std::to_string(rep) + " k=" + std::to_string(ks[rep]) +
              ": " + *outcome.error);
          continue;
        }
        for (std::size_t e = 0; e < values.size(); ++e) {
          values[e].push_back(outcome.values[e].value);
        }
      }
      for (std::size_t e = 0; e < values.size(); ++e) {
        CellSummary cell{n,
                         theta,
                         config.pop_size,
                         config.target_index,
                         config.estimators[e],
                         static_cast<Count>(values[e].size()),
                         config.seed,
                         kNaN,
                         kNaN,
                         kNaN,
                         kNaN};
        if (!values[e].empty()) {
          const auto stats = SummarizeCell(values[e], truth);
          cell.rb_percent = stats.rb_percent;
          cell.rrmse_percent = stats.rrmse_percent;
          cell.neg_rate = stats.neg_rate;
          cell.mc_se_rb = stats.mc_se_rb;
        }
        result.cells.push_back(cell);
      }
    }
  }
  return result;
}

}  // namespace esf
