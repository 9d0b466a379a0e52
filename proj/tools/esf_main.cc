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

// esf: command-line front end for the Ewens sampling formula estimators.
//
//   esf pmf      --n 3 --theta 1 --level k
//   esf estimate --k 2 --n 3 --N 100 --i 1 --est nm
//   esf risk     --k 2 --n 3 --N 100 --scheme bc2
//   esf sample   --n 6 --theta 5 --count 10 --seed 1
//   esf simulate --config study.cfg --out results/
//   esf selftest
//
// Output is CSV on stdout. Failures print one "esf: error: ..." line on
// stderr and exit nonzero (2 for bad arguments, 1 otherwise).

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "esf/estimators.h"
#include "esf/ewens.h"
#include "esf/likelihood.h"
#include "esf/montecarlo.h"
#include "esf/numeric.h"
#include "esf/report.h"
#include "esf/sampler.h"
#include "esf/stirling.h"

namespace {

using esf::Count;
using esf::FormatNumber;

constexpr const char* kOutputDirEnv = "ESF_OUTPUT_DIR";

// Bad user input; exits with status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PmfArgs {
  Count n = 0;
  double theta = 1.0;
  std::string level = "k";
  Count k = 0;
};

int RunPmf(const PmfArgs& args) {
  if (args.n < 1) throw UsageError("--n must be >= 1");
  if (!(args.theta > 0.0)) throw UsageError("--theta must be positive");
  if (args.level == "k") {
    const auto table = esf::SharedStirlingTable(args.n);
    std::cout << "k,probability\n";
    for (Count k = 1; k <= args.n; ++k) {
      if (args.k != 0 && k != args.k) continue;
      std::cout << k << ','
                << FormatNumber(std::exp(esf::KnLogPmf(args.n, k, args.theta,
                                                       *table)))
                << '\n';
    }
    return 0;
  }
  if (args.level == "partition") {
    if (args.n > esf::kDefaultEnumerationCap) {
      throw UsageError("partition-level output is limited to n <= " +
                       std::to_string(esf::kDefaultEnumerationCap));
    }
    std::cout << "k,s,probability\n";
    for (const auto& p : esf::EnumeratePartitions(args.n)) {
      if (args.k != 0 && p.k() != args.k) continue;
      std::cout << p.k() << ',' << p.ToString() << ','
                << FormatNumber(std::exp(esf::EwensLogPmf(p, args.theta)))
                << '\n';
    }
    return 0;
  }
  throw UsageError("--level must be 'k' or 'partition'");
}

struct EstimateArgs {
  Count k = 0;
  Count n = 0;
  Count pop_size = 0;
  Count i = 1;
  std::string estimator = "nm";
  std::string scheme = "nm";
  esf::ClipPolicy policy;
};

void CheckBounds(const EstimateArgs& args) {
  if (args.n < 2) throw UsageError("--n must be >= 2");
  if (args.k < 1 || args.k > args.n) throw UsageError("need 1 <= k <= n");
  if (args.n > args.pop_size) throw UsageError("need n <= N");
  if (args.i < 1 || args.i > args.pop_size) throw UsageError("need 1 <= i <= N");
  try {
    args.policy.Validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int RunRisk(const EstimateArgs& args) {
  CheckBounds(args);
  const auto scheme = esf::ParseEstimatorKind(args.scheme);
  if (!scheme || (*scheme != esf::EstimatorKind::kNM &&
                  *scheme != esf::EstimatorKind::kBC1 &&
                  *scheme != esf::EstimatorKind::kBC2)) {
    throw UsageError("--scheme must be nm, bc1 or bc2");
  }
  const auto rec = esf::PopulationUniqueRisk(args.k, args.n, args.pop_size,
                                             *scheme, args.policy);
  std::cout << "estimator,scheme,value,theta_used,branch,f,risk\n"
            << esf::ToString(rec.kind) << ',' << esf::ToString(rec.scheme)
            << ',' << FormatNumber(rec.raw_estimate) << ','
            << FormatNumber(rec.theta_used) << ',' << esf::ToString(rec.branch)
            << ',' << FormatNumber(rec.sampling_ratio) << ','
            << FormatNumber(rec.value) << '\n';
  return 0;
}

int RunEstimate(const EstimateArgs& args) {
  const auto kind = esf::ParseEstimatorKind(args.estimator);
  if (!kind) throw UsageError("unknown estimator '" + args.estimator + "'");
  if (*kind == esf::EstimatorKind::kRisk) return RunRisk(args);
  CheckBounds(args);
  const auto rec =
      *kind == esf::EstimatorKind::kEtaUMVUE
          ? esf::EstimatePopulationNumTypes(args.k, args.n, args.pop_size,
                                            args.policy)
          : esf::EstimateSizeIndex(*kind, args.k, args.n, args.i,
                                   args.pop_size, args.policy);
  std::cout << "estimator,value,theta_used,branch\n"
            << esf::ToString(rec.kind) << ',' << FormatNumber(rec.value) << ','
            << FormatNumber(rec.theta_used) << ',' << esf::ToString(rec.branch)
            << '\n';
  return 0;
}

struct SampleArgs {
  Count n = 0;
  double theta = 1.0;
  Count count = 1;
  std::uint64_t seed = 1;
};

int RunSample(const SampleArgs& args) {
  if (args.n < 1) throw UsageError("--n must be >= 1");
  if (!(args.theta > 0.0)) throw UsageError("--theta must be positive");
  if (args.count < 1) throw UsageError("--count must be >= 1");
  std::ostringstream out;
  out << "rep,k,s\n";
  for (Count rep = 1; rep <= args.count; ++rep) {
    auto stream = esf::ReplicationStream(args.seed, args.n, args.theta, rep);
    const auto p = esf::SamplePartition(args.n, args.theta, stream);
    out << rep << ',' << p.k() << ',' << p.ToString() << '\n';
  }
  std::cout << out.str();
  return 0;
}

struct SimulateArgs {
  std::string config_path;
  std::string out_dir;
  std::vector<std::string> assignments;
  unsigned workers = 1;
};

int RunSimulate(const SimulateArgs& args,
                const std::vector<std::pair<std::string, std::string>>& flags) {
  esf::ExperimentConfig config;
  try {
    if (!args.config_path.empty()) {
      std::ifstream in(args.config_path);
      if (!in) throw UsageError("cannot read config '" + args.config_path + "'");
      std::stringstream text;
      text << in.rdbuf();
      config = esf::ParseConfig(text.str());
    }
    for (const auto& [key, value] : flags) esf::SetConfigValue(config, key, value);
    for (const auto& assignment : args.assignments) {
      const auto eq = assignment.find('=');
      if (eq == std::string::npos) {
        throw UsageError("--set expects key=value, got '" + assignment + "'");
      }
      esf::SetConfigValue(config, assignment.substr(0, eq),
                          assignment.substr(eq + 1));
    }
    config.Validate();
  } catch (const esf::ConfigError& e) {
    throw UsageError(e.what());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  std::string out_dir = args.out_dir;
  if (out_dir.empty()) {
    const char* env = std::getenv(kOutputDirEnv);
    out_dir = env != nullptr && *env != '\0' ? env : ".";
  }
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw std::runtime_error("cannot create output directory '" + out_dir +
                             "': " + ec.message());
  }

  esf::RunManifest manifest;
  manifest.tool_version = std::string(esf::ToolVersion());
  manifest.config_digest = esf::ConfigDigest(config);
  manifest.seed = config.seed;
  manifest.canonical_config = esf::CanonicalConfig(config);
  manifest.started = esf::UtcNow();
  const auto result = esf::RunExperiment(config, args.workers);
  manifest.finished = esf::UtcNow();
  manifest.row_count = static_cast<std::int64_t>(result.cells.size());

  const auto csv_path = std::filesystem::path(out_dir) / "summary.csv";
  const auto manifest_path = std::filesystem::path(out_dir) / "manifest.json";
  {
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot write " + csv_path.string());
    esf::WriteSummaryCsv(csv, result);
    std::ofstream json(manifest_path, std::ios::binary);
    if (!json) throw std::runtime_error("cannot write " + manifest_path.string());
    json << esf::ManifestJson(manifest);
    if (!csv || !json) throw std::runtime_error("write to " + out_dir + " failed");
  }
  std::cout << "wrote " << result.cells.size() << " rows to "
            << csv_path.string() << '\n';
  if (!result.diagnostics.empty()) {
    throw std::runtime_error(std::to_string(result.diagnostics.size()) +
                             " replications aborted; first: " +
                             result.diagnostics.front());
  }
  return 0;
}

// Quick exact-oracle checks that need no data files.
int RunSelftest() {
  struct Check {
    const char* name;
    std::function<bool()> passes;
  };
  const std::vector<Check> checks = {
      {"pmf normalization n<=10",
       [] {
         for (Count n = 1; n <= 10; ++n) {
           for (double theta : {0.1, 1.0, 5.0, 50.0}) {
             double total = 0;
             for (const auto& p : esf::EnumeratePartitions(n)) {
               total += std::exp(esf::EwensLogPmf(p, theta));
             }
             if (std::abs(total - 1.0) > 1e-10) return false;
           }
         }
         return true;
       }},
      {"stirling s(4,2)=11",
       [] {
         return std::abs(std::exp(esf::StirlingTable(4).log_s(4, 2)) - 11.0) <
                1e-10;
       }},
      {"mle(2,3)=sqrt(2)",
       [] {
         const auto sol = esf::SolveMle(2, 3);
         return sol.is_interior() && std::abs(sol.theta - std::sqrt(2.0)) < 1e-10;
       }},
      {"adjusted mle(2,2)=1",
       [] {
         const auto sol = esf::SolveAdjustedMle(2, 2);
         return sol.is_interior() && std::abs(sol.theta - 1.0) < 1e-10;
       }},
      {"sum i R_i = N",
       [] {
         esf::CompensatedSum total;
         for (Count i = 1; i <= 1000; ++i) {
           total += static_cast<double>(i) * esf::ExpectedSizeIndex(10.0, i, 1000);
         }
         return std::abs(total.value() - 1000.0) < 1e-7;
       }},
  };
  bool all = true;
  for (const auto& check : checks) {
    bool ok = false;
    try {
      ok = check.passes();
    } catch (const std::exception&) {
      ok = false;
    }
    std::cout << (ok ? "PASS " : "FAIL ") << check.name << '\n';
    all = all && ok;
  }
  return all ? 0 : 1;
}

void AddPolicyOptions(CLI::App* cmd, esf::ClipPolicy& policy) {
  cmd->add_option("--c-plus", policy.c_plus, "Clipping ceiling C+")
      ->capture_default_str();
  cmd->add_option("--theta-floor", policy.theta_floor,
                  "Theta used for a non-positive adjusted solution")
      ->capture_default_str();
  cmd->add_option("--eta-at-k1", policy.eta_at_k1,
                  "Estimate of K_N reported when k = 1")
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ewens sampling formula: exact laws, estimators of expected "
               "size indices, and the Monte Carlo study"};
  app.set_version_flag("--version", std::string(esf::ToolVersion()));
  app.require_subcommand(1);

  PmfArgs pmf;
  auto* pmf_cmd = app.add_subcommand("pmf", "Exact PMF of K_n or of partitions");
  pmf_cmd->add_option("--n", pmf.n, "Sample size")->required();
  pmf_cmd->add_option("--theta", pmf.theta, "Diversity parameter")->required();
  pmf_cmd->add_option("--level", pmf.level, "k or partition")
      ->capture_default_str();
  pmf_cmd->add_option("--k", pmf.k, "Only rows with this number of types");

  EstimateArgs est;
  auto* est_cmd = app.add_subcommand("estimate", "Estimate R_i or E[K_N] from (k, n)");
  est_cmd->add_option("--k", est.k, "Observed number of types")->required();
  est_cmd->add_option("--n", est.n, "Sample size")->required();
  est_cmd->add_option("--N", est.pop_size, "Population size")->required();
  est_cmd->add_option("--i", est.i, "Size index")->capture_default_str();
  est_cmd->add_option("--est", est.estimator, "nm, bc1, bc2, eta or risk")
      ->capture_default_str();
  est_cmd->add_option("--scheme", est.scheme, "R_1 estimator for --est risk")
      ->capture_default_str();
  AddPolicyOptions(est_cmd, est.policy);

  EstimateArgs risk;
  auto* risk_cmd =
      app.add_subcommand("risk", "Population-unique risk f * R_1 with f = n/N");
  risk_cmd->add_option("--k", risk.k, "Observed number of types")->required();
  risk_cmd->add_option("--n", risk.n, "Sample size")->required();
  risk_cmd->add_option("--N", risk.pop_size, "Population size")->required();
  risk_cmd->add_option("--scheme", risk.scheme, "nm, bc1 or bc2")
      ->capture_default_str();
  AddPolicyOptions(risk_cmd, risk.policy);

  SampleArgs sample;
  auto* sample_cmd = app.add_subcommand("sample", "Draw Ewens partitions");
  sample_cmd->add_option("--n", sample.n, "Sample size")->required();
  sample_cmd->add_option("--theta", sample.theta, "Diversity parameter")
      ->required();
  sample_cmd->add_option("--count", sample.count, "Number of draws")
      ->capture_default_str();
  sample_cmd->add_option("--seed", sample.seed, "Master seed")
      ->capture_default_str();

  SimulateArgs sim;
  std::string reps, seed, estimators, n_values, theta_values, pop_size, index,
      c_plus;
  auto* sim_cmd = app.add_subcommand(
      "simulate", "Run the relative bias / RRMSE / negative-rate study");
  sim_cmd->add_option("--config", sim.config_path, "key = value config file");
  sim_cmd->add_option("--out", sim.out_dir,
                      std::string("Output directory (default $") +
                          kOutputDirEnv + " or .)");
  sim_cmd->add_option("--workers", sim.workers, "Worker threads (0 = all)")
      ->capture_default_str();
  sim_cmd->add_option("--set", sim.assignments, "Override: key=value");
  sim_cmd->add_option("--reps", reps, "Replications per cell");
  sim_cmd->add_option("--seed", seed, "Master seed");
  sim_cmd->add_option("--estimators", estimators, "e.g. nm,bc1,bc2");
  sim_cmd->add_option("--n-values", n_values, "e.g. 20,100,1000");
  sim_cmd->add_option("--theta-values", theta_values, "e.g. 1,3,5");
  sim_cmd->add_option("--N", pop_size, "Population size");
  sim_cmd->add_option("--i", index, "Size index");
  sim_cmd->add_option("--c-plus", c_plus, "Clipping ceiling C+");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run exact-oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "esf: error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*pmf_cmd) return RunPmf(pmf);
    if (*est_cmd) return RunEstimate(est);
    if (*risk_cmd) return RunRisk(risk);
    if (*sample_cmd) return RunSample(sample);
    if (*sim_cmd) {
      std::vector<std::pair<std::string, std::string>> flags;
      for (auto [key, value] : {std::pair{"reps", &reps}, {"seed", &seed},
                                {"estimators", &estimators},
                                {"n_values", &n_values},
                                {"theta_values", &theta_values},
                                {"N", &pop_size}, {"i", &index},
                                {"c_plus", &c_plus}}) {
        if (!value->empty()) flags.emplace_back(key, *value);
      }
      return RunSimulate(sim, flags);
    }
    if (*selftest_cmd) return RunSelftest();
  } catch (const UsageError& e) {
    std::cerr << "esf: error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "esf: error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
