// SPDX-License-Identifier: Apache-2.0
//
// irsnet: power control and coordinated passive beamforming for
// distributed-IRS interference networks.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef IRSNET_EXPERIMENT_HPP
#define IRSNET_EXPERIMENT_HPP

#include "irsnet/baselines.hpp"
#include "irsnet/validation.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace irsnet {

enum class ExperimentKind { convergence, snr_sweep, irs_sweep, validate };

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_from_string(const std::string& name);

// How an SNR value in dB is turned into P_max.
//   transmit: P_max = sigma_d2 * 10^(snr/10)
//   received: P_max = sigma_d2 * 10^(snr/10) / G, where G is the layout's mean
//             direct-pair cascade gain (see mean_cascade_gain)
enum class SnrReference { transmit, received };

std::string to_string(SnrReference ref);

double p_max_from_snr(double snr_db, double sigma_d2, SnrReference ref = SnrReference::transmit,
                      double cascade_gain = 1.0);

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::convergence;
  Scenario scenario;
  int trials = 1;
  std::uint64_t seed = 1;
  // Operating point for convergence and irs_sweep; unset keeps scenario.p_max.
  std::optional<double> snr_db = 35.0;
  SnrReference snr_reference = SnrReference::received;
  std::vector<double> snr_grid_db;
  std::vector<int> l_grid;
  std::vector<SchemeId> schemes{SchemeId::joint, SchemeId::power_only, SchemeId::phase_only};
  SolverOptions solver;
  std::string output_path = "results.csv";
  bool json_summary = false;
  // Wall-clock timings make reruns differ; off means the wall_ms column is 0.
  bool record_timing = false;
  int workers = 1;

  // Throws ValidationError naming the offending key.
  void validate() const;
};

// Unknown keys, type mismatches and constraint violations throw ValidationError
// with the dotted key path as field().
ExperimentConfig config_from_json(const nlohmann::json& doc);
// An empty or whitespace-only file yields the defaults.
ExperimentConfig load_config(const std::string& path);
nlohmann::json to_json(const ExperimentConfig& config);
nlohmann::json to_json(const Scenario& scenario);

struct ResultRow {
  std::string experiment;
  std::string scheme;
  std::uint64_t seed = 0;
  int trial = 0;
  double sweep_value = 0.0;  // SNR dB, L, or iteration index
  double f1 = 0.0;
  double sum_rate = 0.0;
  int iterations = 0;
  double wall_ms = 0.0;
  double fast_path_fraction = 0.0;
};

struct SummaryRow {
  std::string experiment;
  std::string scheme;
  double sweep_value = 0.0;
  int n = 0;
  double mean_sum_rate = 0.0;
  double std_sum_rate = 0.0;  // sample standard deviation (n - 1)
  double mean_f1 = 0.0;
  double mean_iterations = 0.0;
};

struct ExperimentOutput {
  std::vector<ResultRow> rows;
  std::vector<SummaryRow> summary;
  std::vector<CheckResult> checks;  // validate only
  bool checks_passed = true;
};

// Runs in memory; nothing is written.
ExperimentOutput run_experiment(const ExperimentConfig& config);

// Group raw rows by (scheme, sweep_value). For convergence rows only the final
// iterate of every run contributes.
std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows);

std::string version_string();

// Writes the raw CSV to config.output_path, the summary next to it
// (<stem>.summary.csv) and optionally <stem>.summary.json. Throws
// std::runtime_error if a file cannot be written or a value is not finite.
void write_outputs(const ExperimentConfig& config, const ExperimentOutput& output);

std::string format_rows_csv(const ExperimentConfig& config, const std::vector<ResultRow>& rows);

}  // namespace irsnet

#endif  // IRSNET_EXPERIMENT_HPP
