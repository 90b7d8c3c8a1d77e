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

// irsnet: batch experiments for joint power control and IRS phase design.
//
//   irsnet convergence --trials 1 --out conv.csv
//   irsnet snr_sweep --snr-grid 15,25,35 --trials 100 --out snr.csv
//   irsnet irs_sweep --l-grid 2,4,6,8 --trials 100 --out irs.csv
//   irsnet validate --out report.csv
//
// Exit codes: 0 success, 1 config error, 2 runtime error, 3 validation failure.

#include "irsnet/experiment.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

struct Overrides {
  std::string config_path;
  std::optional<long long> seed;
  std::optional<int> trials;
  std::optional<double> epsilon;
  std::optional<int> max_iter;
  std::optional<std::string> noise_mode;
  std::optional<std::string> out;
  std::optional<int> workers;
  std::optional<double> snr_db;
  std::optional<std::string> snr_reference;
  std::vector<double> snr_grid;
  std::vector<int> l_grid;
  std::vector<std::string> schemes;
  bool json_summary = false;
  bool timing = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("-c,--config", o.config_path, "JSON config file; flags override its keys");
  cmd->add_option("--seed", o.seed, "base seed (trial t uses seed + t)");
  cmd->add_option("--trials", o.trials, "number of channel realizations");
  cmd->add_option("--epsilon", o.epsilon, "stop when f1 increases by at most this");
  cmd->add_option("--max-iter", o.max_iter, "outer iteration cap");
  cmd->add_option("--noise-mode", o.noise_mode, "expectation | realization");
  cmd->add_option("-o,--out", o.out, "raw CSV output path");
  cmd->add_option("--workers", o.workers, "parallel trial workers");
  cmd->add_option("--schemes", o.schemes, "joint,power_only,phase_only")->delimiter(',');
  cmd->add_option("--snr-reference", o.snr_reference, "transmit | received");
  cmd->add_flag("--json-summary", o.json_summary, "also write <stem>.summary.json");
  cmd->add_flag("--timing", o.timing, "record wall-clock time (breaks byte-identical reruns)");
}

nlohmann::json merged_config(const std::string& experiment, const Overrides& o) {
  nlohmann::json doc = nlohmann::json::object();
  if (!o.config_path.empty()) {
    std::ifstream in(o.config_path);
    if (!in) throw irsnet::ValidationError("config", "cannot open '" + o.config_path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    if (buffer.str().find_first_not_of(" \t\r\n") != std::string::npos) {
      try {
        doc = nlohmann::json::parse(buffer.str());
      } catch (const nlohmann::json::parse_error& e) {
        throw irsnet::ValidationError("config", e.what());
      }
    }
    if (!doc.is_object()) throw irsnet::ValidationError("config", "top level must be an object");
  }
  doc["experiment"] = experiment;
  if (o.seed) doc["seed"] = *o.seed;
  if (o.trials) doc["trials"] = *o.trials;
  if (o.out) doc["output_path"] = *o.out;
  if (o.workers) doc["workers"] = *o.workers;
  if (o.snr_db) doc["snr_db"] = *o.snr_db;
  if (o.snr_reference) doc["snr_reference"] = *o.snr_reference;
  if (!o.snr_grid.empty()) doc["snr_grid_db"] = o.snr_grid;
  if (!o.l_grid.empty()) doc["l_grid"] = o.l_grid;
  if (!o.schemes.empty()) doc["schemes"] = o.schemes;
  if (o.json_summary) doc["json_summary"] = true;
  if (o.timing) doc["record_timing"] = true;
  if (o.epsilon || o.max_iter || o.noise_mode) {
    if (!doc.contains("solver")) doc["solver"] = nlohmann::json::object();
    if (o.epsilon) doc["solver"]["epsilon"] = *o.epsilon;
    if (o.max_iter) doc["solver"]["max_iter"] = *o.max_iter;
    if (o.noise_mode) doc["solver"]["noise_mode"] = *o.noise_mode;
  }
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sum-rate maximization for distributed-IRS interference networks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", irsnet::version_string());

  Overrides o;
  auto* convergence = app.add_subcommand("convergence", "per-iteration f1 / sum-rate traces");
  auto* snr_sweep = app.add_subcommand("snr_sweep", "sum-rate versus SNR for each scheme");
  auto* irs_sweep = app.add_subcommand("irs_sweep", "sum-rate versus number of randomly placed IRSs");
  auto* validate = app.add_subcommand("validate", "oracle and invariant checks, pass/fail report");
  for (auto* cmd : {convergence, snr_sweep, irs_sweep, validate}) add_common(cmd, o);
  convergence->add_option("--snr-db", o.snr_db, "operating SNR in dB");
  irs_sweep->add_option("--snr-db", o.snr_db, "operating SNR in dB");
  snr_sweep->add_option("--snr-grid", o.snr_grid, "SNR points in dB")->delimiter(',');
  irs_sweep->add_option("--l-grid", o.l_grid, "IRS counts")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const std::string experiment = app.get_subcommands().front()->get_name();

  irsnet::ExperimentConfig config;
  try {
    config = irsnet::config_from_json(merged_config(experiment, o));
  } catch (const irsnet::ValidationError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  }

  try {
    const irsnet::ExperimentOutput output = irsnet::run_experiment(config);
    irsnet::write_outputs(config, output);
    if (config.experiment == irsnet::ExperimentKind::validate) {
      for (const auto& c : output.checks)
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << " worst=" << c.worst
                  << " threshold=" << c.threshold << " (" << c.detail << ")\n";
      if (!output.checks_passed) return 3;
    } else {
      for (const auto& s : output.summary)
        if (config.experiment != irsnet::ExperimentKind::convergence)
          std::cout << s.scheme << " @ " << s.sweep_value << ": mean sum-rate " << s.mean_sum_rate
                    << " (std " << s.std_sum_rate << ", n=" << s.n << ")\n";
      std::cout << "wrote " << config.output_path << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
