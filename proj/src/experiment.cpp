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

#include "irsnet/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#ifndef IRSNET_VERSION
#define IRSNET_VERSION "dev"
#endif

namespace irsnet {

using nlohmann::json;

std::string version_string() { return std::string("irsnet ") + IRSNET_VERSION; }

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::convergence: return "convergence";
    case ExperimentKind::snr_sweep: return "snr_sweep";
    case ExperimentKind::irs_sweep: return "irs_sweep";
    case ExperimentKind::validate: return "validate";
  }
  return "unknown";
}

ExperimentKind experiment_from_string(const std::string& name) {
  if (name == "convergence") return ExperimentKind::convergence;
  if (name == "snr_sweep") return ExperimentKind::snr_sweep;
  if (name == "irs_sweep") return ExperimentKind::irs_sweep;
  if (name == "validate") return ExperimentKind::validate;
  throw ValidationError("experiment", "unknown experiment '" + name + "'");
}

std::string to_string(SnrReference ref) {
  return ref == SnrReference::transmit ? "transmit" : "received";
}

double p_max_from_snr(double snr_db, double sigma_d2, SnrReference ref, double cascade_gain) {
  const double p = sigma_d2 * std::pow(10.0, snr_db / 10.0);
  return ref == SnrReference::transmit ? p : p / cascade_gain;
}

void ExperimentConfig::validate() const {
  scenario.validate();
  solver.validate();
  if (trials < 1) throw ValidationError("trials", "must be >= 1");
  if (workers < 1) throw ValidationError("workers", "must be >= 1");
  if (schemes.empty()) throw ValidationError("schemes", "must not be empty");
  if (experiment == ExperimentKind::snr_sweep && snr_grid_db.empty())
    throw ValidationError("snr_grid_db", "required and non-empty for snr_sweep");
  if (experiment == ExperimentKind::irs_sweep) {
    if (l_grid.empty()) throw ValidationError("l_grid", "required and non-empty for irs_sweep");
    for (int L : l_grid)
      if (L < 1) throw ValidationError("l_grid", "every IRS count must be >= 1");
  }
  for (double snr : snr_grid_db)
    if (!std::isfinite(snr)) throw ValidationError("snr_grid_db", "entries must be finite");
  if (output_path.empty()) throw ValidationError("output_path", "must not be empty");
}

// ---------------------------------------------------------------------------
// config parsing

namespace {

std::string join(const std::string& prefix, const std::string& key) {
  return prefix.empty() ? key : prefix + "." + key;
}

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& prefix) {
  for (const auto& item : obj.items())
    if (!known.count(item.key())) throw ValidationError(join(prefix, item.key()), "unknown key");
}

double read_number(const json& v, const std::string& key) {
  if (!v.is_number()) throw ValidationError(key, "expected a number");
  return v.get<double>();
}

long long read_integer(const json& v, const std::string& key) {
  if (!v.is_number_integer()) throw ValidationError(key, "expected an integer");
  return v.get<long long>();
}

int read_int(const json& v, const std::string& key) {
  const long long x = read_integer(v, key);
  if (x < -2147483647LL || x > 2147483647LL) throw ValidationError(key, "out of range");
  return static_cast<int>(x);
}

bool read_bool(const json& v, const std::string& key) {
  if (!v.is_boolean()) throw ValidationError(key, "expected true or false");
  return v.get<bool>();
}

std::string read_string(const json& v, const std::string& key) {
  if (!v.is_string()) throw ValidationError(key, "expected a string");
  return v.get<std::string>();
}

const json& read_array(const json& v, const std::string& key) {
  if (!v.is_array()) throw ValidationError(key, "expected an array");
  return v;
}

const json& read_object(const json& v, const std::string& key) {
  if (!v.is_object()) throw ValidationError(key, "expected an object");
  return v;
}

Point read_point(const json& v, const std::string& key) {
  if (!v.is_array() || v.size() != 2) throw ValidationError(key, "expected [x, y]");
  return {read_number(v[0], key), read_number(v[1], key)};
}

Disk read_disk(const json& v, const std::string& key) {
  read_object(v, key);
  reject_unknown(v, {"center", "radius"}, key);
  Disk d;
  if (v.contains("center")) d.center = read_point(v["center"], join(key, "center"));
  if (v.contains("radius")) d.radius = read_number(v["radius"], join(key, "radius"));
  return d;
}

Rect read_rect(const json& v, const std::string& key, Rect r) {
  read_object(v, key);
  reject_unknown(v, {"x_min", "x_max", "y_min", "y_max"}, key);
  if (v.contains("x_min")) r.x_min = read_number(v["x_min"], join(key, "x_min"));
  if (v.contains("x_max")) r.x_max = read_number(v["x_max"], join(key, "x_max"));
  if (v.contains("y_min")) r.y_min = read_number(v["y_min"], join(key, "y_min"));
  if (v.contains("y_max")) r.y_max = read_number(v["y_max"], join(key, "y_max"));
  return r;
}

json parse_file(const std::string& path, const std::string& key) {
  std::ifstream in(path);
  if (!in) throw ValidationError(key, "cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(key, std::string("malformed document: ") + e.what());
  }
}

Scenario read_scenario(const json& v, const std::string& key) {
  read_object(v, key);
  reject_unknown(v,
                 {"K", "L", "M", "source_region", "dest_region", "irs_positions", "irs_region",
                  "T0_db", "d0", "rho_si", "rho_id", "sigma_r2", "sigma_d2", "p_max"},
                 key);
  Scenario s;
  auto num = [&](const char* name, double& field) {
    if (v.contains(name)) field = read_number(v[name], join(key, name));
  };
  if (v.contains("K")) s.K = read_int(v["K"], join(key, "K"));
  if (v.contains("L")) s.L = read_int(v["L"], join(key, "L"));
  if (v.contains("M")) {
    const std::string mk = join(key, "M");
    if (v["M"].is_array()) {
      s.M.clear();
      for (const auto& m : v["M"]) s.M.push_back(read_int(m, mk));
    } else {
      s.M.assign(static_cast<std::size_t>(std::max(s.L, 0)), read_int(v["M"], mk));
    }
  } else {
    s.M.assign(static_cast<std::size_t>(std::max(s.L, 0)), 4);
  }
  if (v.contains("source_region")) s.source_region = read_disk(v["source_region"], join(key, "source_region"));
  if (v.contains("dest_region")) s.dest_region = read_disk(v["dest_region"], join(key, "dest_region"));
  if (v.contains("irs_positions")) {
    const std::string pk = join(key, "irs_positions");
    s.irs_positions.clear();
    if (!v["irs_positions"].is_null())
      for (const auto& pt : read_array(v["irs_positions"], pk)) s.irs_positions.push_back(read_point(pt, pk));
  } else if (s.L != 4) {
    s.irs_positions.clear();
  }
  if (v.contains("irs_region")) s.irs_region = read_rect(v["irs_region"], join(key, "irs_region"), s.irs_region);
  num("T0_db", s.T0_db);
  num("d0", s.d0);
  num("rho_si", s.rho_si);
  num("rho_id", s.rho_id);
  num("sigma_r2", s.sigma_r2);
  num("sigma_d2", s.sigma_d2);
  num("p_max", s.p_max);
  try {
    s.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(join(key, e.field()), e.reason());
  }
  return s;
}

SolverOptions read_solver(const json& v, const std::string& key) {
  read_object(v, key);
  reject_unknown(v, {"epsilon", "max_iter", "noise_mode", "tol_kkt", "max_ellipsoid_iter"}, key);
  SolverOptions o;
  if (v.contains("epsilon")) o.epsilon = read_number(v["epsilon"], join(key, "epsilon"));
  if (v.contains("max_iter")) o.max_iter = read_int(v["max_iter"], join(key, "max_iter"));
  if (v.contains("noise_mode")) {
    try {
      o.noise_mode = noise_mode_from_string(read_string(v["noise_mode"], join(key, "noise_mode")));
    } catch (const ValidationError& e) {
      throw ValidationError(join(key, "noise_mode"), e.reason());
    }
  }
  if (v.contains("tol_kkt")) o.dual.tol_kkt = read_number(v["tol_kkt"], join(key, "tol_kkt"));
  if (v.contains("max_ellipsoid_iter"))
    o.dual.max_iter = read_int(v["max_ellipsoid_iter"], join(key, "max_ellipsoid_iter"));
  try {
    o.validate();
  } catch (const ValidationError& e) {
    throw ValidationError(join(key, e.field()), e.reason());
  }
  return o;
}

}  // namespace

ExperimentConfig config_from_json(const json& doc) {
  read_object(doc, "<root>");
  reject_unknown(doc,
                 {"experiment", "scenario", "trials", "seed", "snr_db", "snr_reference",
                  "snr_grid_db", "l_grid", "schemes", "solver", "output_path", "json_summary",
                  "record_timing", "workers"},
                 "");
  ExperimentConfig c;
  if (doc.contains("experiment")) c.experiment = experiment_from_string(read_string(doc["experiment"], "experiment"));
  if (doc.contains("scenario")) {
    const json& s = doc["scenario"];
    c.scenario = s.is_string() ? read_scenario(parse_file(s.get<std::string>(), "scenario"), "scenario")
                               : read_scenario(s, "scenario");
  }
  if (doc.contains("trials")) c.trials = read_int(doc["trials"], "trials");
  if (doc.contains("seed")) {
    const long long seed = read_integer(doc["seed"], "seed");
    if (seed < 0) throw ValidationError("seed", "must be >= 0");
    c.seed = static_cast<std::uint64_t>(seed);
  }
  if (doc.contains("snr_db")) {
    if (doc["snr_db"].is_null()) c.snr_db.reset();
    else c.snr_db = read_number(doc["snr_db"], "snr_db");
  }
  if (doc.contains("snr_reference")) {
    const std::string ref = read_string(doc["snr_reference"], "snr_reference");
    if (ref == "transmit") c.snr_reference = SnrReference::transmit;
    else if (ref == "received") c.snr_reference = SnrReference::received;
    else throw ValidationError("snr_reference", "expected 'transmit' or 'received'");
  }
  if (doc.contains("snr_grid_db"))
    for (const auto& x : read_array(doc["snr_grid_db"], "snr_grid_db"))
      c.snr_grid_db.push_back(read_number(x, "snr_grid_db"));
  if (doc.contains("l_grid"))
    for (const auto& x : read_array(doc["l_grid"], "l_grid")) c.l_grid.push_back(read_int(x, "l_grid"));
  if (doc.contains("schemes")) {
    c.schemes.clear();
    for (const auto& x : read_array(doc["schemes"], "schemes"))
      c.schemes.push_back(scheme_from_string(read_string(x, "schemes")));
  }
  if (doc.contains("solver")) c.solver = read_solver(doc["solver"], "solver");
  if (doc.contains("output_path")) c.output_path = read_string(doc["output_path"], "output_path");
  if (doc.contains("json_summary")) c.json_summary = read_bool(doc["json_summary"], "json_summary");
  if (doc.contains("record_timing")) c.record_timing = read_bool(doc["record_timing"], "record_timing");
  if (doc.contains("workers")) c.workers = read_int(doc["workers"], "workers");
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  return config_from_json(parse_file(path, "config"));
}

json to_json(const Scenario& s) {
  json positions = json::array();
  for (const auto& p : s.irs_positions) positions.push_back({p.x, p.y});
  return json{
      {"K", s.K},
      {"L", s.L},
      {"M", s.M},
      {"source_region", {{"center", {s.source_region.center.x, s.source_region.center.y}},
                         {"radius", s.source_region.radius}}},
      {"dest_region", {{"center", {s.dest_region.center.x, s.dest_region.center.y}},
                       {"radius", s.dest_region.radius}}},
      {"irs_positions", positions},
      {"irs_region", {{"x_min", s.irs_region.x_min}, {"x_max", s.irs_region.x_max},
                      {"y_min", s.irs_region.y_min}, {"y_max", s.irs_region.y_max}}},
      {"T0_db", s.T0_db},
      {"d0", s.d0},
      {"rho_si", s.rho_si},
      {"rho_id", s.rho_id},
      {"sigma_r2", s.sigma_r2},
      {"sigma_d2", s.sigma_d2},
      {"p_max", s.p_max},
  };
}

json to_json(const ExperimentConfig& c) {
  json schemes = json::array();
  for (auto s : c.schemes) schemes.push_back(to_string(s));
  return json{
      {"experiment", to_string(c.experiment)},
      {"scenario", to_json(c.scenario)},
      {"trials", c.trials},
      {"seed", c.seed},
      {"snr_db", c.snr_db ? json(*c.snr_db) : json(nullptr)},
      {"snr_reference", to_string(c.snr_reference)},
      {"snr_grid_db", c.snr_grid_db},
      {"l_grid", c.l_grid},
      {"schemes", schemes},
      {"solver", {{"epsilon", c.solver.epsilon},
                  {"max_iter", c.solver.max_iter},
                  {"noise_mode", to_string(c.solver.noise_mode)},
                  {"tol_kkt", c.solver.dual.tol_kkt},
                  {"max_ellipsoid_iter", c.solver.dual.max_iter}}},
      {"output_path", c.output_path},
      {"json_summary", c.json_summary},
      {"record_timing", c.record_timing},
      {"workers", c.workers},
  };
}

// ---------------------------------------------------------------------------
// running

namespace {

struct Instance {
  Scenario scenario;
  Layout layout;
  EffectiveChannels eff;
};

Instance draw(const Scenario& scenario, std::uint64_t seed, NoiseMode mode) {
  Instance inst;
  inst.scenario = scenario;
  inst.layout = sample_layout(scenario, seed);
  const ChannelRealization real =
      sample_channels(scenario, inst.layout, seed, mode == NoiseMode::realization);
  inst.eff = assemble_effective(real, mode, scenario.sigma_r2);
  return inst;
}

void set_operating_point(Instance& inst, double snr_db, SnrReference ref) {
  const double gain = ref == SnrReference::received ? mean_cascade_gain(inst.scenario, inst.layout) : 1.0;
  inst.scenario.p_max = p_max_from_snr(snr_db, inst.scenario.sigma_d2, ref, gain);
}

double fast_fraction(const ConvergenceTrace& trace) {
  const int n = trace.iterations();
  if (n == 0) return 0.0;
  int fast = 0;
  for (const auto& r : trace.records)
    if (r.t > 0 && r.fast_path) ++fast;
  return static_cast<double>(fast) / n;
}

double total_wall(const ConvergenceTrace& trace) {
  double ms = 0.0;
  for (const auto& r : trace.records) ms += r.wall_ms;
  return ms;
}

ResultRow final_row(const ExperimentConfig& config, SchemeId scheme, std::uint64_t seed, int trial,
                    double sweep, const SchemeResult& result) {
  ResultRow row;
  row.experiment = to_string(config.experiment);
  row.scheme = to_string(scheme);
  row.seed = seed;
  row.trial = trial;
  row.sweep_value = sweep;
  row.f1 = result.trace.records.back().f1;
  row.sum_rate = result.report.sum_rate;
  row.iterations = result.trace.iterations();
  row.wall_ms = config.record_timing ? total_wall(result.trace) : 0.0;
  row.fast_path_fraction = fast_fraction(result.trace);
  return row;
}

std::vector<ResultRow> run_trial(const ExperimentConfig& config, int trial) {
  const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(trial);
  SolverOptions options = config.solver;
  options.seed = seed;
  const NoiseMode mode = options.noise_mode;
  std::vector<ResultRow> rows;

  switch (config.experiment) {
    case ExperimentKind::convergence: {
      Instance inst = draw(config.scenario, seed, mode);
      if (config.snr_db) set_operating_point(inst, *config.snr_db, config.snr_reference);
      for (SchemeId scheme : config.schemes) {
        const SchemeResult result = run_scheme(scheme, inst.eff, inst.scenario, options);
        for (const auto& rec : result.trace.records) {
          ResultRow row;
          row.experiment = to_string(config.experiment);
          row.scheme = to_string(scheme);
          row.seed = seed;
          row.trial = trial;
          row.sweep_value = rec.t;
          row.f1 = rec.f1;
          row.sum_rate = rec.sum_rate;
          row.iterations = result.trace.iterations();
          row.wall_ms = config.record_timing ? rec.wall_ms : 0.0;
          row.fast_path_fraction = rec.fast_path ? 1.0 : 0.0;
          rows.push_back(std::move(row));
        }
      }
      break;
    }
    case ExperimentKind::snr_sweep: {
      const Instance base = draw(config.scenario, seed, mode);
      for (double snr : config.snr_grid_db) {
        Instance inst = base;
        set_operating_point(inst, snr, config.snr_reference);
        for (SchemeId scheme : config.schemes)
          rows.push_back(final_row(config, scheme, seed, trial, snr,
                                   run_scheme(scheme, inst.eff, inst.scenario, options)));
      }
      break;
    }
    case ExperimentKind::irs_sweep: {
      const int elements = config.scenario.M.front();
      for (int L : config.l_grid) {
        Instance inst = draw(config.scenario.with_random_irs(L, elements), seed, mode);
        if (config.snr_db) set_operating_point(inst, *config.snr_db, config.snr_reference);
        for (SchemeId scheme : config.schemes)
          rows.push_back(final_row(config, scheme, seed, trial, L,
                                   run_scheme(scheme, inst.eff, inst.scenario, options)));
      }
      break;
    }
    case ExperimentKind::validate:
      break;
  }
  return rows;
}

int scheme_rank(const std::string& name) {
  const auto& all = all_schemes();
  for (std::size_t i = 0; i < all.size(); ++i)
    if (to_string(all[i]) == name) return static_cast<int>(i);
  return static_cast<int>(all.size());
}

}  // namespace

std::vector<SummaryRow> summarize(const std::vector<ResultRow>& rows) {
  struct Acc {
    std::vector<double> rates;
    double f1 = 0.0;
    double iterations = 0.0;
    std::string experiment;
  };
  std::map<std::tuple<int, double>, Acc> groups;
  for (const auto& r : rows) {
    Acc& a = groups[{scheme_rank(r.scheme), r.sweep_value}];
    a.experiment = r.experiment;
    a.rates.push_back(r.sum_rate);
    a.f1 += r.f1;
    a.iterations += r.iterations;
  }
  std::vector<SummaryRow> out;
  for (const auto& [key, a] : groups) {
    SummaryRow s;
    s.experiment = a.experiment;
    s.scheme = to_string(all_schemes()[static_cast<std::size_t>(std::get<0>(key))]);
    s.sweep_value = std::get<1>(key);
    s.n = static_cast<int>(a.rates.size());
    double sum = 0.0;
    for (double x : a.rates) sum += x;
    s.mean_sum_rate = sum / s.n;
    double ss = 0.0;
    for (double x : a.rates) ss += (x - s.mean_sum_rate) * (x - s.mean_sum_rate);
    s.std_sum_rate = s.n > 1 ? std::sqrt(ss / (s.n - 1)) : 0.0;
    s.mean_f1 = a.f1 / s.n;
    s.mean_iterations = a.iterations / s.n;
    out.push_back(s);
  }
  return out;
}

ExperimentOutput run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentOutput out;

  if (config.experiment == ExperimentKind::validate) {
    ValidationOptions vopt;
    vopt.seed = config.seed;
    vopt.instances = std::max(config.trials, 10);
    vopt.solver = config.solver;
    out.checks = run_validation_suite(vopt);
    for (const auto& c : out.checks) out.checks_passed = out.checks_passed && c.passed;
    return out;
  }

  std::vector<std::vector<ResultRow>> per_trial(static_cast<std::size_t>(config.trials));
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (int trial = next++; trial < config.trials; trial = next++) {
      try {
        per_trial[static_cast<std::size_t>(trial)] = run_trial(config, trial);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::min(config.workers, config.trials);
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (auto& rows : per_trial)
    for (auto& r : rows) out.rows.push_back(std::move(r));
  std::stable_sort(out.rows.begin(), out.rows.end(), [](const ResultRow& a, const ResultRow& b) {
    const int ra = scheme_rank(a.scheme);
    const int rb = scheme_rank(b.scheme);
    if (ra != rb) return ra < rb;
    if (a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
    return a.trial < b.trial;
  });
  out.summary = summarize(out.rows);
  return out;
}

// ---------------------------------------------------------------------------
// output

namespace {

std::string num(double x) {
  if (!std::isfinite(x)) throw std::runtime_error("refusing to write a non-finite value");
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string metadata(const ExperimentConfig& config) {
  std::string out = "# " + version_string() + "\n";
  out += "# config: " + to_json(config).dump() + "\n";
  return out;
}

std::string sibling(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  const std::string stem = p.stem().string();
  return (p.parent_path() / (stem + suffix)).string();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << content;
  out.flush();
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

std::string format_rows_csv(const ExperimentConfig& config, const std::vector<ResultRow>& rows) {
  std::string out = metadata(config);
  out += "experiment,scheme,seed,trial,sweep_value,f1,sum_rate,iterations,wall_ms,fast_path_fraction\n";
  for (const auto& r : rows) {
    out += r.experiment + "," + r.scheme + "," + std::to_string(r.seed) + "," +
           std::to_string(r.trial) + "," + num(r.sweep_value) + "," + num(r.f1) + "," +
           num(r.sum_rate) + "," + std::to_string(r.iterations) + "," + num(r.wall_ms) + "," +
           num(r.fast_path_fraction) + "\n";
  }
  return out;
}

void write_outputs(const ExperimentConfig& config, const ExperimentOutput& output) {
  if (config.experiment == ExperimentKind::validate) {
    std::string csv = metadata(config);
    csv += "check,passed,worst,threshold,cases\n";
    for (const auto& c : output.checks)
      csv += c.name + "," + (c.passed ? "true" : "false") + "," + num(c.worst) + "," +
             num(c.threshold) + "," + std::to_string(c.cases) + "\n";
    write_file(config.output_path, csv);
    return;
  }

  const std::string raw = format_rows_csv(config, output.rows);

  std::string summary = metadata(config);
  summary += "experiment,scheme,sweep_value,n,mean_sum_rate,std_sum_rate,mean_f1,mean_iterations\n";
  for (const auto& s : output.summary)
    summary += s.experiment + "," + s.scheme + "," + num(s.sweep_value) + "," + std::to_string(s.n) +
               "," + num(s.mean_sum_rate) + "," + num(s.std_sum_rate) + "," + num(s.mean_f1) + "," +
               num(s.mean_iterations) + "\n";

  write_file(config.output_path, raw);
  write_file(sibling(config.output_path, ".summary.csv"), summary);

  if (config.json_summary) {
    json doc;
    doc["version"] = version_string();
    doc["config"] = to_json(config);
    doc["summary"] = json::array();
    for (const auto& s : output.summary)
      doc["summary"].push_back({{"scheme", s.scheme},
                                {"sweep_value", s.sweep_value},
                                {"n", s.n},
                                {"mean_sum_rate", s.mean_sum_rate},
                                {"std_sum_rate", s.std_sum_rate},
                                {"mean_f1", s.mean_f1},
                                {"mean_iterations", s.mean_iterations}});
    write_file(sibling(config.output_path, ".summary.json"), doc.dump(2) + "\n");
  }
}

}  // namespace irsnet
