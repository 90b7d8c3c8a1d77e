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

#include "irsnet/validation.hpp"
#include "irsnet/oracle.hpp"
#include "irsnet/random.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace irsnet {

Scenario unit_scale_scenario(int K, int L, int elements_per_irs) {
  Scenario s;
  s.K = K;
  s.L = L;
  s.M.assign(static_cast<std::size_t>(L), elements_per_irs);
  if (L != 4) s.irs_positions.clear();
  s.T0_db = 0.0;
  s.d0 = 100.0;
  s.p_max = 1.0;
  return s;
}

namespace {

double rel_gap(double a, double b) { return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300}); }

struct Instance {
  Scenario scenario;
  EffectiveChannels eff;
};

Instance make_instance(std::mt19937_64& rng, std::uint64_t seed) {
  static const int Ks[] = {2, 3, 4};
  static const int Ls[] = {1, 2};
  static const int Ms[] = {2, 3};
  std::uniform_int_distribution<int> pick(0, 1);
  std::uniform_int_distribution<int> pick3(0, 2);
  Instance inst;
  inst.scenario = unit_scale_scenario(Ks[pick3(rng)], Ls[pick(rng)], Ms[pick(rng)]);
  inst.eff = draw_instance(inst.scenario, seed, NoiseMode::expectation);
  return inst;
}

RVec random_powers(std::mt19937_64& rng, int K, double p_max) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RVec p(K);
  for (int k = 0; k < K; ++k) p(k) = p_max * (0.05 + 0.95 * unit(rng));
  return p;
}

CVec random_feasible_theta(std::mt19937_64& rng, int N) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  CVec theta = random_unit_phases(rng, N);
  for (int n = 0; n < N; ++n) theta(n) *= std::sqrt(unit(rng));
  return theta;
}

RVec random_direction(std::mt19937_64& rng, Eigen::Index n) {
  std::normal_distribution<double> normal;
  RVec d(n);
  for (Eigen::Index i = 0; i < n; ++i) d(i) = normal(rng);
  return d / d.norm();
}

CheckResult make_check(std::string name, double threshold) {
  CheckResult c;
  c.name = std::move(name);
  c.threshold = threshold;
  return c;
}

void record(CheckResult& c, double value) {
  c.worst = std::max(c.worst, value);
  ++c.cases;
}

void close(CheckResult& c) { c.passed = c.worst <= c.threshold; }

}  // namespace

std::vector<CheckResult> run_validation_suite(const ValidationOptions& options) {
  auto rng = make_rng(options.seed, Stream::test);

  auto reformulation = make_check("reformulation_identity", 1e-12);
  auto tight_g1 = make_check("g1_tightness", 1e-12);
  auto tight_g2 = make_check("g2_tightness", 1e-12);
  auto bound_g1 = make_check("g1_lower_bound", 1e-12);
  auto bound_g2 = make_check("g2_lower_bound", 1e-12);
  auto stat_mu = make_check("stationarity_mu", 1e-6);
  auto stat_alpha = make_check("stationarity_alpha", 1e-6);
  auto stat_beta = make_check("stationarity_beta", 1e-6);
  auto stat_theta = make_check("stationarity_theta_lagrangian", 1e-6);
  auto dual_gap = make_check("theta_duality_gap", 1e-5);
  auto dual_kkt = make_check("theta_kkt_residual", 1e-6);
  auto monotone = make_check("f1_monotone", 1e-9);
  auto chain = make_check("block_chain", 1e-9);
  auto feasibility = make_check("iterate_feasibility", 1e-8);

  for (int trial = 0; trial < options.instances; ++trial) {
    const std::uint64_t seed = options.seed * 1000003ULL + static_cast<std::uint64_t>(trial);
    const Instance inst = make_instance(rng, seed);
    const auto& eff = inst.eff;
    const double s2 = inst.scenario.sigma_d2;
    const int K = eff.K();
    const int N = eff.N;

    const RVec p = random_powers(rng, K, inst.scenario.p_max);
    const CVec theta = random_feasible_theta(rng, N);
    const RVec mu_star = sinr(p, theta, eff, s2);
    const RVec mu = random_powers(rng, K, 2.0);

    record(reformulation, rel_gap(eval_f1(p, theta, mu_star, eff, s2), sum_rate(p, theta, eff, s2)));

    const double f2 = eval_f2(p, theta, mu, eff, s2);
    const RVec alpha = update_alpha(p, theta, mu, eff, s2);
    const CVec beta = update_beta(theta, p, mu, eff, s2);
    record(tight_g1, rel_gap(eval_g1(p, alpha, theta, mu, eff, s2), f2));
    record(tight_g2, rel_gap(eval_g2(theta, beta, p, mu, eff, s2), f2));
    for (int s = 0; s < 20; ++s) {
      const RVec a = alpha + random_direction(rng, K) * alpha.norm();
      const CVec b = beta + oracle::unstack(random_direction(rng, 2 * K)) * beta.norm();
      record(bound_g1, std::max(0.0, eval_g1(p, a, theta, mu, eff, s2) - f2) / std::abs(f2));
      record(bound_g2, std::max(0.0, eval_g2(theta, b, p, mu, eff, s2) - f2) / std::abs(f2));
    }

    record(stat_mu, oracle::finite_diff_check(
                        [&](const RVec& m) { return eval_f1(p, theta, m, eff, s2); }, mu_star,
                        random_direction(rng, K)));
    record(stat_alpha, oracle::finite_diff_check(
                           [&](const RVec& a) { return eval_g1(p, a, theta, mu, eff, s2); },
                           alpha, random_direction(rng, K)));
    record(stat_beta, oracle::finite_diff_check(
                          [&](const RVec& b) {
                            return eval_g2(theta, oracle::unstack(b), p, mu, eff, s2);
                          },
                          oracle::stack(beta), random_direction(rng, 2 * K)));

    const ThetaSubproblem sub = build_subproblem(p, mu, beta, eff, s2);
    const RVec lambda = random_powers(rng, N, sub.u.norm());
    record(stat_theta, oracle::finite_diff_check(
                           [&](const RVec& x) { return lagrangian(oracle::unstack(x), lambda, sub); },
                           oracle::stack(theta_of_lambda(lambda, sub)),
                           random_direction(rng, 2 * N)));

    const DualSolveReport dual = solve_dual(sub, options.solver.dual);
    record(dual_gap, std::max(0.0, dual.dual_value - dual.primal_value) /
                         std::max(1.0, std::abs(dual.dual_value)));
    record(dual_kkt, dual.kkt_residual);

    SolverOptions solver = options.solver;
    solver.seed = seed;
    const SolveResult run = solve(inst.scenario, eff, solver);
    const auto f1 = run.trace.f1_values();
    for (std::size_t t = 1; t < f1.size(); ++t)
      record(monotone, std::max(0.0, (f1[t - 1] - f1[t]) / std::abs(f1[t - 1])));
    for (const auto& r : run.trace.records) {
      if (r.t == 0) continue;
      record(chain, std::max(0.0, (r.f2_before_power - r.f2_after_power) / std::abs(r.f2_before_power)));
      record(chain, std::max(0.0, (r.f2_before_theta - r.f2_after_theta) / std::abs(r.f2_before_theta)));
      const double p_violation =
          std::max((r.p.array() - inst.scenario.p_max).maxCoeff(), (-r.p.array()).maxCoeff());
      record(feasibility, std::max({0.0, r.theta_violation, p_violation}));
    }
  }

  auto dominance = make_check("bruteforce_ratio_shortfall", 0.10);
  for (int trial = 0; trial < std::max(1, options.instances / 4); ++trial) {
    const std::uint64_t seed = options.seed * 7919ULL + static_cast<std::uint64_t>(trial);
    const Scenario scenario = unit_scale_scenario(2, 1, 2);
    const EffectiveChannels eff = draw_instance(scenario, seed, NoiseMode::expectation);
    const auto grid = oracle::brute_force_joint(eff, 16, 8, scenario.p_max, scenario.sigma_d2);
    SolverOptions solver = options.solver;
    solver.seed = seed;
    const SolveResult run = solve(scenario, eff, solver);
    const double achieved = sum_rate(run.state.p, run.state.theta, eff, scenario.sigma_d2);
    record(dominance, std::max(0.0, 1.0 - achieved / grid.sum_rate));
  }

  std::vector<CheckResult> out{reformulation, tight_g1,  tight_g2,   bound_g1, bound_g2,
                               stat_mu,       stat_alpha, stat_beta, stat_theta, dual_gap,
                               dual_kkt,      monotone,  chain,      feasibility, dominance};
  for (auto& c : out) {
    close(c);
    std::ostringstream detail;
    detail << c.cases << " cases";
    c.detail = detail.str();
  }
  return out;
}

}  // namespace irsnet
