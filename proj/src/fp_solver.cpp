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

#include "irsnet/fp_solver.hpp"
#include "irsnet/random.hpp"

#include <cassert>
#include <chrono>
#include <cmath>
#include <limits>

namespace irsnet {

void SolverOptions::validate() const {
  if (!(epsilon > 0)) throw ValidationError("epsilon", "must be > 0");
  if (max_iter < 1) throw ValidationError("max_iter", "must be >= 1");
  if (!(dual.tol_kkt > 0)) throw ValidationError("tol_kkt", "must be > 0");
  if (dual.max_iter < 0) throw ValidationError("max_ellipsoid_iter", "must be >= 0");
}

std::string to_string(Termination reason) {
  return reason == Termination::epsilon_reached ? "epsilon_reached" : "max_iter";
}

std::vector<double> ConvergenceTrace::f1_values() const {
  std::vector<double> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.f1);
  return out;
}

RVec update_mu(const RVec& p, const CVec& theta, const EffectiveChannels& eff, double sigma_d2) {
  return sinr(p, theta, eff, sigma_d2);
}

RVec update_alpha(const RVec& p, const CVec& theta, const RVec& mu, const EffectiveChannels& eff,
                  double sigma_d2) {
  const Coupling c = couple(theta, eff);
  const RVec total = total_received(p, c, sigma_d2);
  RVec alpha(p.size());
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    const double direct = std::norm(c.coupling(k, k));
    alpha(k) = std::sqrt(2.0 * (1.0 + mu(k)) * direct * p(k)) / (2.0 * total(k));
  }
  return alpha;
}

RVec update_power(const RVec& alpha, const CVec& theta, const RVec& mu,
                  const EffectiveChannels& eff, double p_max) {
  const RMat gains = couple(theta, eff).gains();
  const Eigen::Index K = alpha.size();
  RVec p(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    // interference that source k causes, weighted by each destination's alpha^2
    double caused = 0.0;
    for (Eigen::Index i = 0; i < K; ++i) caused += alpha(i) * alpha(i) * gains(k, i);
    if (!(caused > 0)) {
      p(k) = p_max;
      continue;
    }
    const double unconstrained =
        alpha(k) * alpha(k) * (1.0 + mu(k)) * gains(k, k) / (2.0 * caused * caused);
    p(k) = std::clamp(unconstrained, 0.0, p_max);
  }
  return p;
}

CVec update_beta(const CVec& theta, const RVec& p, const RVec& mu, const EffectiveChannels& eff,
                 double sigma_d2) {
  const Coupling c = couple(theta, eff);
  const RVec total = total_received(p, c, sigma_d2);
  CVec beta(p.size());
  for (Eigen::Index k = 0; k < p.size(); ++k)
    beta(k) = std::sqrt(2.0 * p(k) * (1.0 + mu(k))) * c.coupling(k, k) / (2.0 * total(k));
  return beta;
}

CVec initial_theta(const SolverOptions& options, int N) {
  if (options.theta_init) return *options.theta_init;
  auto rng = make_rng(options.seed, Stream::theta_init);
  return random_unit_phases(rng, N);
}

namespace {

double theta_violation(const CVec& theta) {
  return theta.size() == 0 ? 0.0 : std::max(0.0, theta.cwiseAbs2().maxCoeff() - 1.0);
}

void check_initial_point(const BeamformingState& s, const EffectiveChannels& eff, double p_max) {
  if (s.p.size() != eff.K()) throw ValidationError("p_init", "length must equal K");
  if (s.theta.size() != eff.N) throw ValidationError("theta_init", "length must equal N");
  for (Eigen::Index k = 0; k < s.p.size(); ++k)
    if (!(s.p(k) >= 0.0 && s.p(k) <= p_max)) throw ValidationError("p_init", "outside [0, p_max]");
  if (theta_violation(s.theta) > 1e-12) throw ValidationError("theta_init", "|theta_n| exceeds 1");
}

}  // namespace

SolveResult solve(const Scenario& scenario, const EffectiveChannels& eff,
                  const SolverOptions& options) {
  return solve_blocks(scenario, eff, options, BlockSelection{});
}

SolveResult solve_blocks(const Scenario& scenario, const EffectiveChannels& eff,
                         const SolverOptions& options, BlockSelection blocks) {
  options.validate();
  using clock = std::chrono::steady_clock;
  const int K = eff.K();
  const int N = eff.N;
  const double sigma_d2 = scenario.sigma_d2;
  const double p_max = scenario.p_max;

  SolveResult result;
  BeamformingState& s = result.state;
  s.p = options.p_init ? *options.p_init : RVec::Constant(K, p_max);
  s.theta = initial_theta(options, N);
  check_initial_point(s, eff, p_max);
  s.mu = update_mu(s.p, s.theta, eff, sigma_d2);
  s.alpha = RVec::Zero(K);
  s.beta = CVec::Zero(K);
  s.lambda = RVec::Zero(N);

  auto& records = result.trace.records;
  {
    IterationRecord initial;
    initial.t = 0;
    initial.f1 = eval_f1(s.p, s.theta, s.mu, eff, sigma_d2);
    initial.sum_rate = sum_rate(s.p, s.theta, eff, sigma_d2);
    initial.p = s.p;
    initial.theta_violation = theta_violation(s.theta);
    records.push_back(std::move(initial));
  }

  bool last_recovered = false;
  for (int t = 1; t <= options.max_iter; ++t) {
    const auto start = clock::now();
    IterationRecord rec;
    rec.t = t;

    s.mu = update_mu(s.p, s.theta, eff, sigma_d2);
    rec.f2_before_power = eval_f2(s.p, s.theta, s.mu, eff, sigma_d2);
    if (blocks.power) {
      s.alpha = update_alpha(s.p, s.theta, s.mu, eff, sigma_d2);
      s.p = update_power(s.alpha, s.theta, s.mu, eff, p_max);
    }
    rec.f2_after_power = eval_f2(s.p, s.theta, s.mu, eff, sigma_d2);
    rec.f2_before_theta = rec.f2_after_power;

    if (blocks.theta) {
      s.beta = update_beta(s.theta, s.p, s.mu, eff, sigma_d2);
      const ThetaSubproblem sub = build_subproblem(s.p, s.mu, s.beta, eff, sigma_d2);
      // u = 0: every theta scores the same constant, keep the current iterate.
      if (sub.u.squaredNorm() > 0.0) {
        const DualSolveReport report = solve_dual(sub, options.dual, WarmStart{s.lambda, s.theta, last_recovered});
        rec.kkt_residual = report.kkt_residual;
        rec.fast_path = report.fast_path_taken;
        rec.ellipsoid_iterations = report.iterations;
        // An inexact dual solve must never lose ground on g2.
        if (sub.objective(report.theta) >= sub.objective(s.theta)) {
          s.theta = report.theta;
          s.lambda = report.lambda;
        }
        last_recovered = report.recovered;
      }
    }
    rec.f2_after_theta = eval_f2(s.p, s.theta, s.mu, eff, sigma_d2);

    rec.f1 = mu_constant(s.mu) + rec.f2_after_theta;
    rec.sum_rate = sum_rate(s.p, s.theta, eff, sigma_d2);
    rec.p = s.p;
    rec.theta_violation = theta_violation(s.theta);
    rec.wall_ms = std::chrono::duration<double, std::milli>(clock::now() - start).count();

    const double previous = records.back().f1;
    assert(rec.f1 >= previous - 1e-9 * std::abs(previous));
    const bool done = rec.f1 - previous <= options.epsilon;
    records.push_back(std::move(rec));
    if (done) {
      result.trace.terminated_reason = Termination::epsilon_reached;
      return result;
    }
  }
  result.trace.terminated_reason = Termination::max_iter;
  return result;
}

}  // namespace irsnet
