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

#ifndef IRSNET_FP_SOLVER_HPP
#define IRSNET_FP_SOLVER_HPP

#include "irsnet/qcqp_theta.hpp"
#include "irsnet/rate_model.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace irsnet {

struct SolverOptions {
  double epsilon = 1e-4;  // stop once f1 increases by at most this (absolute)
  int max_iter = 500;
  std::optional<CVec> theta_init;  // default: unit modulus, uniform phases from `seed`
  std::optional<RVec> p_init;      // default: full power
  std::uint64_t seed = 0;
  NoiseMode noise_mode = NoiseMode::expectation;
  DualOptions dual;

  void validate() const;
};

enum class Termination { epsilon_reached, max_iter };

std::string to_string(Termination reason);

struct IterationRecord {
  int t = 0;
  double f1 = 0.0;
  double sum_rate = 0.0;
  RVec p;
  double theta_violation = 0.0;  // max(0, max_n |theta_n|^2 - 1)
  double kkt_residual = 0.0;     // of the theta dual solve; 0 when theta was not updated
  bool fast_path = false;
  int ellipsoid_iterations = 0;
  double wall_ms = 0.0;
  // f2 around each block update, all at this iteration's mu.
  double f2_before_power = 0.0;
  double f2_after_power = 0.0;
  double f2_before_theta = 0.0;
  double f2_after_theta = 0.0;
};

// Record 0 is the initial point, with f1 taken at mu = SINR (so f1 = sum rate).
struct ConvergenceTrace {
  std::vector<IterationRecord> records;
  Termination terminated_reason = Termination::max_iter;

  int iterations() const { return records.empty() ? 0 : static_cast<int>(records.size()) - 1; }
  std::vector<double> f1_values() const;
};

struct SolveResult {
  BeamformingState state;
  ConvergenceTrace trace;
};

// Which blocks the alternating loop updates. mu is always refreshed.
struct BlockSelection {
  bool power = true;
  bool theta = true;
};

RVec update_mu(const RVec& p, const CVec& theta, const EffectiveChannels& eff, double sigma_d2);

RVec update_alpha(const RVec& p, const CVec& theta, const RVec& mu, const EffectiveChannels& eff,
                  double sigma_d2);

// Per-source maximizer of g1 over [0, p_max]. A zero interference weight makes
// the unconstrained maximizer unbounded, so p_k = p_max.
RVec update_power(const RVec& alpha, const CVec& theta, const RVec& mu,
                  const EffectiveChannels& eff, double p_max);

CVec update_beta(const CVec& theta, const RVec& p, const RVec& mu, const EffectiveChannels& eff,
                 double sigma_d2);

SolveResult solve(const Scenario& scenario, const EffectiveChannels& eff,
                  const SolverOptions& options);

SolveResult solve_blocks(const Scenario& scenario, const EffectiveChannels& eff,
                         const SolverOptions& options, BlockSelection blocks);

CVec initial_theta(const SolverOptions& options, int N);

}  // namespace irsnet

#endif  // IRSNET_FP_SOLVER_HPP
