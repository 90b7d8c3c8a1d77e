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

#ifndef IRSNET_QCQP_THETA_HPP
#define IRSNET_QCQP_THETA_HPP

#include "irsnet/channel_model.hpp"

namespace irsnet {

// maximize  Re{u^H theta} - theta^H A theta - offset   s.t. |theta_n|^2 <= 1
//
// With A = sum_k |beta_k|^2 (sum_i p_i v_{i,k} v_{i,k}^H + C_k),
//      u = sum_k sqrt(2 p_k (1 + mu_k)) conj(beta_k) v_{k,k},
//      offset = sigma_d2 * sum_k |beta_k|^2
// the objective equals ln 2 * eval_g2(theta, beta): the same maximizer, in the
// unscaled units the closed-form theta(lambda) is written in.
struct ThetaSubproblem {
  CMat A;
  CVec u;
  double offset = 0.0;
  int N = 0;

  double objective(const CVec& theta) const;
};

struct DualOptions {
  double tol_kkt = 1e-6;
  // 0 selects the default cap 4 N^2 ln(2 sqrt(N) * 1e8).
  int max_iter = 0;
  // Once an ellipsoid center reaches kkt_residual <= polish_start, try a
  // projected Newton step sequence on the dual from there. On failure the
  // ellipsoid continues from its current state.
  bool polish = true;
  double polish_start = 1e-2;
  // When neither of the above reaches tol_kkt (singular A, where theta(lambda*)
  // is not a primal optimum), run projected gradient on the primal from the
  // clipped theta and rebuild lambda from its stationarity conditions. The
  // result is accepted once kkt_residual <= tol_kkt and the relative gap
  // between dual_value and primal_value is <= tol_gap.
  bool recover_primal = true;
  double tol_gap = 1e-7;
  int recovery_max_iter = 20000;
};

// lambda, theta, dual_value and primal_value are in the units of the caller's
// subproblem. kkt_residual is measured on the subproblem rescaled to ||u|| = 1
// (multipliers lambda / ||u||), which is what tol_kkt is compared against.
struct DualSolveReport {
  RVec lambda;
  CVec theta;
  double dual_value = 0.0;
  double primal_value = 0.0;
  double kkt_residual = 0.0;
  int iterations = 0;       // ellipsoid cuts
  int newton_steps = 0;     // accepted polish steps
  int recovery_steps = 0;   // projected-gradient steps of the primal recovery
  bool fast_path_taken = false;
  bool polished = false;    // the returned lambda came from the Newton polish
  bool recovered = false;   // theta and lambda came from the primal recovery
  bool warm_started = false;  // certified from the warm start, no ellipsoid run
  bool converged = false;
};

ThetaSubproblem build_subproblem(const RVec& p, const RVec& mu, const CVec& beta,
                                 const EffectiveChannels& eff, double sigma_d2);

// Solves (diag(lambda) + A) theta = u / 2. A Tikhonov shift is added when the
// system is not numerically positive definite. u = 0 with a singular system
// returns zero.
CVec theta_of_lambda(const RVec& lambda, const ThetaSubproblem& sub);

// sup_theta of the Lagrangian, i.e. the Lagrangian evaluated at theta_of_lambda.
double dual_value(const RVec& lambda, const ThetaSubproblem& sub);

// The Lagrangian g2(theta) - sum_n lambda_n (|theta_n|^2 - 1).
double lagrangian(const CVec& theta, const RVec& lambda, const ThetaSubproblem& sub);

// max_n max(|lambda_n (|theta_n|^2 - 1)|, |theta_n|^2 - 1, -lambda_n), floored at 0.
double kkt_residual(const CVec& theta, const RVec& lambda, const ThetaSubproblem& sub);

int default_ellipsoid_cap(int N);

DualSolveReport solve_dual(const ThetaSubproblem& sub, const DualOptions& options = {});
// Previous solution of a nearby subproblem (e.g. the last outer iteration).
struct WarmStart {
  RVec lambda;
  CVec theta;  // feasible; may be empty
  // Try the primal recovery before Newton (the last solve needed it).
  bool primal_first = false;
};
// Same, but first tries the Newton polish from warm.lambda and the primal
// recovery from the better of warm.theta and the clipped theta(warm.lambda).
// The ellipsoid from its usual starting ball runs only if that does not certify.
DualSolveReport solve_dual(const ThetaSubproblem& sub, const DualOptions& options,
                           const WarmStart& warm);

}  // namespace irsnet

#endif  // IRSNET_QCQP_THETA_HPP
