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

#ifndef IRSNET_ORACLE_HPP
#define IRSNET_ORACLE_HPP

#include "irsnet/fp_solver.hpp"

#include <functional>
#include <vector>

namespace irsnet::oracle {

// Exhaustive-search and finite-difference checks. Everything here scores
// candidates through rate_model only and shares no code with the solver's
// update formulas.

// Largest grid the brute-force searches agree to enumerate.
inline constexpr double kMaxGridPoints = 1e7;

struct ThetaSearch {
  CVec theta;
  double sum_rate = 0.0;
};

struct PowerSearch {
  RVec p;
  double sum_rate = 0.0;
};

struct JointSearch {
  RVec p;
  CVec theta;
  double sum_rate = 0.0;
};

// theta_n over {exp(j 2 pi q / Q)}. Throws std::length_error when Q^N > 1e7.
ThetaSearch brute_force_theta(const EffectiveChannels& eff, const RVec& p, int phase_levels,
                              double sigma_d2);

// p_k over {0, p_max/(levels-1), ..., p_max}. Throws std::length_error when levels^K > 1e7.
PowerSearch brute_force_power(const EffectiveChannels& eff, const CVec& theta, int power_levels,
                              double p_max, double sigma_d2);

// Product grid of the two searches above; same size cap on the product.
JointSearch brute_force_joint(const EffectiveChannels& eff, int phase_levels, int power_levels,
                              double p_max, double sigma_d2);

using ScalarFunction = std::function<double(const RVec&)>;

// |central-difference directional derivative| / max(|f(point)|, 1e-300).
// At a claimed stationary point this should be ~0.
double finite_diff_check(const ScalarFunction& fun, const RVec& point, const RVec& direction,
                         double step = 1e-5);

// Real/imaginary stacking so complex points can go through finite_diff_check.
RVec stack(const CVec& z);
CVec unstack(const RVec& x);

struct MonotoneCheck {
  bool passed = true;
  double worst_violation = 0.0;  // largest absolute drop between consecutive entries
  int worst_index = -1;
};

MonotoneCheck check_monotone(const std::vector<double>& values, double rel_slack = 1e-9);
MonotoneCheck check_monotone(const ConvergenceTrace& trace, double rel_slack = 1e-9);

}  // namespace irsnet::oracle

#endif  // IRSNET_ORACLE_HPP
