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

#ifndef IRSNET_BASELINES_HPP
#define IRSNET_BASELINES_HPP

#include "irsnet/fp_solver.hpp"

#include <string>
#include <vector>

namespace irsnet {

enum class SchemeId { joint, power_only, phase_only };

std::string to_string(SchemeId scheme);
SchemeId scheme_from_string(const std::string& name);
const std::vector<SchemeId>& all_schemes();

struct SchemeResult {
  BeamformingState state;
  RateReport report;
  ConvergenceTrace trace;
};

// joint:      the full alternating loop.
// power_only: theta frozen at the seeded unit-modulus draw that joint starts
//             from (or options.theta_init), only (mu, alpha, p) iterate.
// phase_only: p frozen at p_max, only (mu, beta, theta) iterate.
SchemeResult run_scheme(SchemeId scheme, const EffectiveChannels& eff, const Scenario& scenario,
                        const SolverOptions& options);

}  // namespace irsnet

#endif  // IRSNET_BASELINES_HPP
