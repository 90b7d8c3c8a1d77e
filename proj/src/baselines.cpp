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

#include "irsnet/baselines.hpp"

namespace irsnet {

std::string to_string(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::joint: return "joint";
    case SchemeId::power_only: return "power_only";
    case SchemeId::phase_only: return "phase_only";
  }
  return "unknown";
}

SchemeId scheme_from_string(const std::string& name) {
  if (name == "joint") return SchemeId::joint;
  if (name == "power_only") return SchemeId::power_only;
  if (name == "phase_only") return SchemeId::phase_only;
  throw ValidationError("schemes", "unknown scheme '" + name + "'");
}

const std::vector<SchemeId>& all_schemes() {
  static const std::vector<SchemeId> schemes{SchemeId::joint, SchemeId::power_only,
                                             SchemeId::phase_only};
  return schemes;
}

SchemeResult run_scheme(SchemeId scheme, const EffectiveChannels& eff, const Scenario& scenario,
                        const SolverOptions& options) {
  SolverOptions opts = options;
  BlockSelection blocks;
  switch (scheme) {
    case SchemeId::joint:
      break;
    case SchemeId::power_only:
      // Frozen at the same seeded draw the joint scheme starts from.
      blocks.theta = false;
      break;
    case SchemeId::phase_only:
      blocks.power = false;
      opts.p_init = RVec::Constant(eff.K(), scenario.p_max);
      break;
  }
  SolveResult solved = solve_blocks(scenario, eff, opts, blocks);
  SchemeResult out;
  out.report = evaluate(solved.state.p, solved.state.theta, eff, scenario.sigma_d2);
  out.state = std::move(solved.state);
  out.trace = std::move(solved.trace);
  return out;
}

}  // namespace irsnet
