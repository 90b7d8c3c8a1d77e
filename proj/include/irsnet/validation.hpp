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

#ifndef IRSNET_VALIDATION_HPP
#define IRSNET_VALIDATION_HPP

#include "irsnet/fp_solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace irsnet {

// The default layout with gains normalized to O(1) (T0 = 0 dB at d0 = 100 m) and
// p_max = 1, so that instances are interference limited rather than noise
// limited. L != 4 places the IRSs at random in irs_region.
Scenario unit_scale_scenario(int K, int L, int elements_per_irs);

struct CheckResult {
  std::string name;
  bool passed = true;
  double worst = 0.0;      // worst observed value of the checked quantity
  double threshold = 0.0;  // pass iff worst <= threshold
  int cases = 0;
  std::string detail;
};

struct ValidationOptions {
  std::uint64_t seed = 1;
  int instances = 20;
  SolverOptions solver;
};

// Invariant and oracle checks on small seeded instances: reformulation identity,
// surrogate tightness and bounds, stationarity of the closed forms, theta dual
// gap and KKT, solver monotonicity and block chain, brute-force dominance.
std::vector<CheckResult> run_validation_suite(const ValidationOptions& options);

}  // namespace irsnet

#endif  // IRSNET_VALIDATION_HPP
