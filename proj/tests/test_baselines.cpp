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
#include "irsnet/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace irsnet;

namespace {

Scenario scenario_with(int K, int M, double p_max) {
  Scenario s;
  s.K = K;
  s.L = 1;
  s.M = {M};
  s.irs_positions = {{150.0, 30.0}};
  s.p_max = p_max;
  return s;
}

}  // namespace

TEST_CASE("scheme names") {
  for (SchemeId id : all_schemes()) CHECK(scheme_from_string(to_string(id)) == id);
  CHECK_THROWS(scheme_from_string("random"));
}

TEST_CASE("phase_only keeps full power") {
  const Scenario s = scenario_with(3, 4, 1e10);
  const EffectiveChannels eff = draw_instance(s, 8, NoiseMode::expectation);
  SolverOptions options;
  options.seed = 8;
  const SchemeResult r = run_scheme(SchemeId::phase_only, eff, s, options);
  CHECK((r.state.p - RVec::Constant(3, s.p_max)).norm() == 0.0);
  CHECK(oracle::check_monotone(r.trace).passed);
}

TEST_CASE("power_only keeps the starting phases") {
  const Scenario s = scenario_with(3, 4, 1e10);
  const EffectiveChannels eff = draw_instance(s, 9, NoiseMode::expectation);
  SolverOptions options;
  options.seed = 9;
  const SchemeResult r = run_scheme(SchemeId::power_only, eff, s, options);
  CHECK(r.state.theta == initial_theta(options, eff.N));
  CHECK(oracle::check_monotone(r.trace).passed);
}

TEST_CASE("power_only with one user ends at full power") {
  const Scenario s = scenario_with(1, 2, 1e10);
  const EffectiveChannels eff = draw_instance(s, 10, NoiseMode::expectation);
  SolverOptions options;
  options.seed = 10;
  const SchemeResult r = run_scheme(SchemeId::power_only, eff, s, options);
  CHECK(r.state.p(0) == doctest::Approx(s.p_max).epsilon(1e-9));
}

TEST_CASE("joint warm-started from a baseline does not lose rate") {
  const Scenario s = scenario_with(3, 4, 1e11);
  for (std::uint64_t seed : {11u, 12u, 13u}) {
    const EffectiveChannels eff = draw_instance(s, seed, NoiseMode::expectation);
    SolverOptions options;
    options.seed = seed;
    for (SchemeId baseline : {SchemeId::power_only, SchemeId::phase_only}) {
      const SchemeResult b = run_scheme(baseline, eff, s, options);
      SolverOptions warm = options;
      warm.p_init = b.state.p;
      warm.theta_init = b.state.theta;
      const SchemeResult j = run_scheme(SchemeId::joint, eff, s, warm);
      CHECK(j.report.sum_rate >= b.report.sum_rate - 1e-9);
    }
  }
}
