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
#include "irsnet/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

#include <limits>

using namespace irsnet;

namespace {

Scenario small_scenario(int K, int M) {
  Scenario s;
  s.K = K;
  s.L = 1;
  s.M = {M};
  s.irs_positions = {{150.0, 0.0}};
  s.validate();
  return s;
}

}  // namespace

TEST_CASE("closed-form updates") {
  const auto eff = test::random_channels(3, 4, 41, 0.01);
  const CVec theta = test::feasible_theta(42, 4);
  RVec p(3);
  p << 0.7, 0.0, 1.1;
  const double sigma_d2 = 0.1;

  SUBCASE("mu is the SINR") {
    CHECK((update_mu(p, theta, eff, sigma_d2) - sinr(p, theta, eff, sigma_d2)).norm() == 0.0);
    CHECK(update_mu(RVec::Zero(3), theta, eff, sigma_d2).isZero(0.0));
  }
  SUBCASE("switched-off users get zero auxiliaries") {
    const RVec mu = update_mu(p, theta, eff, sigma_d2);
    CHECK(update_alpha(p, theta, mu, eff, sigma_d2)(1) == 0.0);
    CHECK(update_beta(theta, p, mu, eff, sigma_d2)(1) == 0.0);
  }
  SUBCASE("zero alpha sends every power to the cap") {
    const RVec mu = RVec::Ones(3);
    const RVec out = update_power(RVec::Zero(3), theta, mu, eff, 2.5);
    CHECK((out - RVec::Constant(3, 2.5)).norm() == 0.0);
  }
  SUBCASE("powers stay in the box") {
    const RVec mu = update_mu(p, theta, eff, sigma_d2);
    const RVec alpha = update_alpha(p, theta, mu, eff, sigma_d2);
    const RVec out = update_power(alpha, theta, mu, eff, 1.0);
    CHECK(out.minCoeff() >= 0.0);
    CHECK(out.maxCoeff() <= 1.0);
  }
}

TEST_CASE("stopping rule and trace") {
  const Scenario s = small_scenario(3, 4);
  const EffectiveChannels eff = draw_instance(s, 5, NoiseMode::expectation);
  SolverOptions options;
  options.seed = 5;

  SUBCASE("infinite epsilon runs exactly one iteration") {
    options.epsilon = std::numeric_limits<double>::infinity();
    const SolveResult r = solve(s, eff, options);
    CHECK(r.trace.iterations() == 1);
    CHECK(r.trace.terminated_reason == Termination::epsilon_reached);
  }
  SUBCASE("max_iter is not an error") {
    options.epsilon = 1e-300;
    options.max_iter = 3;
    const SolveResult r = solve(s, eff, options);
    CHECK(r.trace.iterations() == 3);
    CHECK(r.trace.terminated_reason == Termination::max_iter);
  }
  SUBCASE("first record is the starting point at mu = SINR") {
    const SolveResult r = solve(s, eff, options);
    const auto& first = r.trace.records.front();
    CHECK(first.t == 0);
    CHECK(test::rel_err(first.f1, first.sum_rate) < 1e-12);
    CHECK(oracle::check_monotone(r.trace).passed);
    CHECK(r.state.p.maxCoeff() <= s.p_max);
    CHECK(r.state.theta.cwiseAbs2().maxCoeff() <= 1.0 + 1e-9);
  }
  SUBCASE("same seeds give the same trace") {
    const SolveResult a = solve(s, eff, options);
    const SolveResult b = solve(s, eff, options);
    REQUIRE(a.trace.records.size() == b.trace.records.size());
    for (std::size_t t = 0; t < a.trace.records.size(); ++t)
      CHECK(a.trace.records[t].f1 == b.trace.records[t].f1);
    CHECK(a.state.theta == b.state.theta);
  }
}

TEST_CASE("single user on a single element") {
  Scenario s = small_scenario(1, 1);
  s.p_max = 1e9;
  const EffectiveChannels eff = draw_instance(s, 3, NoiseMode::expectation);
  SolverOptions options;
  options.seed = 3;
  const SolveResult r = solve(s, eff, options);
  CHECK(r.state.p(0) == doctest::Approx(s.p_max).epsilon(1e-12));
  CHECK(std::abs(r.state.theta(0)) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("option validation") {
  SolverOptions o;
  o.epsilon = 0.0;
  CHECK_THROWS_AS(o.validate(), ValidationError);
  o = SolverOptions{};
  o.max_iter = 0;
  CHECK_THROWS_AS(o.validate(), ValidationError);
  CHECK_NOTHROW(SolverOptions{}.validate());
}
