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
#include "irsnet/qcqp_theta.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace irsnet;
using test::rel_err;

namespace {

ThetaSubproblem identity_subproblem(int N, const CVec& u) {
  ThetaSubproblem sub;
  sub.N = N;
  sub.A = CMat::Identity(N, N);
  sub.u = u;
  return sub;
}

// An FP subproblem at the optimal auxiliaries of a random state.
ThetaSubproblem fp_subproblem(int K, int N, std::uint64_t seed) {
  const auto eff = test::random_channels(K, N, seed, 0.01);
  const CVec theta = test::feasible_theta(seed + 1, N);
  RVec p = RVec::Ones(K);
  const double sigma_d2 = 0.1;
  const RVec mu = update_mu(p, theta, eff, sigma_d2);
  const CVec beta = update_beta(theta, p, mu, eff, sigma_d2);
  return build_subproblem(p, mu, beta, eff, sigma_d2);
}

}  // namespace

TEST_CASE("subproblem construction") {
  const auto eff = test::random_channels(2, 3, 51, 0.01);
  SUBCASE("zero beta") {
    const ThetaSubproblem sub = build_subproblem(RVec::Ones(2), RVec::Ones(2), CVec::Zero(2), eff, 0.1);
    CHECK(sub.A.isZero(0.0));
    CHECK(sub.u.isZero(0.0));
    CHECK(sub.offset == 0.0);
  }
  SUBCASE("single user") {
    auto one = test::random_channels(1, 3, 52, 0.0);
    const CVec beta = CVec::Constant(1, cplx(0.3, -0.4));
    const ThetaSubproblem sub = build_subproblem(RVec::Ones(1), RVec::Zero(1), beta, one, 0.1);
    const CVec& v = one.v[0][0];
    CHECK((sub.A - std::norm(beta(0)) * v * v.adjoint()).norm() < 1e-15);
    CHECK((sub.u - std::sqrt(2.0) * std::conj(beta(0)) * v).norm() < 1e-15);
  }
  SUBCASE("objective is ln 2 times g2") {
    const CVec theta = test::feasible_theta(53, 3);
    RVec p(2);
    p << 0.4, 1.3;
    RVec mu(2);
    mu << 0.7, 2.2;
    CVec beta(2);
    beta << cplx(0.1, 0.2), cplx(-0.5, 0.05);
    const ThetaSubproblem sub = build_subproblem(p, mu, beta, eff, 0.1);
    CHECK(rel_err(sub.objective(theta), std::log(2.0) * eval_g2(theta, beta, p, mu, eff, 0.1)) < 1e-12);
  }
}

TEST_CASE("theta of lambda") {
  const ThetaSubproblem sub = identity_subproblem(3, CVec::Constant(3, 2.0));
  CHECK((theta_of_lambda(RVec::Zero(3), sub) - CVec::Ones(3)).norm() < 1e-15);

  const ThetaSubproblem fp = fp_subproblem(3, 5, 54);
  double previous = theta_of_lambda(RVec::Zero(5), fp).norm();
  for (double scale : {1e-3, 1e-2, 1e-1, 1.0, 10.0, 100.0}) {
    const double norm = theta_of_lambda(RVec::Constant(5, scale), fp).norm();
    CHECK(norm < previous);
    previous = norm;
  }

  ThetaSubproblem zero;
  zero.N = 2;
  zero.A = CMat::Zero(2, 2);
  zero.u = CVec::Zero(2);
  CHECK(theta_of_lambda(RVec::Zero(2), zero).isZero(0.0));
}

TEST_CASE("dual value") {
  SUBCASE("no active constraint") {
    const ThetaSubproblem sub = identity_subproblem(2, CVec::Constant(2, cplx(0.4, 0.2)));
    const CVec free = theta_of_lambda(RVec::Zero(2), sub);
    CHECK(rel_err(dual_value(RVec::Zero(2), sub), sub.objective(free)) < 1e-14);
    CHECK(rel_err(lagrangian(free, RVec::Zero(2), sub), sub.objective(free)) < 1e-14);
  }
  SUBCASE("weak duality") {
    const ThetaSubproblem sub = fp_subproblem(3, 6, 55);
    auto rng = make_rng(56, Stream::test);
    std::exponential_distribution<double> exp_dist(1.0);
    for (int trial = 0; trial < 20; ++trial) {
      RVec lambda(6);
      for (int n = 0; n < 6; ++n) lambda(n) = exp_dist(rng) * sub.u.norm();
      const double d = dual_value(lambda, sub);
      for (int sample = 0; sample < 100; ++sample)
        CHECK(d >= sub.objective(test::feasible_theta(1000 * trial + sample, 6)) - 1e-12 * std::abs(d));
    }
  }
  SUBCASE("one huge multiplier removes its element") {
    const ThetaSubproblem sub = fp_subproblem(2, 4, 57);
    RVec lambda = RVec::Constant(4, 0.3 * sub.u.norm());
    lambda(2) = 1e9 * sub.u.norm();
    const CVec theta = theta_of_lambda(lambda, sub);
    CHECK(std::abs(theta(2)) < 1e-6 * theta.norm());

    // reduced problem with element 2 deleted
    const std::vector<int> keep{0, 1, 3};
    ThetaSubproblem reduced;
    reduced.N = 3;
    reduced.A.resize(3, 3);
    reduced.u.resize(3);
    RVec reduced_lambda(3);
    for (int a = 0; a < 3; ++a) {
      reduced.u(a) = sub.u(keep[a]);
      reduced_lambda(a) = lambda(keep[a]);
      for (int b = 0; b < 3; ++b) reduced.A(a, b) = sub.A(keep[a], keep[b]);
    }
    reduced.offset = sub.offset;
    const double expected = dual_value(reduced_lambda, reduced) + lambda(2);
    CHECK(rel_err(dual_value(lambda, sub), expected) < 1e-6);
  }
}

TEST_CASE("kkt residual") {
  const ThetaSubproblem sub = identity_subproblem(2, CVec::Constant(2, 0.5));
  CHECK(kkt_residual(CVec::Ones(2), RVec::Ones(2), sub) == 0.0);
  CVec theta(2);
  theta << cplx(1.0, 0.0), cplx(0.0, 0.5);
  RVec lambda(2);
  lambda << 1.0, 0.0;
  CHECK(kkt_residual(theta, lambda, sub) == 0.0);
  lambda(1) = 0.1;  // slack 0.75 on element 1
  CHECK(kkt_residual(theta, lambda, sub) == doctest::Approx(0.075).epsilon(1e-14));
}

TEST_CASE("solve_dual") {
  SUBCASE("fast path") {
    const ThetaSubproblem sub = identity_subproblem(4, CVec::Constant(4, cplx(0.3, -0.2)));
    const DualSolveReport r = solve_dual(sub);
    CHECK(r.fast_path_taken);
    CHECK(r.converged);
    CHECK(r.lambda.isZero(0.0));
    CHECK(r.kkt_residual <= 1e-10);
  }
  SUBCASE("scalar constraint") {
    for (double u : {3.0, -5.0}) {
      ThetaSubproblem sub;
      sub.N = 1;
      sub.A = CMat::Constant(1, 1, 0.5);
      sub.u = CVec::Constant(1, u);
      DualOptions options;
      options.tol_kkt = 1e-14;
      const DualSolveReport r = solve_dual(sub, options);
      CHECK(r.converged);
      CHECK(std::abs(r.lambda(0) - (std::abs(u) / 2.0 - 0.5)) <= 1e-10);
      CHECK(std::abs(r.theta(0) - cplx(u > 0 ? 1.0 : -1.0, 0.0)) <= 1e-10);
      CHECK(std::abs((0.5 + r.lambda(0)) * r.theta(0) - u / 2.0) <= 1e-9);
    }
  }
  SUBCASE("ellipsoid only, then every acceleration") {
    const ThetaSubproblem sub = fp_subproblem(3, 6, 58);
    DualOptions plain;
    plain.polish = false;
    plain.recover_primal = false;
    const DualSolveReport a = solve_dual(sub, plain);
    const DualSolveReport b = solve_dual(sub);
    CHECK(a.converged);
    CHECK(b.converged);
    CHECK(a.newton_steps == 0);
    CHECK(a.kkt_residual <= plain.tol_kkt);
    CHECK(b.kkt_residual <= 1e-6);
    CHECK(rel_err(a.primal_value, b.primal_value) < 1e-5);
    CHECK(a.theta.cwiseAbs2().maxCoeff() <= 1.0 + 1e-9);
    CHECK(std::abs(a.dual_value - a.primal_value) <= 1e-5 * std::abs(a.dual_value));
  }
  SUBCASE("perturbing an active multiplier raises the residual") {
    const ThetaSubproblem sub = fp_subproblem(3, 5, 59);
    const DualSolveReport r = solve_dual(sub);
    REQUIRE(r.converged);
    Eigen::Index active = 0;
    REQUIRE(r.lambda.maxCoeff(&active) > 0.0);
    RVec bumped = r.lambda;
    bumped(active) += 0.1 * sub.u.norm();
    const CVec theta = theta_of_lambda(bumped, sub);
    CHECK(kkt_residual(theta, bumped, sub) > 10.0 * kkt_residual(r.theta, r.lambda, sub));
  }
  SUBCASE("warm start from the previous answer") {
    const ThetaSubproblem sub = fp_subproblem(3, 6, 60);
    const DualSolveReport cold = solve_dual(sub);
    const DualSolveReport warm = solve_dual(sub, {}, WarmStart{cold.lambda, cold.theta});
    CHECK(warm.converged);
    CHECK(warm.warm_started);
    CHECK(warm.iterations == 0);
    CHECK(rel_err(warm.primal_value, cold.primal_value) < 1e-6);
  }
  SUBCASE("iteration cap") {
    CHECK(default_ellipsoid_cap(1) > 0);
    CHECK(default_ellipsoid_cap(16) > default_ellipsoid_cap(4));
  }
}
