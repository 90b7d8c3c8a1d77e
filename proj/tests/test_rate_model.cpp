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
#include "irsnet/rate_model.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace irsnet;
using test::rel_err;

namespace {

// Two users, two elements, hand-picked coefficients. Reference values below
// come from a 40-digit evaluation of the same expressions.
struct Hand {
  EffectiveChannels eff;
  CVec theta;
  RVec p;
  RVec mu;
  double sigma_d2 = 0.1;

  Hand() {
    eff.N = 2;
    eff.v.assign(2, std::vector<CVec>(2, CVec(2)));
    eff.v[0][0] << cplx(1.0, 0.5), cplx(-0.3, 1.0);
    eff.v[0][1] << cplx(0.2, -0.1), cplx(0.4, 0.3);
    eff.v[1][0] << cplx(-0.5, 0.2), cplx(0.0, 0.1);
    eff.v[1][1] << cplx(0.8, 0.0), cplx(0.6, -0.6);
    eff.C.assign(2, CMat::Zero(2, 2));
    eff.C[0].diagonal() << 0.02, 0.05;
    eff.C[1].diagonal() << 0.01, 0.03;
    theta.resize(2);
    theta << std::polar(1.0, 0.3), std::polar(0.7, -1.1);
    p.resize(2);
    p << 0.8, 1.5;
    mu.resize(2);
    mu << 0.5, 2.0;
  }
};

}  // namespace

TEST_CASE("sinr on the hand instance") {
  const Hand h;
  const RVec s = sinr(h.p, h.theta, h.eff, h.sigma_d2);
  CHECK(rel_err(s(0), 0.2811532577519995665515985) < 1e-13);
  CHECK(rel_err(s(1), 16.39725944899031984702326) < 1e-13);
  CHECK(rel_err(sum_rate(h.p, h.theta, h.eff, h.sigma_d2), 2.239115611265638172166226) < 1e-13);
  CHECK(rel_err(eval_f1(h.p, h.theta, h.mu, h.eff, h.sigma_d2), 1.55869950343136404718464) < 1e-13);
  CHECK(rel_err(eval_f2(h.p, h.theta, h.mu, h.eff, h.sigma_d2), 2.277105803821412124930807) < 1e-13);
}

TEST_CASE("sinr special cases") {
  const auto eff = test::random_channels(3, 4, 1, 0.01);
  const CVec theta = test::feasible_theta(2, 4);
  CHECK(sinr(RVec::Zero(3), theta, eff, 0.01).isZero(0.0));

  EffectiveChannels one;
  one.N = 1;
  one.v = {{CVec::Constant(1, cplx(1.0, 1.0))}};  // |theta^H v|^2 = 2 at theta = 1
  one.C = {CMat::Zero(1, 1)};
  const RVec s = sinr(RVec::Constant(1, 3.0), CVec::Ones(1), one, 0.01);
  CHECK(rel_err(s(0), 600.0) < 1e-14);
}

TEST_CASE("sinr matches a scalar re-computation summed in reverse") {
  const int K = 3;
  const int N = 4;
  const auto eff = test::random_channels(K, N, 11, 0.02);
  const CVec theta = test::feasible_theta(12, N);
  RVec p(K);
  p << 0.3, 1.7, 0.9;
  const double sigma_d2 = 0.05;
  const RVec s = sinr(p, theta, eff, sigma_d2);
  for (int k = K - 1; k >= 0; --k) {
    auto gain = [&](int i) {
      cplx acc = 0.0;
      for (int n = N - 1; n >= 0; --n) acc += std::conj(theta(n)) * eff.v[i][k](n);
      return std::norm(acc);
    };
    double reflected = 0.0;
    for (int n = N - 1; n >= 0; --n) reflected += std::real(eff.C[k](n, n)) * std::norm(theta(n));
    double denom = sigma_d2 + reflected;
    for (int i = K - 1; i >= 0; --i)
      if (i != k) denom += p(i) * gain(i);
    CHECK(rel_err(s(k), p(k) * gain(k) / denom) < 1e-12);
  }
}

TEST_CASE("rates") {
  CHECK(rates(RVec::Zero(1)).rate(0) == 0.0);
  CHECK(rates(RVec::Constant(1, 3.0)).rate(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(rates(RVec::Ones(3)).sum_rate == doctest::Approx(1.5).epsilon(1e-15));
  CHECK_THROWS_AS(rates(RVec::Constant(2, -1e-3)), std::domain_error);
}

TEST_CASE("f1 identities") {
  const auto eff = test::random_channels(4, 6, 21, 0.01);
  const CVec theta = test::feasible_theta(22, 6);
  RVec p(4);
  p << 0.5, 2.0, 0.1, 1.0;
  const double sigma_d2 = 0.2;

  SUBCASE("mu at the SINR gives the sum rate") {
    const RVec mu = update_mu(p, theta, eff, sigma_d2);
    CHECK(rel_err(eval_f1(p, theta, mu, eff, sigma_d2), sum_rate(p, theta, eff, sigma_d2)) < 1e-12);
  }
  SUBCASE("zero power leaves the mu terms") {
    RVec mu(4);
    mu << 0.2, 1.0, 3.0, 0.0;
    double expected = 0.0;
    for (int k = 0; k < 4; ++k)
      expected += 0.5 * std::log2(1.0 + mu(k)) - 0.5 * mu(k) / std::log(2.0);
    CHECK(rel_err(eval_f1(RVec::Zero(4), theta, mu, eff, sigma_d2), expected) < 1e-14);
    CHECK(eval_f2(RVec::Zero(4), theta, mu, eff, sigma_d2) == 0.0);
  }
  SUBCASE("zero mu leaves the signal fractions") {
    const Coupling c = couple(theta, eff);
    const RVec total = total_received(p, c, sigma_d2);
    double expected = 0.0;
    for (int k = 0; k < 4; ++k) expected += p(k) * std::norm(c.coupling(k, k)) / (2.0 * total(k));
    expected /= std::log(2.0);
    CHECK(rel_err(eval_f1(p, theta, RVec::Zero(4), eff, sigma_d2), expected) < 1e-14);
  }
}

TEST_CASE("quadratic transforms are tight at their optimal auxiliaries") {
  const auto eff = test::random_channels(3, 5, 31, 0.01);
  const CVec theta = test::feasible_theta(32, 5);
  RVec p(3);
  p << 1.2, 0.4, 0.8;
  const double sigma_d2 = 0.1;
  const RVec mu = update_mu(p, theta, eff, sigma_d2);
  const double f2 = eval_f2(p, theta, mu, eff, sigma_d2);

  const RVec alpha = update_alpha(p, theta, mu, eff, sigma_d2);
  CHECK(rel_err(eval_g1(p, alpha, theta, mu, eff, sigma_d2), f2) < 1e-12);
  CHECK(eval_g1(p, RVec::Zero(3), theta, mu, eff, sigma_d2) == 0.0);
  for (int step = -20; step <= 20; ++step) {
    if (step == 0) continue;
    const RVec scanned = alpha * (1.0 + 0.05 * step);
    CHECK(eval_g1(p, scanned, theta, mu, eff, sigma_d2) < f2);
  }

  const CVec beta = update_beta(theta, p, mu, eff, sigma_d2);
  CHECK(rel_err(eval_g2(theta, beta, p, mu, eff, sigma_d2), f2) < 1e-12);
  CHECK(eval_g2(theta, CVec::Zero(3), p, mu, eff, sigma_d2) == 0.0);
  auto rng = make_rng(33, Stream::test);
  for (int trial = 0; trial < 100; ++trial) {
    CVec perturbed = beta;
    for (int k = 0; k < 3; ++k) perturbed(k) += 1e-2 * std::abs(beta(k)) * complex_gaussian(rng);
    CHECK(eval_g2(theta, perturbed, p, mu, eff, sigma_d2) < f2);
  }
}
