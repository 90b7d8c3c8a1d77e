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

#include "irsnet/rate_model.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnet {

Coupling couple(const CVec& theta, const EffectiveChannels& eff) {
  const int K = eff.K();
  Coupling c;
  c.coupling.resize(K, K);
  c.reflected.resize(K);
  for (int i = 0; i < K; ++i)
    for (int k = 0; k < K; ++k) c.coupling(i, k) = theta.dot(eff.v[i][k]);
  for (int k = 0; k < K; ++k) c.reflected(k) = std::real(theta.dot(eff.C[k] * theta));
  return c;
}

RVec total_received(const RVec& p, const Coupling& c, double sigma_d2) {
  // gains()(i, k) weighted by p_i and summed over i
  return c.gains().transpose() * p + c.reflected + RVec::Constant(p.size(), sigma_d2);
}

namespace {

RVec signal_power(const RVec& p, const Coupling& c) {
  return p.cwiseProduct(c.coupling.diagonal().cwiseAbs2());
}

RVec sinr_from(const RVec& p, const Coupling& c, double sigma_d2) {
  const RMat gains = c.gains();
  const Eigen::Index K = p.size();
  RVec out(K);
  for (Eigen::Index k = 0; k < K; ++k) {
    double denom = c.reflected(k) + sigma_d2;
    for (Eigen::Index i = 0; i < K; ++i)
      if (i != k) denom += p(i) * gains(i, k);
    out(k) = p(k) * gains(k, k) / denom;
  }
  return out;
}

}  // namespace

RVec sinr(const RVec& p, const CVec& theta, const EffectiveChannels& eff, double sigma_d2) {
  return sinr_from(p, couple(theta, eff), sigma_d2);
}

RateReport rates(const RVec& sinr) {
  RateReport out;
  out.sinr = sinr;
  out.rate.resize(sinr.size());
  for (Eigen::Index k = 0; k < sinr.size(); ++k) {
    if (sinr(k) < 0) throw std::domain_error("rates: negative SINR");
    out.rate(k) = 0.5 * std::log2(1.0 + sinr(k));
  }
  out.sum_rate = out.rate.sum();
  return out;
}

RateReport evaluate(const RVec& p, const CVec& theta, const EffectiveChannels& eff,
                    double sigma_d2) {
  return rates(sinr(p, theta, eff, sigma_d2));
}

double mu_constant(const RVec& mu) {
  double out = 0.0;
  for (Eigen::Index k = 0; k < mu.size(); ++k)
    out += 0.5 * std::log2(1.0 + mu(k)) - 0.5 * mu(k) * kBitsPerNat;
  return out;
}

double eval_f2(const RVec& p, const CVec& theta, const RVec& mu, const EffectiveChannels& eff,
               double sigma_d2) {
  const Coupling c = couple(theta, eff);
  const RVec signal = signal_power(p, c);
  const RVec total = total_received(p, c, sigma_d2);
  double out = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) out += (1.0 + mu(k)) * signal(k) / (2.0 * total(k));
  return kBitsPerNat * out;
}

double eval_f1(const RVec& p, const CVec& theta, const RVec& mu, const EffectiveChannels& eff,
               double sigma_d2) {
  return mu_constant(mu) + eval_f2(p, theta, mu, eff, sigma_d2);
}

double eval_g1(const RVec& p, const RVec& alpha, const CVec& theta, const RVec& mu,
               const EffectiveChannels& eff, double sigma_d2) {
  const Coupling c = couple(theta, eff);
  const RVec direct = c.coupling.diagonal().cwiseAbs2();
  const RVec total = total_received(p, c, sigma_d2);
  double out = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    out += alpha(k) * std::sqrt(2.0 * (1.0 + mu(k)) * direct(k) * p(k));
    out -= alpha(k) * alpha(k) * total(k);
  }
  return kBitsPerNat * out;
}

double eval_g2(const CVec& theta, const CVec& beta, const RVec& p, const RVec& mu,
               const EffectiveChannels& eff, double sigma_d2) {
  const Coupling c = couple(theta, eff);
  const RVec total = total_received(p, c, sigma_d2);
  double out = 0.0;
  for (Eigen::Index k = 0; k < p.size(); ++k) {
    out += std::sqrt(2.0 * p(k) * (1.0 + mu(k))) * std::real(std::conj(beta(k)) * c.coupling(k, k));
    out -= std::norm(beta(k)) * total(k);
  }
  return kBitsPerNat * out;
}

}  // namespace irsnet
