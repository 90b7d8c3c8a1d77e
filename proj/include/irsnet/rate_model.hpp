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

#ifndef IRSNET_RATE_MODEL_HPP
#define IRSNET_RATE_MODEL_HPP

#include "irsnet/channel_model.hpp"

namespace irsnet {

// Iterate of the alternating optimizer plus its auxiliaries. The IRS amplitude
// is folded into theta, so |theta_n| <= 1 is the only reflection constraint.
struct BeamformingState {
  RVec p;       // transmit powers, 0 <= p_k <= P_max
  CVec theta;   // reflection coefficients, |theta_n|^2 <= 1
  RVec mu;      // Lagrangian-dual auxiliaries, >= 0
  RVec alpha;   // power-control quadratic-transform auxiliaries
  CVec beta;    // reflection quadratic-transform auxiliaries
  RVec lambda;  // dual variables of the per-element modulus constraints, >= 0
};

struct RateReport {
  RVec sinr;
  RVec rate;  // bits per channel use, includes the 1/2 two-hop prefactor
  double sum_rate = 0.0;
};

// theta projected onto every cascaded channel: coupling(i, k) = theta^H v[i][k],
// reflected(k) = theta^H C_k theta.
struct Coupling {
  CMat coupling;
  RVec reflected;

  RMat gains() const { return coupling.cwiseAbs2(); }
};

Coupling couple(const CVec& theta, const EffectiveChannels& eff);

// sum_i p_i |theta^H v_{i,k}|^2 + theta^H C_k theta + sigma_d2, over all i.
RVec total_received(const RVec& p, const Coupling& c, double sigma_d2);

RVec sinr(const RVec& p, const CVec& theta, const EffectiveChannels& eff, double sigma_d2);

// Throws std::domain_error on a negative entry.
RateReport rates(const RVec& sinr);

RateReport evaluate(const RVec& p, const CVec& theta, const EffectiveChannels& eff,
                    double sigma_d2);

inline double sum_rate(const RVec& p, const CVec& theta, const EffectiveChannels& eff,
                       double sigma_d2) {
  return evaluate(p, theta, eff, sigma_d2).sum_rate;
}

// The Lagrangian-dual transform of the sum rate, in bits:
//
//   f1 = sum_k 1/2 log2(1 + mu_k) + (1/ln 2) sum_k [ -mu_k/2 + (1 + mu_k) S_k / (2 T_k) ]
//
// with S_k the direct received power and T_k the total received power
// (signal + interference + noise). It equals the sum rate at mu = SINR and is
// concave in mu with its maximum there. The ratio part f2 and its surrogates
// g1, g2 carry the same 1/ln 2 factor, so the closed-form maximizers
// alpha*, p*, beta*, theta* are the familiar unscaled expressions.
inline constexpr double kBitsPerNat = 1.4426950408889634;  // 1 / ln 2

// sum_k 1/2 log2(1 + mu_k) - sum_k mu_k / (2 ln 2)
double mu_constant(const RVec& mu);

double eval_f1(const RVec& p, const CVec& theta, const RVec& mu, const EffectiveChannels& eff,
               double sigma_d2);

// The sum-of-ratios part of f1: f1 = mu_constant(mu) + f2.
double eval_f2(const RVec& p, const CVec& theta, const RVec& mu, const EffectiveChannels& eff,
               double sigma_d2);

// Quadratic-transform surrogate of f2 in p (theta, mu fixed).
double eval_g1(const RVec& p, const RVec& alpha, const CVec& theta, const RVec& mu,
               const EffectiveChannels& eff, double sigma_d2);

// Quadratic-transform surrogate of f2 in theta (p, mu fixed).
double eval_g2(const CVec& theta, const CVec& beta, const RVec& p, const RVec& mu,
               const EffectiveChannels& eff, double sigma_d2);

}  // namespace irsnet

#endif  // IRSNET_RATE_MODEL_HPP
