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

#ifndef IRSNET_TESTS_SUPPORT_HPP
#define IRSNET_TESTS_SUPPORT_HPP

#include "irsnet/channel_model.hpp"
#include "irsnet/random.hpp"
#include "irsnet/validation.hpp"

#include <algorithm>
#include <cmath>

namespace irsnet::test {

inline double rel_err(double a, double b) {
  return std::abs(a - b) / std::max({std::abs(a), std::abs(b), 1e-300});
}

// K x K cascaded channels with i.i.d. CN(0,1) entries and C[k] = c_scale * I.
inline EffectiveChannels random_channels(int K, int N, std::uint64_t seed, double c_scale = 0.0) {
  auto rng = make_rng(seed, Stream::test);
  EffectiveChannels eff;
  eff.N = N;
  eff.v.assign(K, std::vector<CVec>(K));
  for (int i = 0; i < K; ++i)
    for (int k = 0; k < K; ++k) {
      eff.v[i][k].resize(N);
      for (int n = 0; n < N; ++n) eff.v[i][k](n) = complex_gaussian(rng);
    }
  eff.C.assign(K, c_scale * CMat::Identity(N, N));
  return eff;
}

inline CVec feasible_theta(std::uint64_t seed, int N) {
  auto rng = make_rng(seed, Stream::test);
  CVec theta = random_unit_phases(rng, N);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n = 0; n < N; ++n) theta(n) *= std::sqrt(unit(rng));
  return theta;
}

}  // namespace irsnet::test

#endif  // IRSNET_TESTS_SUPPORT_HPP
