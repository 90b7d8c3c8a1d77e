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

#ifndef IRSNET_RANDOM_HPP
#define IRSNET_RANDOM_HPP

#include "irsnet/types.hpp"

#include <cstdint>
#include <random>

namespace irsnet {

// Independent generator streams derived from one user seed. Each consumer
// (layout, fading, noise, phase init, ...) takes its own stream tag so that
// adding draws to one never shifts another.
enum class Stream : std::uint32_t {
  layout = 1,
  fading = 2,
  irs_noise = 3,
  theta_init = 4,
  test = 99,
};

inline std::mt19937_64 make_rng(std::uint64_t seed, Stream stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream)};
  return std::mt19937_64(seq);
}

// CN(0, variance): real and imaginary parts i.i.d. N(0, variance/2).
inline cplx complex_gaussian(std::mt19937_64& rng, double variance = 1.0) {
  std::normal_distribution<double> normal(0.0, std::sqrt(0.5 * variance));
  const double re = normal(rng);
  const double im = normal(rng);
  return {re, im};
}

inline CVec random_unit_phases(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> phase(0.0, 2.0 * M_PI);
  CVec out(n);
  for (int i = 0; i < n; ++i) out(i) = std::polar(1.0, phase(rng));
  return out;
}

}  // namespace irsnet

#endif  // IRSNET_RANDOM_HPP
