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

#ifndef IRSNET_CHANNEL_MODEL_HPP
#define IRSNET_CHANNEL_MODEL_HPP

#include "irsnet/types.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace irsnet {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(const Point& a, const Point& b);

struct Disk {
  Point center;
  double radius = 0.0;
};

struct Rect {
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
};

// Geometry and physical constants of one network instance. Powers and gains
// are linear; only T0_db is in dB.
struct Scenario {
  int K = 6;
  int L = 4;
  std::vector<int> M{4, 4, 4, 4};
  Disk source_region{{0.0, 0.0}, 50.0};
  Disk dest_region{{300.0, 0.0}, 50.0};
  // Fixed IRS locations. When empty the IRSs are drawn uniformly from irs_region.
  std::vector<Point> irs_positions{{100.0, 50.0}, {100.0, -50.0}, {200.0, 50.0}, {200.0, -50.0}};
  Rect irs_region{50.0, 250.0, -60.0, 60.0};
  double T0_db = 30.0;
  double d0 = 1.0;
  double rho_si = 2.2;
  double rho_id = 2.8;
  double sigma_r2 = 0.01;
  double sigma_d2 = 0.01;
  double p_max = 1.0;

  int total_elements() const;
  // Offset of IRS l's block inside the concatenated length-N vectors.
  int element_offset(int l) const;
  // Throws ValidationError naming the first offending field.
  void validate() const;

  // Same geometry with L IRSs of `elements` each, placed randomly in irs_region.
  Scenario with_random_irs(int L_new, int elements) const;
};

struct Layout {
  std::vector<Point> sources;
  std::vector<Point> destinations;
  std::vector<Point> irs;
};

// h[l][k] in C^{M_l}: source k -> IRS l.  g[k][l] in C^{M_l}: IRS l -> destination k.
// noise_draw[k] is z_k = concat_l(n_l .* conj(g[k][l])), present only when drawn.
struct ChannelRealization {
  std::vector<std::vector<CVec>> h;
  std::vector<std::vector<CVec>> g;
  std::optional<std::vector<CVec>> noise_draw;
  std::uint64_t seed = 0;
};

// v[i][k] in C^N is the cascaded channel source i -> destination k, so that the
// end-to-end gain is theta^H v[i][k].  C[k] is the reflected-noise covariance
// seen at destination k.
struct EffectiveChannels {
  std::vector<std::vector<CVec>> v;
  std::vector<CMat> C;
  int N = 0;

  int K() const { return static_cast<int>(v.size()); }
};

// kappa(d) = 10^(-T0_db/10) * (d/d0)^(-rho).  Throws std::domain_error when d <= 0 or d0 <= 0.
double path_loss(double d, double T0_db, double d0, double rho);

Layout sample_layout(const Scenario& scenario, std::uint64_t seed);

// Rayleigh channels scaled by the square root of the link path loss. With
// draw_noise, one IRS noise vector n ~ CN(0, sigma_r2 I_N) is drawn and folded
// into per-destination z_k.
ChannelRealization sample_channels(const Scenario& scenario, const Layout& layout,
                                   std::uint64_t seed, bool draw_noise = false);

// Throws std::logic_error in realization mode when real.noise_draw is absent.
EffectiveChannels assemble_effective(const ChannelRealization& real, NoiseMode mode,
                                     double sigma_r2);

// Convenience pipeline: layout, channels (noise drawn iff mode == realization)
// and effective channels, all from one seed.
EffectiveChannels draw_instance(const Scenario& scenario, std::uint64_t seed, NoiseMode mode);

// Expected direct-pair cascaded gain under random unit phases,
// (1/K) sum_k sum_l M_l kappa_SI(l,k) kappa_ID(k,l), for a resolved layout.
double mean_cascade_gain(const Scenario& scenario, const Layout& layout);

}  // namespace irsnet

#endif  // IRSNET_CHANNEL_MODEL_HPP
