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

#include "irsnet/channel_model.hpp"
#include "irsnet/random.hpp"

#include <cmath>
#include <numeric>

namespace irsnet {

std::string to_string(NoiseMode mode) {
  return mode == NoiseMode::expectation ? "expectation" : "realization";
}

NoiseMode noise_mode_from_string(const std::string& name) {
  if (name == "expectation") return NoiseMode::expectation;
  if (name == "realization") return NoiseMode::realization;
  throw ValidationError("noise_mode", "expected 'expectation' or 'realization', got '" + name + "'");
}

double distance(const Point& a, const Point& b) { return std::hypot(a.x - b.x, a.y - b.y); }

int Scenario::total_elements() const { return std::accumulate(M.begin(), M.end(), 0); }

int Scenario::element_offset(int l) const {
  return std::accumulate(M.begin(), M.begin() + l, 0);
}

void Scenario::validate() const {
  if (K < 1) throw ValidationError("K", "must be >= 1");
  if (L < 1) throw ValidationError("L", "must be >= 1");
  if (static_cast<int>(M.size()) != L) throw ValidationError("M", "needs exactly L entries");
  for (int m : M)
    if (m < 1) throw ValidationError("M", "every element count must be >= 1");
  if (!irs_positions.empty() && static_cast<int>(irs_positions.size()) != L)
    throw ValidationError("irs_positions", "needs exactly L points (or none for random placement)");
  if (source_region.radius < 0) throw ValidationError("source_region", "radius must be >= 0");
  if (dest_region.radius < 0) throw ValidationError("dest_region", "radius must be >= 0");
  if (irs_region.x_max < irs_region.x_min || irs_region.y_max < irs_region.y_min)
    throw ValidationError("irs_region", "max must not be below min");
  if (!(d0 > 0)) throw ValidationError("d0", "must be > 0");
  if (!(sigma_r2 > 0)) throw ValidationError("sigma_r2", "must be > 0");
  if (!(sigma_d2 > 0)) throw ValidationError("sigma_d2", "must be > 0");
  if (!(p_max > 0)) throw ValidationError("p_max", "must be > 0");
  if (!std::isfinite(T0_db)) throw ValidationError("T0_db", "must be finite");
  if (!std::isfinite(rho_si)) throw ValidationError("rho_si", "must be finite");
  if (!std::isfinite(rho_id)) throw ValidationError("rho_id", "must be finite");
}

Scenario Scenario::with_random_irs(int L_new, int elements) const {
  Scenario out = *this;
  out.L = L_new;
  out.M.assign(static_cast<std::size_t>(L_new), elements);
  out.irs_positions.clear();
  return out;
}

double path_loss(double d, double T0_db, double d0, double rho) {
  if (!(d > 0)) throw std::domain_error("path_loss: distance must be positive");
  if (!(d0 > 0)) throw std::domain_error("path_loss: reference distance must be positive");
  return std::pow(10.0, -T0_db / 10.0) * std::pow(d / d0, -rho);
}

namespace {

Point uniform_in_disk(std::mt19937_64& rng, const Disk& disk) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = disk.radius * std::sqrt(unit(rng));
  const double phi = 2.0 * M_PI * unit(rng);
  return {disk.center.x + r * std::cos(phi), disk.center.y + r * std::sin(phi)};
}

Point uniform_in_rect(std::mt19937_64& rng, const Rect& rect) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  return {rect.x_min + (rect.x_max - rect.x_min) * unit(rng),
          rect.y_min + (rect.y_max - rect.y_min) * unit(rng)};
}

}  // namespace

Layout sample_layout(const Scenario& scenario, std::uint64_t seed) {
  auto rng = make_rng(seed, Stream::layout);
  Layout out;
  out.sources.reserve(scenario.K);
  out.destinations.reserve(scenario.K);
  for (int k = 0; k < scenario.K; ++k) out.sources.push_back(uniform_in_disk(rng, scenario.source_region));
  for (int k = 0; k < scenario.K; ++k)
    out.destinations.push_back(uniform_in_disk(rng, scenario.dest_region));
  if (!scenario.irs_positions.empty()) {
    out.irs = scenario.irs_positions;
  } else {
    for (int l = 0; l < scenario.L; ++l) out.irs.push_back(uniform_in_rect(rng, scenario.irs_region));
  }
  return out;
}

ChannelRealization sample_channels(const Scenario& scenario, const Layout& layout,
                                   std::uint64_t seed, bool draw_noise) {
  auto rng = make_rng(seed, Stream::fading);
  const int K = scenario.K;
  const int L = scenario.L;

  ChannelRealization out;
  out.seed = seed;
  out.h.assign(L, std::vector<CVec>(K));
  out.g.assign(K, std::vector<CVec>(L));

  for (int l = 0; l < L; ++l) {
    for (int k = 0; k < K; ++k) {
      const double d = distance(layout.sources[k], layout.irs[l]);
      const double amp = std::sqrt(path_loss(d, scenario.T0_db, scenario.d0, scenario.rho_si));
      CVec h(scenario.M[l]);
      for (int m = 0; m < scenario.M[l]; ++m) h(m) = amp * complex_gaussian(rng);
      out.h[l][k] = std::move(h);
    }
  }
  for (int k = 0; k < K; ++k) {
    for (int l = 0; l < L; ++l) {
      const double d = distance(layout.irs[l], layout.destinations[k]);
      const double amp = std::sqrt(path_loss(d, scenario.T0_db, scenario.d0, scenario.rho_id));
      CVec g(scenario.M[l]);
      for (int m = 0; m < scenario.M[l]; ++m) g(m) = amp * complex_gaussian(rng);
      out.g[k][l] = std::move(g);
    }
  }

  if (draw_noise) {
    auto noise_rng = make_rng(seed, Stream::irs_noise);
    const int N = scenario.total_elements();
    CVec n(N);
    for (int i = 0; i < N; ++i) n(i) = complex_gaussian(noise_rng, scenario.sigma_r2);
    std::vector<CVec> z(K, CVec(N));
    for (int k = 0; k < K; ++k) {
      int offset = 0;
      for (int l = 0; l < L; ++l) {
        const int m = scenario.M[l];
        z[k].segment(offset, m) = n.segment(offset, m).cwiseProduct(out.g[k][l].conjugate());
        offset += m;
      }
    }
    out.noise_draw = std::move(z);
  }
  return out;
}

EffectiveChannels assemble_effective(const ChannelRealization& real, NoiseMode mode,
                                     double sigma_r2) {
  if (mode == NoiseMode::realization && !real.noise_draw)
    throw std::logic_error("assemble_effective: realization mode requires a noise draw");

  const int L = static_cast<int>(real.h.size());
  const int K = L > 0 ? static_cast<int>(real.h[0].size()) : 0;
  int N = 0;
  for (int l = 0; l < L; ++l) N += static_cast<int>(real.h[l][0].size());

  EffectiveChannels eff;
  eff.N = N;
  eff.v.assign(K, std::vector<CVec>(K, CVec(N)));
  for (int i = 0; i < K; ++i) {
    for (int k = 0; k < K; ++k) {
      int offset = 0;
      for (int l = 0; l < L; ++l) {
        const auto m = real.h[l][i].size();
        eff.v[i][k].segment(offset, m) = real.h[l][i].cwiseProduct(real.g[k][l].conjugate());
        offset += static_cast<int>(m);
      }
    }
  }

  eff.C.reserve(K);
  for (int k = 0; k < K; ++k) {
    if (mode == NoiseMode::realization) {
      const CVec& z = (*real.noise_draw)[k];
      eff.C.push_back(z * z.adjoint());
    } else {
      RVec diag(N);
      int offset = 0;
      for (int l = 0; l < L; ++l) {
        const auto m = real.g[k][l].size();
        diag.segment(offset, m) = sigma_r2 * real.g[k][l].cwiseAbs2();
        offset += static_cast<int>(m);
      }
      CMat c = CMat::Zero(N, N);
      c.diagonal() = diag.cast<cplx>();
      eff.C.push_back(std::move(c));
    }
  }
  return eff;
}

EffectiveChannels draw_instance(const Scenario& scenario, std::uint64_t seed, NoiseMode mode) {
  const Layout layout = sample_layout(scenario, seed);
  const ChannelRealization real =
      sample_channels(scenario, layout, seed, mode == NoiseMode::realization);
  return assemble_effective(real, mode, scenario.sigma_r2);
}

double mean_cascade_gain(const Scenario& scenario, const Layout& layout) {
  double total = 0.0;
  for (int k = 0; k < scenario.K; ++k) {
    for (int l = 0; l < scenario.L; ++l) {
      const double si = path_loss(distance(layout.sources[k], layout.irs[l]), scenario.T0_db,
                                  scenario.d0, scenario.rho_si);
      const double id = path_loss(distance(layout.irs[l], layout.destinations[k]), scenario.T0_db,
                                  scenario.d0, scenario.rho_id);
      total += scenario.M[l] * si * id;
    }
  }
  return total / scenario.K;
}

}  // namespace irsnet
