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

#include "irsnet/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace irsnet::oracle {

namespace {

void require_grid(int levels, int dims, const char* what) {
  if (levels < 1) throw std::invalid_argument(std::string(what) + ": levels must be >= 1");
  if (std::pow(static_cast<double>(levels), dims) > kMaxGridPoints)
    throw std::length_error(std::string(what) + ": grid exceeds 1e7 points");
}

// Mixed-radix odometer; returns false after the last combination.
bool advance(std::vector<int>& digits, int base) {
  for (auto& d : digits) {
    if (++d < base) return true;
    d = 0;
  }
  return false;
}

CVec phases_from(const std::vector<int>& digits, int levels) {
  CVec theta(static_cast<Eigen::Index>(digits.size()));
  for (std::size_t n = 0; n < digits.size(); ++n)
    theta(static_cast<Eigen::Index>(n)) = std::polar(1.0, 2.0 * M_PI * digits[n] / levels);
  return theta;
}

RVec powers_from(const std::vector<int>& digits, int levels, double p_max) {
  RVec p(static_cast<Eigen::Index>(digits.size()));
  for (std::size_t k = 0; k < digits.size(); ++k)
    p(static_cast<Eigen::Index>(k)) = levels > 1 ? p_max * digits[k] / (levels - 1) : p_max;
  return p;
}

}  // namespace

ThetaSearch brute_force_theta(const EffectiveChannels& eff, const RVec& p, int phase_levels,
                              double sigma_d2) {
  require_grid(phase_levels, eff.N, "brute_force_theta");
  ThetaSearch best;
  best.sum_rate = -1.0;
  std::vector<int> digits(static_cast<std::size_t>(eff.N), 0);
  do {
    CVec theta = phases_from(digits, phase_levels);
    const double value = sum_rate(p, theta, eff, sigma_d2);
    if (value > best.sum_rate) {
      best.sum_rate = value;
      best.theta = std::move(theta);
    }
  } while (advance(digits, phase_levels));
  return best;
}

PowerSearch brute_force_power(const EffectiveChannels& eff, const CVec& theta, int power_levels,
                              double p_max, double sigma_d2) {
  require_grid(power_levels, eff.K(), "brute_force_power");
  PowerSearch best;
  best.sum_rate = -1.0;
  std::vector<int> digits(static_cast<std::size_t>(eff.K()), 0);
  do {
    RVec p = powers_from(digits, power_levels, p_max);
    const double value = sum_rate(p, theta, eff, sigma_d2);
    if (value > best.sum_rate) {
      best.sum_rate = value;
      best.p = std::move(p);
    }
  } while (advance(digits, power_levels));
  return best;
}

JointSearch brute_force_joint(const EffectiveChannels& eff, int phase_levels, int power_levels,
                              double p_max, double sigma_d2) {
  if (std::pow(static_cast<double>(phase_levels), eff.N) *
          std::pow(static_cast<double>(power_levels), eff.K()) >
      kMaxGridPoints)
    throw std::length_error("brute_force_joint: grid exceeds 1e7 points");
  JointSearch best;
  best.sum_rate = -1.0;
  std::vector<int> phase_digits(static_cast<std::size_t>(eff.N), 0);
  do {
    const CVec theta = phases_from(phase_digits, phase_levels);
    const PowerSearch inner = brute_force_power(eff, theta, power_levels, p_max, sigma_d2);
    if (inner.sum_rate > best.sum_rate) {
      best.sum_rate = inner.sum_rate;
      best.p = inner.p;
      best.theta = theta;
    }
  } while (advance(phase_digits, phase_levels));
  return best;
}

double finite_diff_check(const ScalarFunction& fun, const RVec& point, const RVec& direction,
                         double step) {
  const double forward = fun(point + step * direction);
  const double backward = fun(point - step * direction);
  const double derivative = (forward - backward) / (2.0 * step);
  return std::abs(derivative) / std::max(std::abs(fun(point)), 1e-300);
}

RVec stack(const CVec& z) {
  RVec x(2 * z.size());
  x.head(z.size()) = z.real();
  x.tail(z.size()) = z.imag();
  return x;
}

CVec unstack(const RVec& x) {
  const Eigen::Index n = x.size() / 2;
  CVec z(n);
  for (Eigen::Index i = 0; i < n; ++i) z(i) = cplx(x(i), x(n + i));
  return z;
}

MonotoneCheck check_monotone(const std::vector<double>& values, double rel_slack) {
  MonotoneCheck out;
  for (std::size_t t = 1; t < values.size(); ++t) {
    const double drop = values[t - 1] - values[t];
    if (drop > out.worst_violation) {
      out.worst_violation = drop;
      out.worst_index = static_cast<int>(t);
    }
    if (drop > rel_slack * std::abs(values[t - 1])) out.passed = false;
  }
  return out;
}

MonotoneCheck check_monotone(const ConvergenceTrace& trace, double rel_slack) {
  return check_monotone(trace.f1_values(), rel_slack);
}

}  // namespace irsnet::oracle
