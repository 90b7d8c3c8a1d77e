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

#ifndef IRSNET_TYPES_HPP
#define IRSNET_TYPES_HPP

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace irsnet {

using cplx = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

// How the IRS-reflected thermal noise enters the SINR denominator.
//   expectation: theta^H C_k theta with C_k = sigma_r2 * diag(|g_k|^2)
//   realization: |theta^H z_k|^2 for one drawn noise vector z_k
enum class NoiseMode { expectation, realization };

std::string to_string(NoiseMode mode);
NoiseMode noise_mode_from_string(const std::string& name);

// Raised when a caller-supplied value violates a documented precondition.
// `field()` names the offending parameter so config loaders can report it.
class ValidationError : public std::invalid_argument {
public:
  ValidationError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)), reason_(what) {}
  const std::string& field() const noexcept { return field_; }
  // what() without the field prefix
  const std::string& reason() const noexcept { return reason_; }

private:
  std::string field_;
  std::string reason_;
};

}  // namespace irsnet

#endif  // IRSNET_TYPES_HPP
