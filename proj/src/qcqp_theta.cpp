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

#include "irsnet/qcqp_theta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace irsnet {

double ThetaSubproblem::objective(const CVec& theta) const {
  return std::real(u.dot(theta)) - std::real(theta.dot(A * theta)) - offset;
}

ThetaSubproblem build_subproblem(const RVec& p, const RVec& mu, const CVec& beta,
                                 const EffectiveChannels& eff, double sigma_d2) {
  const int K = eff.K();
  const int N = eff.N;
  ThetaSubproblem sub;
  sub.N = N;
  sub.A = CMat::Zero(N, N);
  sub.u = CVec::Zero(N);
  for (int k = 0; k < K; ++k) {
    const double weight = std::norm(beta(k));
    if (weight > 0) {
      CMat block = eff.C[k];
      for (int i = 0; i < K; ++i) {
        if (p(i) > 0) block.noalias() += p(i) * eff.v[i][k] * eff.v[i][k].adjoint();
      }
      sub.A += weight * block;
    }
    sub.u += std::sqrt(2.0 * p(k) * (1.0 + mu(k))) * std::conj(beta(k)) * eff.v[k][k];
    sub.offset += weight * sigma_d2;
  }
  // Exact Hermitian symmetry; the outer products above are only so up to rounding.
  sub.A = 0.5 * (sub.A + sub.A.adjoint()).eval();
  return sub;
}

namespace {

// Factors A + diag(lambda) once per lambda and keeps the workspace around, so
// the ellipsoid loop does not allocate.
class DualEvaluator {
public:
  explicit DualEvaluator(const ThetaSubproblem& sub)
      : sub_(sub), system_(sub.N, sub.N), llt_(sub.N), theta_(sub.N) {}

  const CVec& solve(const RVec& lambda) {
    const int N = sub_.N;
    lambda_sum_ = lambda.sum();
    shift_ = 0.0;
    if (sub_.u.squaredNorm() == 0.0) {
      theta_.setZero();
      return theta_;
    }
    system_ = sub_.A;
    system_.diagonal() += lambda.cast<cplx>();
    llt_.compute(system_);
    if (llt_.info() != Eigen::Success || llt_.rcond() < 1e-12) {
      double scale = std::real(sub_.A.trace()) / N + lambda.mean();
      if (!(scale > 0)) scale = std::max(sub_.u.norm(), 1.0);
      shift_ = 1e-12 * scale;
      system_.diagonal().array() += shift_;
      llt_.compute(system_);
      if (llt_.info() != Eigen::Success) {
        // Indefinite only through a negative lambda; LDLT copes.
        theta_ = 0.5 * system_.ldlt().solve(sub_.u);
        factored_ = false;
        return theta_;
      }
    }
    factored_ = true;
    theta_ = 0.5 * llt_.solve(sub_.u);
    return theta_;
  }

  // Lagrangian at the theta of the last solve(). Uses
  // theta^H (A + D + shift) theta = u^H theta / 2.
  double value() const {
    return 0.5 * std::real(sub_.u.dot(theta_)) + shift_ * theta_.squaredNorm() + lambda_sum_ -
           sub_.offset;
  }

  // Inverse of the last factored system; valid when factored().
  CMat inverse() const { return llt_.solve(CMat::Identity(sub_.N, sub_.N)); }
  bool factored() const { return factored_; }
  const CVec& theta() const { return theta_; }

private:
  const ThetaSubproblem& sub_;
  CMat system_;
  Eigen::LLT<CMat> llt_;
  CVec theta_;
  double shift_ = 0.0;
  double lambda_sum_ = 0.0;
  bool factored_ = false;
};

}  // namespace

CVec theta_of_lambda(const RVec& lambda, const ThetaSubproblem& sub) {
  DualEvaluator ev(sub);
  return ev.solve(lambda);
}

double lagrangian(const CVec& theta, const RVec& lambda, const ThetaSubproblem& sub) {
  double penalty = 0.0;
  for (int n = 0; n < sub.N; ++n) penalty += lambda(n) * (std::norm(theta(n)) - 1.0);
  return sub.objective(theta) - penalty;
}

double dual_value(const RVec& lambda, const ThetaSubproblem& sub) {
  return lagrangian(theta_of_lambda(lambda, sub), lambda, sub);
}

double kkt_residual(const CVec& theta, const RVec& lambda,
                    [[maybe_unused]] const ThetaSubproblem& sub) {
  double worst = 0.0;
  for (Eigen::Index n = 0; n < theta.size(); ++n) {
    const double slack = std::norm(theta(n)) - 1.0;
    worst = std::max({worst, std::abs(lambda(n) * slack), slack, -lambda(n)});
  }
  return worst;
}

int default_ellipsoid_cap(int N) {
  const double n = std::max(N, 1);
  return static_cast<int>(std::ceil(4.0 * n * n * std::log(2.0 * std::sqrt(n) * 1e8)));
}

namespace {

CVec clip_to_unit_disk(CVec theta) {
  for (Eigen::Index n = 0; n < theta.size(); ++n) {
    const double mag2 = std::norm(theta(n));
    if (mag2 > 1.0) theta(n) /= std::sqrt(mag2);
  }
  return theta;
}

DualSolveReport finish(const ThetaSubproblem& sub, const RVec& lambda) {
  DualSolveReport report;
  report.lambda = lambda;
  const CVec raw = theta_of_lambda(lambda, sub);
  report.dual_value = lagrangian(raw, lambda, sub);
  report.theta = clip_to_unit_disk(raw);
  report.primal_value = sub.objective(report.theta);
  report.kkt_residual = kkt_residual(report.theta, lambda, sub);
  return report;
}

// Projected Newton on min_{lambda >= 0} d(lambda). The gradient of d is
// s = 1 - |theta|^2 and its Hessian is H_mn = 2 Re(conj(theta_m) G_mn theta_n)
// with G = (A + diag(lambda))^{-1}. Returns true once kkt_residual <= tol.
bool newton_polish(const ThetaSubproblem& sub, DualEvaluator& ev, RVec& lambda, double tol,
                   int& steps) {
  const int N = sub.N;
  constexpr int kMaxSteps = 40;
  constexpr int kStall = 5;  // give up after this many steps without a new best residual
  double best = std::numeric_limits<double>::infinity();
  int since_best = 0;
  for (int it = 0; it < kMaxSteps; ++it) {
    const CVec theta = ev.solve(lambda);
    const double kkt = kkt_residual(theta, lambda, sub);
    if (kkt <= tol) return true;
    if (kkt < best) {
      best = kkt;
      since_best = 0;
    } else if (++since_best >= kStall) {
      return false;
    }
    if (!ev.factored()) return false;
    const double value = ev.value();
    const RVec grad = RVec::Ones(N) - theta.cwiseAbs2();

    // epsilon-active set: coordinates pinned at the bound and pushing outward
    const double eps = std::min(1e-3, (lambda - (lambda - grad).cwiseMax(0.0)).norm());
    std::vector<int> free;
    for (int n = 0; n < N; ++n)
      if (!(lambda(n) <= eps && grad(n) > 0)) free.push_back(n);

    RVec direction = RVec::Zero(N);
    for (int n = 0; n < N; ++n)
      if (lambda(n) <= eps && grad(n) > 0) direction(n) = -grad(n);
    if (!free.empty()) {
      const CMat G = ev.inverse();
      const int F = static_cast<int>(free.size());
      RMat H(F, F);
      RVec g(F);
      for (int a = 0; a < F; ++a) {
        g(a) = grad(free[a]);
        for (int b = 0; b < F; ++b)
          H(a, b) = 2.0 * std::real(std::conj(theta(free[a])) * G(free[a], free[b]) * theta(free[b]));
      }
      H.diagonal().array() += 1e-14 * std::max(H.trace() / F, 1e-300);
      const Eigen::LDLT<RMat> ldlt(H);
      if (ldlt.info() != Eigen::Success) return false;
      const RVec step = ldlt.solve(-g);
      if (!step.allFinite()) return false;
      for (int a = 0; a < F; ++a) direction(free[a]) = step(a);
    }

    double t = 1.0;
    bool accepted = false;
    for (int ls = 0; ls < 30; ++ls, t *= 0.5) {
      const RVec trial = (lambda + t * direction).cwiseMax(0.0);
      ev.solve(trial);
      if (ev.value() <= value + 1e-4 * grad.dot(trial - lambda)) {
        lambda = trial;
        accepted = true;
        ++steps;
        break;
      }
    }
    if (!accepted) return false;
  }
  return kkt_residual(ev.solve(lambda), lambda, sub) <= tol;
}

// Accelerated projected gradient on max Re(u^H theta) - theta^H A theta over
// |theta_n| <= 1, started at report.theta. Every so often lambda is rebuilt
// from stationarity, lambda_n = max(0, Re(conj(theta_n) (u/2 - A theta)_n)),
// and the pair is scored by its duality gap. Returns true if it certifies.
bool recover_primal(const ThetaSubproblem& sub, const DualOptions& options,
                    DualSolveReport& report) {
  const int N = sub.N;
  const double top = Eigen::SelfAdjointEigenSolver<CMat>(sub.A, Eigen::EigenvaluesOnly)
                         .eigenvalues()
                         .maxCoeff();
  if (!(top > 0)) return false;
  const double step = 1.0 / (2.0 * top);

  DualEvaluator ev(sub);
  // A * iterate is carried along so that each step costs one product with A.
  CVec x = report.theta;
  CVec ax = sub.A * x;
  CVec prev = x;
  CVec a_prev = ax;
  CVec y = x;
  CVec ay = ax;
  auto objective = [&](const CVec& z, const CVec& az) {
    return std::real(sub.u.dot(z)) - std::real(z.dot(az)) - sub.offset;
  };
  double t = 1.0;
  DualSolveReport best = report;
  double best_gap = std::numeric_limits<double>::infinity();
  RVec lambda(N);
  double value = objective(x, ax);
  int iterations = 0;
  for (int it = 1; it <= options.recovery_max_iter; ++it) {
    iterations = it;
    prev.swap(x);
    a_prev.swap(ax);
    x = y + step * (sub.u - 2.0 * ay);
    for (Eigen::Index n = 0; n < N; ++n) {
      const double mag2 = std::norm(x(n));
      if (mag2 > 1.0) x(n) /= std::sqrt(mag2);
    }
    ax.noalias() = sub.A * x;
    const double next_value = objective(x, ax);
    if (next_value < value) {
      // momentum overshot: restart from the last iterate
      x = prev;
      ax = a_prev;
      y = prev;
      ay = a_prev;
      t = 1.0;
      continue;
    }
    value = next_value;
    const double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * t * t));
    const double momentum = (t - 1.0) / t_next;
    y = x + momentum * (x - prev);
    ay = ax + momentum * (ax - a_prev);
    t = t_next;
    if (it % 50 != 0 && it != options.recovery_max_iter) continue;

    for (int n = 0; n < N; ++n)
      lambda(n) = std::max(0.0, std::real(std::conj(x(n)) * (0.5 * sub.u(n) - ax(n))));
    ev.solve(lambda);
    const double dual = ev.value();
    const double primal = sub.objective(x);
    const double gap = (dual - primal) / std::max(std::abs(dual), 1e-300);
    if (gap < best_gap) {
      best_gap = gap;
      best.lambda = lambda;
      best.theta = x;
      best.dual_value = dual;
      best.primal_value = primal;
      best.kkt_residual = kkt_residual(x, lambda, sub);
    }
    if (best_gap <= options.tol_gap && best.kkt_residual <= options.tol_kkt) break;
  }
  report.recovery_steps += iterations;
  const bool certified = best_gap <= options.tol_gap && best.kkt_residual <= options.tol_kkt;
  if (certified || best.dual_value - best.primal_value < report.dual_value - report.primal_value) {
    report.lambda = best.lambda;
    report.theta = best.theta;
    report.dual_value = best.dual_value;
    report.primal_value = best.primal_value;
    report.kkt_residual = best.kkt_residual;
    report.recovered = true;
  }
  return certified;
}

// Ellipsoid method on the subproblem scaled so that ||u|| = 1.
DualSolveReport solve_normalized(const ThetaSubproblem& sub, const DualOptions& options,
                                 const WarmStart* warm) {
  const int N = sub.N;
  const RVec zero = RVec::Zero(N);
  DualEvaluator ev(sub);

  if (N == 0 || ev.solve(zero).cwiseAbs2().maxCoeff() <= 1.0) {
    DualSolveReport report = finish(sub, zero);
    report.fast_path_taken = true;
    report.converged = true;
    return report;
  }

  if (warm && warm->lambda.size() == N && warm->lambda.maxCoeff() > 0) {
    const RVec start = warm->lambda.cwiseMax(0.0);
    int steps = 0;
    auto try_newton = [&](DualSolveReport& report) {
      RVec lambda = start;
      if (!options.polish || !newton_polish(sub, ev, lambda, options.tol_kkt, steps)) return false;
      report = finish(sub, lambda);
      report.polished = true;
      return true;
    };
    auto try_primal = [&](DualSolveReport& report) {
      if (!options.recover_primal) return false;
      report = finish(sub, start);
      if (warm->theta.size() == N && sub.objective(warm->theta) > report.primal_value) {
        report.theta = warm->theta;
        report.primal_value = sub.objective(warm->theta);
      }
      return recover_primal(sub, options, report);
    };
    DualSolveReport report;
    const bool done = warm->primal_first ? try_primal(report) || try_newton(report)
                                         : try_newton(report) || try_primal(report);
    if (done) {
      report.newton_steps = steps;
      report.warm_started = true;
      report.converged = true;
      return report;
    }
  }

  const int cap = options.max_iter > 0 ? options.max_iter : default_ellipsoid_cap(N);
  const double rho = sub.u.norm();
  const double radius = 2.0 * rho * std::sqrt(static_cast<double>(N));
  const double n = N;

  RVec center = RVec::Constant(N, rho);
  // shape = factor * factor^T; updating the factor keeps the shape positive definite
  RMat factor = RMat::Identity(N, N) * radius;
  // log of the geometric-mean semi-axis, tracked incrementally
  double log_axis = std::log(radius);
  const double log_floor = std::log(radius * options.tol_kkt * options.tol_kkt);
  const double axis_step =
      N > 1 ? 0.5 * (std::log(n * n / (n * n - 1.0)) + std::log((n - 1.0) / (n + 1.0)) / n)
            : std::log(0.5);

  RVec best_lambda = zero;
  double best_value = std::numeric_limits<double>::infinity();
  bool converged = false;
  bool polished = false;
  int newton_steps = 0;
  double polish_threshold = options.polish_start;
  int iter = 0;

  RVec cut(N);
  RVec shaped(N);
  RVec step(N);
  for (; iter < cap; ++iter) {
    Eigen::Index most_negative = 0;
    const double min_coord = center.minCoeff(&most_negative);
    if (min_coord < 0) {
      cut.setZero();
      cut(most_negative) = -1.0;
    } else {
      const CVec& theta = ev.solve(center);
      const double value = ev.value();
      if (value < best_value) {
        best_value = value;
        best_lambda = center;
      }
      const double kkt = kkt_residual(theta, center, sub);
      if (kkt <= options.tol_kkt) {
        best_lambda = center;
        converged = true;
        break;
      }
      cut = RVec::Ones(N) - theta.cwiseAbs2();
      if (options.polish && kkt <= polish_threshold) {
        RVec candidate = center;
        if (newton_polish(sub, ev, candidate, options.tol_kkt, newton_steps)) {
          best_lambda = candidate;
          converged = true;
          polished = true;
          break;
        }
        polish_threshold = 0.1 * kkt;
        if (options.recover_primal) {
          // Newton stalls mostly when A is singular; then the primal route is the cheap one.
          DualSolveReport report = finish(sub, center);
          if (recover_primal(sub, options, report)) {
            report.iterations = iter + 1;
            report.newton_steps = newton_steps;
            report.converged = true;
            return report;
          }
        }
      }
    }

    shaped.noalias() = factor.transpose() * cut;
    const double norm = shaped.norm();
    if (!(norm > 0)) break;
    shaped /= norm;
    step.noalias() = factor * shaped;
    if (N == 1) {
      center -= 0.5 * step;
      factor *= 0.5;
    } else {
      center -= step / (n + 1.0);
      factor.noalias() -= (1.0 - std::sqrt((n - 1.0) / (n + 1.0))) * step * shaped.transpose();
      factor *= n / std::sqrt(n * n - 1.0);
    }
    log_axis += axis_step;
    if (log_axis < log_floor) break;
  }

  DualSolveReport report = finish(sub, best_lambda);
  report.iterations = iter;
  report.newton_steps = newton_steps;
  report.polished = polished;
  report.converged = converged || report.kkt_residual <= options.tol_kkt;
  if (!report.converged && options.recover_primal)
    report.converged = recover_primal(sub, options, report);
  return report;
}

}  // namespace

namespace {

DualSolveReport solve_scaled(const ThetaSubproblem& sub, const DualOptions& options,
                             const WarmStart* warm) {
  const double rho = sub.u.norm();
  if (!(rho > 0) || !std::isfinite(rho)) return solve_normalized(sub, options, warm);

  // theta is invariant under a common scaling of (A, u, offset, lambda); the
  // KKT tolerance is applied to the scale-free problem.
  ThetaSubproblem scaled = sub;
  scaled.A /= rho;
  scaled.u /= rho;
  scaled.offset /= rho;
  WarmStart warm_scaled;
  if (warm) warm_scaled = {warm->lambda / rho, warm->theta, warm->primal_first};
  DualSolveReport report = solve_normalized(scaled, options, warm ? &warm_scaled : nullptr);
  report.lambda *= rho;
  report.dual_value *= rho;
  report.primal_value *= rho;
  return report;
}

}  // namespace

DualSolveReport solve_dual(const ThetaSubproblem& sub, const DualOptions& options) {
  return solve_scaled(sub, options, nullptr);
}

DualSolveReport solve_dual(const ThetaSubproblem& sub, const DualOptions& options,
                           const WarmStart& warm) {
  return solve_scaled(sub, options, &warm);
}

}  // namespace irsnet
