#pragma once

#include <chrono>
#include <cmath>
#include <vector>

#include "ordreg/errors.hpp"
#include "ordreg/linalg.hpp"
#include "ordreg/penalty.hpp"
#include "ordreg/types.hpp"

namespace ordreg {

enum class PenaltyKind { OrderedL2, OrderedElasticNet, Lasso };

template <typename Scalar>
struct SolverConfig {
  Scalar rho = Scalar(1.0);
  Scalar alpha = Scalar(1.0);  // over-relaxation factor
  Scalar eps_abs = Scalar(1e-4);
  Scalar eps_rel = Scalar(1e-2);
  Index max_iter = 10000;
  Index trace_every = 1;  // keep every k-th trace record (first and last always kept)
  PenaltyKind penalty = PenaltyKind::OrderedL2;
  Scalar mix_alpha = Scalar(0.1);  // elastic-net mix

  void validate() const {
    if (!(rho > Scalar(0)) || !std::isfinite(static_cast<double>(rho))) {
      throw OutOfDomain("SolverConfig: rho must be positive");
    }
    if (alpha < Scalar(1.0) || alpha > Scalar(1.8)) {
      throw OutOfDomain("SolverConfig: alpha must lie in [1.0, 1.8]");
    }
    if (!(eps_abs > Scalar(0)) || !(eps_rel > Scalar(0))) {
      throw OutOfDomain("SolverConfig: tolerances must be positive");
    }
    if (max_iter < 1 || trace_every < 1) {
      throw OutOfDomain("SolverConfig: max_iter and trace_every must be >= 1");
    }
    if (penalty == PenaltyKind::OrderedElasticNet && !(mix_alpha > Scalar(0) && mix_alpha < Scalar(1))) {
      throw OutOfDomain("SolverConfig: elastic-net mix must lie in (0, 1)");
    }
  }
};

// Iterate triple of the splitting scheme; u is the scaled dual variable.
template <typename Scalar>
struct AdmmState {
  Vector<Scalar> x;
  Vector<Scalar> z;
  Vector<Scalar> u;
  Index iter = 0;
};

template <typename Scalar>
struct TraceRecord {
  Index iter;
  Scalar r_norm;     // ||x - z||
  Scalar s_norm;     // ||rho (z_prev - z)||
  Scalar eps_pri;    // sqrt(p) eps_abs + eps_rel max(||x||, ||z||)
  Scalar eps_dual;   // sqrt(n) eps_abs + eps_rel ||rho u||
  Scalar objective;  // full objective evaluated at the z iterate
};

template <typename Scalar>
struct FitResult {
  Vector<Scalar> coefficients;  // final z
  bool converged = false;
  Index iterations = 0;
  std::vector<TraceRecord<Scalar>> trace;
  Index nonzero_count = 0;
  double wall_time_s = 0.0;
};

// Entries below 1e-6 * max(1, ||z||_inf) count as zero.
template <typename Scalar>
Index count_nonzero(const Vector<Scalar>& z) {
  const Scalar tol = Scalar(1e-6) * std::max(Scalar(1), z.template lpNorm<Eigen::Infinity>());
  Index count = 0;
  for (Index i = 0; i < z.size(); ++i) {
    if (std::abs(z[i]) > tol) {
      ++count;
    }
  }
  return count;
}

template <typename Scalar>
Scalar objective_ordered_ridge(const Matrix<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& x,
                               const RegularizationSequence<Scalar>& lam) {
  if (a.rows() != b.size() || a.cols() != x.size()) {
    throw DimensionMismatch("objective_ordered_ridge: inconsistent dimensions");
  }
  return Scalar(0.5) * (a * x - b).squaredNorm() + Scalar(0.5) * ordered_l2_penalty(x, lam);
}

template <typename Scalar>
Scalar objective_ordered_elastic_net(const Matrix<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& x,
                                     const Vector<Scalar>& lam1_sorted, const Vector<Scalar>& lam2_sorted) {
  if (a.rows() != b.size() || a.cols() != x.size()) {
    throw DimensionMismatch("objective_ordered_elastic_net: inconsistent dimensions");
  }
  const auto view = order_statistics(x);
  Scalar penalty(0);
  for (Index i = 0; i < x.size(); ++i) {
    const Scalar m = view.magnitudes[i];
    penalty += lam1_sorted[i] * m + Scalar(0.5) * lam2_sorted[i] * m * m;
  }
  return Scalar(0.5) * (a * x - b).squaredNorm() + penalty;
}

template <typename Scalar>
Scalar objective_lasso(const Matrix<Scalar>& a, const Vector<Scalar>& b, const Vector<Scalar>& x,
                       Scalar lambda) {
  if (a.rows() != b.size() || a.cols() != x.size()) {
    throw DimensionMismatch("objective_lasso: inconsistent dimensions");
  }
  return Scalar(0.5) * (a * x - b).squaredNorm() + lambda * x.template lpNorm<1>();
}

// Ridge subproblem step: solves (A^T A + rho I) x = A^T b + rho (z - u)
// through the cached factorization.
template <typename Scalar>
Vector<Scalar> x_update(const RidgeSystemFactor<Scalar>& factor, const Vector<Scalar>& z,
                        const Vector<Scalar>& u) {
  if (z.size() != factor.cols() || u.size() != factor.cols()) {
    throw DimensionMismatch("x_update: iterate length does not match cols(A)");
  }
  return factor.solve(factor.cached_atb() + factor.rho() * (z - u));
}

// Over-relaxed combination alpha x_new + (1 - alpha) z_old.
template <typename Scalar>
Vector<Scalar> relax(const Vector<Scalar>& x_new, const Vector<Scalar>& z_old, Scalar alpha) {
  if (x_new.size() != z_old.size()) {
    throw DimensionMismatch("relax: length mismatch");
  }
  return alpha * x_new + (Scalar(1) - alpha) * z_old;
}

template <typename Scalar>
Scalar compute_lambda_max(const Matrix<Scalar>& a, const Vector<Scalar>& b) {
  if (a.rows() != b.size()) {
    throw DimensionMismatch("compute_lambda_max: rows(A) != len(b)");
  }
  return (a.transpose() * b).template lpNorm<Eigen::Infinity>();
}

namespace detail {

// Shared over-relaxed scaled-form loop. The penalty enters only through the
// z-update and the objective. All iterates start at zero; reductions run in
// a fixed sequential order so identical inputs give identical traces.
template <typename Scalar, typename ZUpdate, typename Objective>
FitResult<Scalar> admm_fit(const Matrix<Scalar>& a, const Vector<Scalar>& b, const SolverConfig<Scalar>& cfg,
                           ZUpdate&& update_z, Objective&& objective) {
  cfg.validate();
  if (a.rows() != b.size()) {
    throw DimensionMismatch("admm_fit: rows(A)=" + std::to_string(a.rows()) +
                            " != len(b)=" + std::to_string(b.size()));
  }
  if (!a.allFinite() || !b.allFinite()) {
    throw NonFinite("admm_fit: inputs contain non-finite entries");
  }
  const auto start = std::chrono::steady_clock::now();
  const Index n = a.rows();
  const Index p = a.cols();
  const Scalar sqrt_p = std::sqrt(static_cast<Scalar>(p));
  const Scalar sqrt_n = std::sqrt(static_cast<Scalar>(n));

  RidgeSystemFactor<Scalar> factor(a, b, cfg.rho);
  AdmmState<Scalar> state{Vector<Scalar>::Zero(p), Vector<Scalar>::Zero(p), Vector<Scalar>::Zero(p), 0};
  Vector<Scalar> z_prev(p);
  Vector<Scalar> x_hat(p);

  FitResult<Scalar> result;
  while (state.iter < cfg.max_iter) {
    ++state.iter;
    state.x = x_update(factor, state.z, state.u);
    x_hat = relax(state.x, state.z, cfg.alpha);
    z_prev = state.z;
    state.z = update_z(x_hat + state.u);
    // Algorithm line: u + alpha (x - z_new) + (1 - alpha)(z_old - z_new);
    // identical to u + (x_hat - z_new).
    state.u += cfg.alpha * (state.x - state.z) + (Scalar(1) - cfg.alpha) * (z_prev - state.z);

    if (!state.x.allFinite() || !state.z.allFinite() || !state.u.allFinite()) {
      throw NonFinite("admm_fit: iterate left the finite range at iteration " + std::to_string(state.iter));
    }

    const Scalar r_norm = (state.x - state.z).norm();
    const Scalar s_norm = (cfg.rho * (z_prev - state.z)).norm();
    const Scalar eps_pri = sqrt_p * cfg.eps_abs + cfg.eps_rel * std::max(state.x.norm(), state.z.norm());
    const Scalar eps_dual = sqrt_n * cfg.eps_abs + cfg.eps_rel * (cfg.rho * state.u).norm();
    const bool converged = r_norm <= eps_pri && s_norm <= eps_dual;
    const bool record = (state.iter - 1) % cfg.trace_every == 0 || converged || state.iter == cfg.max_iter;
    if (record) {
      result.trace.push_back(
          {state.iter, r_norm, s_norm, eps_pri, eps_dual, objective(state.z)});
    }
    if (converged) {
      result.converged = true;
      break;
    }
  }
  result.iterations = state.iter;
  result.coefficients = state.z;
  result.nonzero_count = count_nonzero(state.z);
  result.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

}  // namespace detail

// Ordered ridge regression: least squares plus half the ordered-l2 penalty.
template <typename Scalar>
FitResult<Scalar> fit_ordered_ridge(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                                    const RegularizationSequence<Scalar>& lam, const SolverConfig<Scalar>& cfg) {
  if (lam.size() != a.cols()) {
    throw DimensionMismatch("fit_ordered_ridge: sequence length " + std::to_string(lam.size()) +
                            " != p=" + std::to_string(a.cols()));
  }
  return detail::admm_fit(
      a, b, cfg, [&](const Vector<Scalar>& v) { return shrink_ordered_l2(v, lam, cfg.rho); },
      [&](const Vector<Scalar>& z) { return objective_ordered_ridge(a, b, z, lam); });
}

// Ordered elastic net: the sequence splits into lam1 = mix * lam (l1 part)
// and lam2 = (1 - mix) * lam (l2 part), elementwise.
template <typename Scalar>
FitResult<Scalar> fit_ordered_elastic_net(const Matrix<Scalar>& a, const Vector<Scalar>& b,
                                          const RegularizationSequence<Scalar>& lam_bh, Scalar mix_alpha,
                                          const SolverConfig<Scalar>& cfg) {
  if (lam_bh.size() != a.cols()) {
    throw DimensionMismatch("fit_ordered_elastic_net: sequence length " + std::to_string(lam_bh.size()) +
                            " != p=" + std::to_string(a.cols()));
  }
  if (!(mix_alpha > Scalar(0) && mix_alpha < Scalar(1))) {
    throw OutOfDomain("fit_ordered_elastic_net: mix must lie in (0, 1)");
  }
  const Vector<Scalar> lam1 = mix_alpha * lam_bh.values();
  const Vector<Scalar> lam2 = (Scalar(1) - mix_alpha) * lam_bh.values();
  return detail::admm_fit(
      a, b, cfg,
      [&](const Vector<Scalar>& v) { return detail::shrink_elastic_net_sorted(v, lam1, lam2, cfg.rho); },
      [&](const Vector<Scalar>& z) { return objective_ordered_elastic_net(a, b, z, lam1, lam2); });
}

// Plain lasso baseline with a scalar penalty; z-update is soft thresholding.
template <typename Scalar>
FitResult<Scalar> fit_lasso(const Matrix<Scalar>& a, const Vector<Scalar>& b, Scalar lambda,
                            const SolverConfig<Scalar>& cfg) {
  if (!(lambda > Scalar(0)) || !std::isfinite(static_cast<double>(lambda))) {
    throw OutOfDomain("fit_lasso: lambda must be positive");
  }
  const Scalar kappa = lambda / cfg.rho;
  return detail::admm_fit(
      a, b, cfg, [&](const Vector<Scalar>& v) { return soft_threshold(v, kappa); },
      [&](const Vector<Scalar>& z) { return objective_lasso(a, b, z, lambda); });
}

}  // namespace ordreg
