#pragma once

#include <Eigen/Cholesky>

#include "ordreg/errors.hpp"
#include "ordreg/types.hpp"

namespace ordreg {

// Lower-triangular Cholesky factor of a symmetric positive-definite matrix.
// Symmetry is required within 1e-10 relative; failure of the factorization
// (a non-positive pivot) signals a non-PD input.
template <typename Scalar>
Matrix<Scalar> cholesky(const Matrix<Scalar>& m) {
  if (m.rows() != m.cols()) {
    throw DimensionMismatch("cholesky: matrix must be square, got " + std::to_string(m.rows()) + "x" +
                            std::to_string(m.cols()));
  }
  const Scalar scale = m.template lpNorm<Eigen::Infinity>();
  if ((m - m.transpose()).template lpNorm<Eigen::Infinity>() > Scalar(1e-10) * std::max(scale, Scalar(1))) {
    throw OutOfDomain("cholesky: matrix is not symmetric within 1e-10 relative");
  }
  Eigen::LLT<Matrix<Scalar>> llt(m);
  if (llt.info() != Eigen::Success) {
    throw NotPositiveDefinite("cholesky: matrix is not positive definite");
  }
  return llt.matrixL();
}

enum class FactorMode {
  Direct,          // factor (A^T A + rho I), p x p; used when p <= n
  InversionLemma,  // factor (A A^T + rho I), n x n; used when p > n
};

// Cached factorization of (A^T A + rho I) for repeated right-hand sides.
// In the p > n regime the n x n Gram matrix (A A^T + rho I) is factored
// instead and solves go through the matrix-inversion lemma:
//   (A^T A + rho I)^{-1} r = (r - A^T (A A^T + rho I)^{-1} A r) / rho.
// Immutable after construction; safe for concurrent solves.
template <typename Scalar>
class RidgeSystemFactor {
 public:
  RidgeSystemFactor(const Matrix<Scalar>& a, const Vector<Scalar>& b, Scalar rho)
      : rho_(rho), n_(a.rows()), p_(a.cols()) {
    if (rho <= Scalar(0) || !std::isfinite(static_cast<double>(rho))) {
      throw OutOfDomain("build_ridge_factor: rho must be positive and finite");
    }
    if (b.size() != n_) {
      throw DimensionMismatch("build_ridge_factor: len(b)=" + std::to_string(b.size()) +
                              " does not match rows(A)=" + std::to_string(n_));
    }
    if (!a.allFinite() || !b.allFinite()) {
      throw NonFinite("build_ridge_factor: inputs contain non-finite entries");
    }
    atb_ = a.transpose() * b;
    mode_ = (p_ <= n_) ? FactorMode::Direct : FactorMode::InversionLemma;
    if (mode_ == FactorMode::Direct) {
      Matrix<Scalar> gram = a.transpose() * a;
      gram.diagonal().array() += rho;
      llt_.compute(gram);
    } else {
      Matrix<Scalar> gram = a * a.transpose();
      gram.diagonal().array() += rho;
      llt_.compute(gram);
      a_ = a;  // needed by the lemma solve
    }
    if (llt_.info() != Eigen::Success) {
      throw NotPositiveDefinite("build_ridge_factor: (gram + rho I) factorization failed");
    }
  }

  // Solves (A^T A + rho I) w = rhs.
  Vector<Scalar> solve(const Vector<Scalar>& rhs) const {
    if (rhs.size() != p_) {
      throw DimensionMismatch("ridge_solve: len(rhs)=" + std::to_string(rhs.size()) +
                              " does not match cols(A)=" + std::to_string(p_));
    }
    if (mode_ == FactorMode::Direct) {
      return llt_.solve(rhs);
    }
    return (rhs - a_.transpose() * llt_.solve(a_ * rhs)) / rho_;
  }

  Scalar rho() const { return rho_; }
  FactorMode mode() const { return mode_; }
  Index rows() const { return n_; }
  Index cols() const { return p_; }
  const Vector<Scalar>& cached_atb() const { return atb_; }
  Matrix<Scalar> factor_lower() const { return llt_.matrixL(); }

 private:
  Scalar rho_;
  Index n_;
  Index p_;
  FactorMode mode_;
  Eigen::LLT<Matrix<Scalar>> llt_;
  Vector<Scalar> atb_;
  Matrix<Scalar> a_;  // retained only in inversion-lemma mode
};

template <typename Scalar>
RidgeSystemFactor<Scalar> build_ridge_factor(const Matrix<Scalar>& a, const Vector<Scalar>& b, Scalar rho) {
  return RidgeSystemFactor<Scalar>(a, b, rho);
}

template <typename Scalar>
Vector<Scalar> ridge_solve(const RidgeSystemFactor<Scalar>& factor, const Vector<Scalar>& rhs) {
  return factor.solve(rhs);
}

}  // namespace ordreg
