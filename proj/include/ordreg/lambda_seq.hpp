#pragma once

#include <cmath>
#include <string>

#include "ordreg/errors.hpp"
#include "ordreg/penalty.hpp"
#include "ordreg/types.hpp"

namespace ordreg {

namespace detail {

// Standard normal CDF through the complementary error function; full
// relative precision in both tails.
inline double normal_cdf_erfc(double x) { return 0.5 * std::erfc(-x * M_SQRT1_2); }

inline double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }

// Acklam's rational minimax approximation of the standard normal quantile,
// |relative error| < 1.15e-9 on (0, 1).
inline double inv_norm_cdf_rational(double p) {
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,  -2.759285104469687e+02,
                             1.383577518672690e+02,  -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                             6.680131188771972e+01, -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                             -2.549732539343734e+00, 4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                             3.754408661907416e+00};
  constexpr double low = 0.02425;
  constexpr double high = 1.0 - low;
  if (p < low) {
    const double q = std::sqrt(-2.0 * std::log(p));
    return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  if (p > high) {
    const double q = std::sqrt(-2.0 * std::log(1.0 - p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double q = p - 0.5;
  const double r = q * q;
  return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
         (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

}  // namespace detail

// Standard normal quantile. Rational starting value refined by one Halley
// step against the erfc-based CDF; the residual is formed through whichever
// tail keeps full relative precision.
inline double inv_norm_cdf(double alpha) {
  if (!(alpha > 0.0) || !(alpha < 1.0)) {
    throw OutOfDomain("inv_norm_cdf: alpha must lie in (0, 1), got " + std::to_string(alpha));
  }
  const double x0 = detail::inv_norm_cdf_rational(alpha);
  double residual;  // Phi(x0) - alpha
  if (alpha <= 0.5) {
    residual = 0.5 * std::erfc(-x0 * M_SQRT1_2) - alpha;
  } else {
    residual = (1.0 - alpha) - 0.5 * std::erfc(x0 * M_SQRT1_2);
  }
  const double pdf = detail::normal_pdf(x0);
  if (pdf <= 0.0) {
    return x0;
  }
  return x0 - 2.0 * residual / (2.0 * pdf + residual * x0);
}

// lambda_BH(k) = Phi^{-1}(1 - q k / (2p)).
inline double bh_lambda(Index k, Index p, double q) {
  if (k < 1 || p < 1) {
    throw OutOfDomain("bh_lambda: k and p must be >= 1");
  }
  if (!(q > 0.0) || q > 1.0) {
    throw OutOfDomain("bh_lambda: q must lie in (0, 1], got " + std::to_string(q));
  }
  const double tail = q * static_cast<double>(k) / (2.0 * static_cast<double>(p));
  if (tail >= 0.5) {
    throw OutOfDomain("bh_lambda: q*k/(2p) = " + std::to_string(tail) + " >= 1/2 yields a non-positive value");
  }
  return inv_norm_cdf(1.0 - tail);
}

enum class NMode {
  NEqualsP,   // correction denominator p - k - 1
  NEquals2P,  // correction denominator 2p - k - 1
  Explicit,   // correction denominator n - k
};

struct BhqConfig {
  double q = 0.4;
  Index p = 0;
  NMode n_mode = NMode::NEquals2P;
  Index n_explicit = 0;  // used only with NMode::Explicit
  Index length = 0;      // K; values generated for k = 1..K
  bool monotone_clip = true;

  void validate() const {
    if (!(q > 0.0) || q > 1.0) {
      throw OutOfDomain("BhqConfig: q must lie in (0, 1]");
    }
    if (p < 1 || length < 1 || length > p) {
      throw OutOfDomain("BhqConfig: need 1 <= length <= p");
    }
    if (n_mode == NMode::Explicit && n_explicit < 1) {
      throw OutOfDomain("BhqConfig: explicit n must be >= 1");
    }
  }
};

// Raw sequence pair: the BH values and the correction-scaled values, without
// any monotonicity handling.
struct BhqSequence {
  Vector<double> lambda_bh;
  Vector<double> lambda;
};

inline BhqSequence bhq_raw_sequence(const BhqConfig& cfg) {
  cfg.validate();
  BhqSequence seq;
  seq.lambda_bh.resize(cfg.length);
  seq.lambda.resize(cfg.length);
  for (Index k = 1; k <= cfg.length; ++k) {
    seq.lambda_bh[k - 1] = bh_lambda(k, cfg.p, cfg.q);
  }
  seq.lambda[0] = seq.lambda_bh[0];
  double cumulative = 0.0;  // sum of lambda_BH(j)^2 over j < k
  for (Index k = 2; k <= cfg.length; ++k) {
    cumulative += seq.lambda_bh[k - 2] * seq.lambda_bh[k - 2];
    double denom;
    switch (cfg.n_mode) {
      case NMode::NEqualsP:
        denom = static_cast<double>(cfg.p - k - 1);
        break;
      case NMode::NEquals2P:
        denom = static_cast<double>(2 * cfg.p - k - 1);
        break;
      default:
        denom = static_cast<double>(cfg.n_explicit - k);
        break;
    }
    if (denom <= 0.0) {
      throw DegenerateDenominator("bhq_raw_sequence: correction denominator " + std::to_string(denom) +
                                  " at k=" + std::to_string(k));
    }
    seq.lambda[k - 1] = seq.lambda_bh[k - 1] * std::sqrt(1.0 + cumulative / denom);
  }
  return seq;
}

inline bool is_non_increasing(const Vector<double>& v) {
  for (Index i = 0; i + 1 < v.size(); ++i) {
    if (v[i + 1] > v[i]) {
      return false;
    }
  }
  return true;
}

// Regularizing sequence for the solvers. With monotone_clip the raw values
// are replaced by their running minimum; otherwise a non-monotone raw
// sequence is rejected at construction.
template <typename Scalar = double>
RegularizationSequence<Scalar> sorted_lambda_sequence(const BhqConfig& cfg) {
  BhqSequence raw = bhq_raw_sequence(cfg);
  Vector<Scalar> values = raw.lambda.cast<Scalar>();
  if (cfg.monotone_clip) {
    for (Index i = 1; i < values.size(); ++i) {
      values[i] = std::min(values[i], values[i - 1]);
    }
  }
  return RegularizationSequence<Scalar>(std::move(values));
}

}  // namespace ordreg
