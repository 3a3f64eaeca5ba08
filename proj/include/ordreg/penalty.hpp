#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "ordreg/errors.hpp"
#include "ordreg/types.hpp"

namespace ordreg {

// Non-increasing vector of non-negative penalty weights with a strictly
// positive head. Immutable once constructed.
template <typename Scalar>
class RegularizationSequence {
 public:
  explicit RegularizationSequence(Vector<Scalar> values) : values_(std::move(values)) {
    if (values_.size() < 1) {
      throw OutOfDomain("RegularizationSequence: needs at least one value");
    }
    if (!values_.allFinite()) {
      throw NonFinite("RegularizationSequence: non-finite entry");
    }
    if (values_[0] <= Scalar(0)) {
      throw OutOfDomain("RegularizationSequence: leading value must be strictly positive");
    }
    for (Index i = 0; i + 1 < values_.size(); ++i) {
      if (values_[i + 1] > values_[i]) {
        throw NonMonotone("RegularizationSequence: values increase at position " + std::to_string(i + 1));
      }
    }
    if (values_[values_.size() - 1] < Scalar(0)) {
      throw OutOfDomain("RegularizationSequence: negative value");
    }
  }

  const Vector<Scalar>& values() const { return values_; }
  Index size() const { return values_.size(); }
  Scalar operator[](Index i) const { return values_[i]; }

 private:
  Vector<Scalar> values_;
};

// Magnitudes of a vector sorted non-increasing, with the rank -> original
// index permutation. Ties break by ascending original index.
template <typename Scalar>
struct OrderStatisticView {
  std::vector<Index> permutation;  // permutation[rank] = original index
  Vector<Scalar> magnitudes;       // |x| sorted non-increasing
};

template <typename Scalar>
OrderStatisticView<Scalar> order_statistics(const Vector<Scalar>& x) {
  OrderStatisticView<Scalar> view;
  view.permutation.resize(static_cast<std::size_t>(x.size()));
  std::iota(view.permutation.begin(), view.permutation.end(), Index(0));
  std::stable_sort(view.permutation.begin(), view.permutation.end(),
                   [&x](Index a, Index b) { return std::abs(x[a]) > std::abs(x[b]); });
  view.magnitudes.resize(x.size());
  for (Index rank = 0; rank < x.size(); ++rank) {
    view.magnitudes[rank] = std::abs(x[view.permutation[static_cast<std::size_t>(rank)]]);
  }
  return view;
}

namespace detail {

inline void check_same_length(Index vec_len, Index lam_len, const char* where) {
  if (vec_len != lam_len) {
    throw DimensionMismatch(std::string(where) + ": len(x)=" + std::to_string(vec_len) +
                            " != len(lambda)=" + std::to_string(lam_len));
  }
}

template <typename Scalar>
void check_rho(Scalar rho, const char* where) {
  if (!(rho > Scalar(0)) || !std::isfinite(static_cast<double>(rho))) {
    throw OutOfDomain(std::string(where) + ": rho must be positive and finite");
  }
}

// Elastic-net shrinkage against already rank-aligned weight vectors; accepts
// all-zero weights (the lasso and pure-ridge limits).
template <typename Scalar>
Vector<Scalar> shrink_elastic_net_sorted(const Vector<Scalar>& v, const Vector<Scalar>& lam1_sorted,
                                         const Vector<Scalar>& lam2_sorted, Scalar rho) {
  check_same_length(v.size(), lam1_sorted.size(), "shrink_ordered_elastic_net");
  check_same_length(v.size(), lam2_sorted.size(), "shrink_ordered_elastic_net");
  check_rho(rho, "shrink_ordered_elastic_net");
  const auto view = order_statistics(v);
  Vector<Scalar> z(v.size());
  for (Index rank = 0; rank < v.size(); ++rank) {
    const Index j = view.permutation[static_cast<std::size_t>(rank)];
    const Scalar shrunk = std::max(Scalar(0), rho * std::abs(v[j]) - lam1_sorted[rank]);
    z[j] = (v[j] < Scalar(0) ? Scalar(-1) : Scalar(1)) * shrunk / (lam2_sorted[rank] + rho);
  }
  return z;
}

}  // namespace detail

// Sum of lambda_i times the i-th largest squared entry.
template <typename Scalar>
Scalar ordered_l2_penalty(const Vector<Scalar>& x, const RegularizationSequence<Scalar>& lam) {
  detail::check_same_length(x.size(), lam.size(), "ordered_l2_penalty");
  const auto view = order_statistics(x);
  Scalar total(0);
  for (Index i = 0; i < x.size(); ++i) {
    total += lam[i] * view.magnitudes[i] * view.magnitudes[i];
  }
  return total;
}

// Sum of lambda_i times the i-th largest absolute entry.
template <typename Scalar>
Scalar ordered_l1_penalty(const Vector<Scalar>& x, const Vector<Scalar>& lam_sorted) {
  detail::check_same_length(x.size(), lam_sorted.size(), "ordered_l1_penalty");
  const auto view = order_statistics(x);
  Scalar total(0);
  for (Index i = 0; i < x.size(); ++i) {
    total += lam_sorted[i] * view.magnitudes[i];
  }
  return total;
}

// Square root of the ordered-l2 penalty; a norm for any admissible sequence.
template <typename Scalar>
Scalar sqrt_ordered_l2(const Vector<Scalar>& x, const RegularizationSequence<Scalar>& lam) {
  return std::sqrt(ordered_l2_penalty(x, lam));
}

// Rank-matched ridge shrinkage: the entry holding the i-th largest |v|
// becomes rho * v_j / (lambda_i + rho). The rank assignment is recomputed
// from v on every call.
template <typename Scalar>
Vector<Scalar> shrink_ordered_l2(const Vector<Scalar>& v, const RegularizationSequence<Scalar>& lam, Scalar rho) {
  detail::check_same_length(v.size(), lam.size(), "shrink_ordered_l2");
  detail::check_rho(rho, "shrink_ordered_l2");
  const auto view = order_statistics(v);
  Vector<Scalar> z(v.size());
  for (Index rank = 0; rank < v.size(); ++rank) {
    const Index j = view.permutation[static_cast<std::size_t>(rank)];
    z[j] = rho * v[j] / (lam[rank] + rho);
  }
  return z;
}

// Rank-matched elastic-net shrinkage,
//   z_j = sign(v_j) * max(0, rho|v_j| - lam1_i) / (lam2_i + rho),
// with i the magnitude rank of coordinate j.
template <typename Scalar>
Vector<Scalar> shrink_ordered_elastic_net(const Vector<Scalar>& v, const RegularizationSequence<Scalar>& lam1,
                                          const RegularizationSequence<Scalar>& lam2, Scalar rho) {
  return detail::shrink_elastic_net_sorted(v, lam1.values(), lam2.values(), rho);
}

// Overload for the degenerate mixes (all-zero lam1 or lam2) that the strict
// sequence type cannot represent. Weights must still be non-increasing and
// non-negative.
template <typename Scalar>
Vector<Scalar> shrink_ordered_elastic_net(const Vector<Scalar>& v, const Vector<Scalar>& lam1_sorted,
                                          const Vector<Scalar>& lam2_sorted, Scalar rho) {
  for (Index i = 0; i + 1 < lam1_sorted.size(); ++i) {
    if (lam1_sorted[i + 1] > lam1_sorted[i] || lam2_sorted[i + 1] > lam2_sorted[i]) {
      throw NonMonotone("shrink_ordered_elastic_net: weights must be non-increasing");
    }
  }
  if ((lam1_sorted.size() > 0 && lam1_sorted[lam1_sorted.size() - 1] < Scalar(0)) ||
      (lam2_sorted.size() > 0 && lam2_sorted[lam2_sorted.size() - 1] < Scalar(0))) {
    throw OutOfDomain("shrink_ordered_elastic_net: weights must be non-negative");
  }
  return detail::shrink_elastic_net_sorted(v, lam1_sorted, lam2_sorted, rho);
}

template <typename Scalar>
Vector<Scalar> soft_threshold(const Vector<Scalar>& v, Scalar kappa) {
  if (kappa < Scalar(0) || !std::isfinite(static_cast<double>(kappa))) {
    throw OutOfDomain("soft_threshold: kappa must be non-negative and finite");
  }
  Vector<Scalar> z(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    const Scalar shrunk = std::max(Scalar(0), std::abs(v[i]) - kappa);
    z[i] = (v[i] < Scalar(0) ? Scalar(-1) : Scalar(1)) * shrunk;
  }
  return z;
}

// Minimand of the ordered-ridge z-subproblem: (1/2) sum lam_i z_(i)^2 +
// (rho/2) ||v - z||^2, with z_(i) the i-th largest |z|.
template <typename Scalar>
Scalar shrink_subproblem_objective(const Vector<Scalar>& z, const Vector<Scalar>& v,
                                   const RegularizationSequence<Scalar>& lam, Scalar rho) {
  return Scalar(0.5) * ordered_l2_penalty(z, lam) + Scalar(0.5) * rho * (v - z).squaredNorm();
}

// Exhaustive small-instance minimizer of the z-subproblem. Every
// rank-to-coordinate assignment is solved in closed form, each candidate is
// scored with the true sorted-order objective, and the best one wins.
template <typename Scalar>
Vector<Scalar> prox_oracle_small(const Vector<Scalar>& v, const RegularizationSequence<Scalar>& lam, Scalar rho) {
  detail::check_same_length(v.size(), lam.size(), "prox_oracle_small");
  detail::check_rho(rho, "prox_oracle_small");
  const Index p = v.size();
  if (p > 6) {
    throw TooLarge("prox_oracle_small: p=" + std::to_string(p) + " exceeds the enumeration limit 6");
  }
  std::vector<Index> ranks(static_cast<std::size_t>(p));
  std::iota(ranks.begin(), ranks.end(), Index(0));
  Vector<Scalar> best;
  Scalar best_objective = std::numeric_limits<Scalar>::infinity();
  do {
    Vector<Scalar> candidate(p);
    for (Index j = 0; j < p; ++j) {
      candidate[j] = rho * v[j] / (lam[ranks[static_cast<std::size_t>(j)]] + rho);
    }
    const Scalar objective = shrink_subproblem_objective(candidate, v, lam, rho);
    if (objective < best_objective) {
      best_objective = objective;
      best = candidate;
    }
  } while (std::next_permutation(ranks.begin(), ranks.end()));
  return best;
}

}  // namespace ordreg
