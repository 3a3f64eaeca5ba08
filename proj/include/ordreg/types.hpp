#pragma once

#include <Eigen/Core>

namespace ordreg {

using Index = Eigen::Index;

// Dense column-major storage throughout (Eigen's default).
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

}  // namespace ordreg
