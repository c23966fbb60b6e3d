#pragma once

#include <Eigen/Dense>
#include <complex>

namespace salsa {

using Index = Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using MatC = Mat<Complex>;
using VecC = Vec<Complex>;
using MatR = Mat<double>;
using VecR = Vec<double>;

}  // namespace salsa
