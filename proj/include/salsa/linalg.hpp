#pragma once

#include <Eigen/SVD>
#include <stdexcept>

#include "salsa/types.hpp"

namespace salsa {

/// Kronecker product: block (r,c) of the result is a(r,c) * b.
template <typename Scalar>
Mat<Scalar> kronecker(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index j = 0; j < a.cols(); ++j)
    for (Index i = 0; i < a.rows(); ++i)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Column-major stacking of m into a column vector.
template <typename Scalar>
Vec<Scalar> vec(const Mat<Scalar>& m) {
  return Eigen::Map<const Vec<Scalar>>(m.data(), m.size());
}

/// Inverse of vec: column-major reshape of v into rows x cols.
template <typename Scalar>
Mat<Scalar> reshape(const Vec<Scalar>& v, Index rows, Index cols) {
  if (v.size() != rows * cols) throw std::invalid_argument("reshape: size mismatch");
  return Eigen::Map<const Mat<Scalar>>(v.data(), rows, cols);
}

namespace detail {

// SVD-based least-squares solve m+ * b with singular values below
// max(rows, cols)*eps*sigma_max treated as zero. JacobiSVD is plenty at the
// dense sizes this library works with.
template <typename Scalar>
Mat<Scalar> svd_solve(const Mat<Scalar>& m, const Mat<Scalar>& b) {
  Eigen::JacobiSVD<Mat<Scalar>> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(static_cast<double>(std::max(m.rows(), m.cols())) *
                   Eigen::NumTraits<double>::epsilon());
  return svd.solve(b);
}

}  // namespace detail

/// Minimum-norm least-squares solution of m * x = b, i.e. pinv(m) * b.
template <typename Scalar>
Mat<Scalar> pinv_solve(const Mat<Scalar>& m, const Mat<Scalar>& b) {
  if (m.rows() != b.rows()) throw std::invalid_argument("pinv_solve: row mismatch");
  return detail::svd_solve(m, b);
}

/// Minimum-norm least-squares solution of x * m = b, i.e. b * pinv(m).
/// Uses pinv(m)^T = pinv(m^T); transposes introduce no conjugation.
template <typename Scalar>
Mat<Scalar> right_pinv_solve(const Mat<Scalar>& b, const Mat<Scalar>& m) {
  if (m.cols() != b.cols()) throw std::invalid_argument("right_pinv_solve: column mismatch");
  Mat<Scalar> mt = m.transpose();
  Mat<Scalar> bt = b.transpose();
  return detail::svd_solve(mt, bt).transpose();
}

/// Explicit Moore-Penrose pseudo-inverse with the same threshold rule.
template <typename Scalar>
Mat<Scalar> pinv(const Mat<Scalar>& m) {
  Mat<Scalar> id = Mat<Scalar>::Identity(m.rows(), m.rows());
  return detail::svd_solve(m, id);
}

}  // namespace salsa
