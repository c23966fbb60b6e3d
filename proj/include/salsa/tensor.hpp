#pragma once

#include <array>
#include <stdexcept>

#include "salsa/types.hpp"

namespace salsa {

/// Dense 3-way tensor stored column-major (first index fastest).
///
/// Unfolding convention used throughout: the mode-n fibers become the
/// columns of the unfolding; the remaining indices are ordered with the
/// lower-numbered mode varying fastest.
template <typename Scalar>
class Tensor3 {
 public:
  Tensor3() : dims_{0, 0, 0} {}

  Tensor3(Index d1, Index d2, Index d3) : dims_{d1, d2, d3} {
    if (d1 < 1 || d2 < 1 || d3 < 1)
      throw std::invalid_argument("Tensor3: dimensions must be positive");
    data_ = Vec<Scalar>::Zero(d1 * d2 * d3);
  }

  Index dim(int mode) const { return dims_[mode - 1]; }
  const std::array<Index, 3>& dims() const { return dims_; }
  Index size() const { return data_.size(); }

  Scalar operator()(Index i, Index j, Index k) const {
    return data_(i + dims_[0] * (j + dims_[1] * k));
  }
  Scalar& operator()(Index i, Index j, Index k) {
    return data_(i + dims_[0] * (j + dims_[1] * k));
  }

  const Vec<Scalar>& flat() const { return data_; }
  Vec<Scalar>& flat() { return data_; }

  double norm() const { return data_.norm(); }

  Tensor3& operator+=(const Tensor3& o) {
    check_same_dims(o);
    data_ += o.data_;
    return *this;
  }
  Tensor3& operator-=(const Tensor3& o) {
    check_same_dims(o);
    data_ -= o.data_;
    return *this;
  }
  friend Tensor3 operator+(Tensor3 a, const Tensor3& b) { return a += b; }
  friend Tensor3 operator-(Tensor3 a, const Tensor3& b) { return a -= b; }

 private:
  void check_same_dims(const Tensor3& o) const {
    if (dims_ != o.dims_) throw std::invalid_argument("Tensor3: dimension mismatch");
  }

  std::array<Index, 3> dims_;
  Vec<Scalar> data_;
};

/// Mode-n unfolding: rows = dim(mode), columns = product of the other two
/// dims with the lower-numbered remaining mode varying fastest.
template <typename Scalar>
Mat<Scalar> unfold(const Tensor3<Scalar>& t, int mode) {
  const Index d1 = t.dim(1), d2 = t.dim(2), d3 = t.dim(3);
  switch (mode) {
    case 1:
      return Eigen::Map<const Mat<Scalar>>(t.flat().data(), d1, d2 * d3);
    case 2: {
      Mat<Scalar> m(d2, d1 * d3);
      for (Index k = 0; k < d3; ++k)
        for (Index j = 0; j < d2; ++j)
          for (Index i = 0; i < d1; ++i) m(j, i + k * d1) = t(i, j, k);
      return m;
    }
    case 3:
      return Eigen::Map<const Mat<Scalar>>(t.flat().data(), d1 * d2, d3).transpose();
    default:
      throw std::invalid_argument("unfold: mode must be 1, 2 or 3");
  }
}

/// Inverse of unfold: unfold(fold(m, mode, dims), mode) == m.
template <typename Scalar>
Tensor3<Scalar> fold(const Mat<Scalar>& m, int mode, const std::array<Index, 3>& dims) {
  const Index d1 = dims[0], d2 = dims[1], d3 = dims[2];
  if (mode < 1 || mode > 3) throw std::invalid_argument("fold: mode must be 1, 2 or 3");
  const Index other = d1 * d2 * d3 / dims[mode - 1];
  if (m.rows() != dims[mode - 1] || m.cols() != other)
    throw std::invalid_argument("fold: matrix shape inconsistent with dims");
  Tensor3<Scalar> t(d1, d2, d3);
  switch (mode) {
    case 1:
      Eigen::Map<Mat<Scalar>>(t.flat().data(), d1, d2 * d3) = m;
      break;
    case 2:
      for (Index k = 0; k < d3; ++k)
        for (Index j = 0; j < d2; ++j)
          for (Index i = 0; i < d1; ++i) t(i, j, k) = m(j, i + k * d1);
      break;
    case 3:
      Eigen::Map<Mat<Scalar>>(t.flat().data(), d1 * d2, d3) = m.transpose();
      break;
  }
  return t;
}

/// Mode-n product: multiplies every mode-n fiber by m, so that
/// unfold(result, mode) = m * unfold(t, mode).
template <typename Scalar>
Tensor3<Scalar> mode_product(const Tensor3<Scalar>& t, const Mat<Scalar>& m, int mode) {
  if (mode < 1 || mode > 3) throw std::invalid_argument("mode_product: bad mode");
  if (m.cols() != t.dim(mode))
    throw std::invalid_argument("mode_product: matrix columns must match tensor mode dim");
  std::array<Index, 3> dims = t.dims();
  dims[mode - 1] = m.rows();
  Mat<Scalar> prod = m * unfold(t, mode);
  return fold(prod, mode, dims);
}

/// Identity core tensor of dims (i1*i2, i1, i2): its 1-mode unfolding is the
/// (i1*i2) x (i1*i2) identity. Links Kronecker products to Tucker form:
/// unfold(core ×2 B^T ×3 C^T, 1) = C ⊗ B.
template <typename Scalar>
Tensor3<Scalar> core_tensor(Index i1, Index i2) {
  if (i1 < 1 || i2 < 1) throw std::invalid_argument("core_tensor: dims must be positive");
  Tensor3<Scalar> s(i1 * i2, i1, i2);
  for (Index b = 0; b < i2; ++b)
    for (Index a = 0; a < i1; ++a) s(a + b * i1, a, b) = Scalar(1);
  return s;
}

}  // namespace salsa
