#pragma once

#include <Eigen/SVD>
#include <stdexcept>
#include <vector>

#include "salsa/linalg.hpp"
#include "salsa/types.hpp"

namespace salsa {

/// A division (i1, i2, j1, j2) of a matrix with I = i1*i2 rows and
/// J = j1*j2 columns. In every Kronecker term C ⊗ B the right factor B is
/// i1 x j1 and the left factor C is i2 x j2.
struct FactorShape {
  Index i1 = 1, i2 = 1, j1 = 1, j2 = 1;

  Index rows() const { return i1 * i2; }
  Index cols() const { return j1 * j2; }

  /// Upper bound on the number of terms needed for exact reconstruction:
  /// the rearranged matrix has dims (i2*j2) x (i1*j1).
  Index full_rank() const { return std::min(i1 * j1, i2 * j2); }

  void validate(Index mat_rows, Index mat_cols) const {
    if (i1 < 1 || i2 < 1 || j1 < 1 || j2 < 1)
      throw std::invalid_argument("FactorShape: entries must be positive");
    if (i1 * i2 != mat_rows || j1 * j2 != mat_cols)
      throw std::invalid_argument("FactorShape: inconsistent with matrix dims");
  }

  bool operator==(const FactorShape&) const = default;
};

/// One Kronecker term. Reconstruction is left ⊗ right, with
/// left = C (i2 x j2) and right = B (i1 x j1). Individual factors are only
/// determined up to a complex scalar (alpha, 1/alpha); compare
/// reconstructions, never factors.
struct KroneckerTerm {
  MatC left;   // C factor, i2 x j2
  MatC right;  // B factor, i1 x j1

  MatC reconstruct() const { return kronecker(left, right); }

  FactorShape shape() const {
    return {right.rows(), left.rows(), right.cols(), left.cols()};
  }
};

/// Van Loan rearrangement. x is blocked into an i2 x j2 grid of i1 x j1
/// blocks; row n + m*i2 of the result (0-based) is the column-stacking of
/// block (n, m). For x = C ⊗ B this yields the rank-one matrix
/// vec(C) * vec(B)^T.
inline MatC rearrange(const MatC& x, const FactorShape& s) {
  s.validate(x.rows(), x.cols());
  MatC k(s.i2 * s.j2, s.i1 * s.j1);
  for (Index m = 0; m < s.j2; ++m)
    for (Index n = 0; n < s.i2; ++n) {
      MatC block = x.block(n * s.i1, m * s.j1, s.i1, s.j1);
      k.row(n + m * s.i2) = vec(block).transpose();
    }
  return k;
}

/// Nearest single Kronecker term of the given shape in Frobenius norm,
/// from the dominant singular triplet (sigma, u, v) of rearrange(x):
/// C = reshape(sqrt(sigma)*u), B = reshape(sqrt(sigma)*conj(v)).
inline KroneckerTerm nearest_kronecker(const MatC& x, const FactorShape& s) {
  MatC k = rearrange(x, s);
  Eigen::JacobiSVD<MatC> svd(k, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const double scale = std::sqrt(svd.singularValues()(0));
  VecC u = scale * svd.matrixU().col(0);
  VecC v = scale * svd.matrixV().col(0).conjugate();
  return {reshape(u, s.i2, s.j2), reshape(v, s.i1, s.j1)};
}

/// Sum of Kronecker terms; the shape argument fixes the result dims so an
/// empty list reconstructs to zero.
inline MatC reconstruct(const std::vector<KroneckerTerm>& terms, const FactorShape& s) {
  MatC out = MatC::Zero(s.rows(), s.cols());
  for (const auto& t : terms) {
    if (t.shape() != s) throw std::invalid_argument("reconstruct: mixed term shapes");
    out += t.reconstruct();
  }
  return out;
}

/// Sequential Kronecker factorization: term r is the nearest Kronecker term
/// of the residual x - sum of terms 1..r-1, the residual being recomputed
/// from the original matrix each round. Residual norms are non-increasing
/// in r and reach zero once r exceeds the rank of rearrange(x).
inline std::vector<KroneckerTerm> sequential_factorize(const MatC& x, const FactorShape& s,
                                                       int r_terms) {
  if (r_terms < 1) throw std::invalid_argument("sequential_factorize: r_terms must be >= 1");
  s.validate(x.rows(), x.cols());
  std::vector<KroneckerTerm> terms;
  terms.reserve(static_cast<std::size_t>(r_terms));
  for (int r = 0; r < r_terms; ++r) {
    MatC residual = x - reconstruct(terms, s);
    terms.push_back(nearest_kronecker(residual, s));
  }
  return terms;
}

/// Frobenius residuals ||x - sum_{r'<=r} term_r'|| for r = 1..terms.size().
inline std::vector<double> residual_norms(const MatC& x, const FactorShape& s,
                                          const std::vector<KroneckerTerm>& terms) {
  std::vector<double> out;
  out.reserve(terms.size());
  MatC acc = MatC::Zero(s.rows(), s.cols());
  for (const auto& t : terms) {
    if (t.shape() != s) throw std::invalid_argument("residual_norms: mixed term shapes");
    acc += t.reconstruct();
    out.push_back((x - acc).norm());
  }
  return out;
}

}  // namespace salsa
