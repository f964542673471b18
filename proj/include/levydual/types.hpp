#pragma once

#include <complex>

#include <Eigen/Dense>

namespace levydual {

using Complex = std::complex<double>;
using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXd;
/// Row-major so that one sampled path is contiguous.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline Vector unit_vector(int dim, int i) {
  Vector e = Vector::Zero(dim);
  e(i) = 1.0;
  return e;
}

/// Non-Hermitian pairing <w, x> = sum_k w_k x_k.
inline Complex pair(const CVector& w, const Vector& x) {
  return (w.array() * x.cast<Complex>().array()).sum();
}

/// Non-Hermitian quadratic form w' A w.
inline Complex quad_form(const CVector& w, const Matrix& A) {
  return (w.transpose() * A.cast<Complex>() * w)(0, 0);
}

}  // namespace levydual
