#pragma once

#include <string>

#include "levydual/types.hpp"

namespace levydual {

enum class GHSubclass { NIG, VG, GeneralGH };

std::string to_string(GHSubclass s);

/// Parameters of a bivariate generalized hyperbolic Levy process GH_2.
/// Delta is symmetric positive definite with unit determinant.
struct GHParams {
  double lambda = -0.5;
  double alpha = 1.0;
  Vector beta = Vector::Zero(2);
  double delta = 1.0;
  Vector mu = Vector::Zero(2);
  Matrix Delta = Matrix::Identity(2, 2);
  GHSubclass subclass = GHSubclass::NIG;

  /// Throws InvalidArgument on any broken invariant.
  void validate() const;
  /// alpha^2 - beta' Delta beta, strictly positive for valid parameters.
  double gamma_squared() const;
  /// Convenience constructors with the subclass fixed.
  static GHParams nig(double alpha, Vector beta, double delta, Vector mu,
                      Matrix Delta = Matrix::Identity(2, 2));
  static GHParams vg(double lambda, double alpha, Vector beta, Vector mu,
                     Matrix Delta = Matrix::Identity(2, 2));
};

/// Parameters of a univariate GH law GH_1(lambda, alpha, beta, delta, mu).
struct GH1DParams {
  double lambda = -0.5;
  double alpha = 1.0;
  double beta = 0.0;
  double delta = 1.0;
  double mu = 0.0;

  void validate() const;
};

}  // namespace levydual
