#pragma once

#include <string>

#include "levydual/jump_measure.hpp"
#include "levydual/types.hpp"

namespace levydual {

/// Eigenvalue tolerance for the positive semidefinite check on covariances.
inline constexpr double kPsdTolerance = 1e-12;

/// Differential characteristics (b, c, F) of a time-homogeneous Levy process,
/// per unit time, under a declared truncation convention.
class LevyTriplet {
 public:
  LevyTriplet(Vector drift, Matrix cov, JumpMeasure jumps,
              Truncation trunc = Truncation::Canonical, std::string origin = "custom");

  int dim() const { return static_cast<int>(drift_.size()); }
  const Vector& drift() const { return drift_; }
  const Matrix& cov() const { return cov_; }
  const JumpMeasure& jumps() const { return jumps_; }
  Truncation truncation() const { return trunc_; }
  /// Free-form tag naming the model the triplet came from.
  const std::string& origin() const { return origin_; }

  LevyTriplet with_drift(Vector drift) const;

 private:
  Vector drift_;
  Matrix cov_;
  JumpMeasure jumps_;
  Truncation trunc_;
  std::string origin_;
};

/// Throws InvalidArgument unless c is symmetric positive semidefinite.
void check_covariance(const Matrix& c, const std::string& what);

/// Laplace cumulant kappa(w) = <w,b> + 1/2 <w,cw> + int (e^{<w,x>} - 1 - <w,h(x)>) F(dx).
/// Real arguments yield an exactly real result.
Complex cumulant(const LevyTriplet& t, const CVector& w,
                 JumpIntegration how = JumpIntegration::Auto);
double cumulant(const LevyTriplet& t, const Vector& u,
                JumpIntegration how = JumpIntegration::Auto);

/// Characteristics of U H for an n x d matrix U.
LevyTriplet linear_transform(const LevyTriplet& t, const Matrix& U);

/// The drift b_i that makes exp(H^i) a local martingale.
double martingale_drift(const LevyTriplet& t, int i,
                        JumpIntegration how = JumpIntegration::Auto);

/// Installs martingale_drift in every coordinate.
LevyTriplet with_martingale_drift(const LevyTriplet& t,
                                  JumpIntegration how = JumpIntegration::Auto);

/// Whether int_{|x|>1} e^{<u,x>} F(dx) is finite.
bool exp_moment_contains(const LevyTriplet& t, const Vector& u);

/// Re-expresses a finite-activity triplet under another truncation by the
/// drift shift int h(x) F(dx).
LevyTriplet with_truncation(const LevyTriplet& t, Truncation target);

}  // namespace levydual
