#pragma once

#include <functional>
#include <string>

#include "levydual/characteristics.hpp"

namespace levydual {

/// The pair (theta, u) defining the dual measure P_theta and the projected
/// process H^u = u'H, together with the horizon T.
class EsscherFrame {
 public:
  EsscherFrame(Vector theta, Vector u, double maturity = 1.0);

  /// Also checks that theta lies in the exponential-moment domain of t.
  static EsscherFrame for_triplet(const LevyTriplet& t, Vector theta, Vector u,
                                  double maturity = 1.0);

  const Vector& theta() const { return theta_; }
  const Vector& u() const { return u_; }
  double maturity() const { return maturity_; }
  int dim() const { return static_cast<int>(u_.size()); }

 private:
  Vector theta_;
  Vector u_;
  double maturity_;
};

/// One-dimensional characteristics of H^u under P_theta, with provenance.
struct DualTriplet1D {
  LevyTriplet triplet;
  Vector theta;
  Vector u;
  std::string source;
};

using CumulantFn = std::function<Complex(const CVector&)>;

/// Characteristics of H under P_theta (the full d-dimensional Esscher transform).
LevyTriplet esscher_transform(const LevyTriplet& t, const Vector& theta);

/// Characteristics (b^u, c^u, F^u) of u'H under P_theta for finite-activity triplets.
DualTriplet1D dual_triplet(const LevyTriplet& t, const EsscherFrame& f);

/// kappa^u(z) = kappa(theta + z u) - kappa(theta): the cumulant of H^u_1 under P_theta.
Complex dual_cumulant(const CumulantFn& kappa, const EsscherFrame& f, Complex z);

/// Whether e^{H^u} stays a martingale under P_theta, i.e. |kappa^u(1)| < 1e-12.
bool is_dual_martingale(const CumulantFn& kappa, const EsscherFrame& f);

struct DiffusionDual {
  double drift = 0.0;
  double variance = 0.0;
};

/// (u'b + u'c theta, u'cu) for diffusion characteristics evaluated at a state.
DiffusionDual dual_triplet_diffusion(const Vector& b, const Matrix& c, const EsscherFrame& f);

/// The classical one-dimensional dual (theta = 1, u = -1). Cross-checks the
/// result against remark_dual_1d and throws std::logic_error on disagreement.
DualTriplet1D one_dim_dual(const LevyTriplet& t);

/// Direct formulas for the one-dimensional dual:
///   b' = -b - c - int h(x)(e^x - 1) F(dx),  c' = c,  F'(E) = int 1_E(-x) e^x F(dx).
LevyTriplet remark_dual_1d(const LevyTriplet& t);

}  // namespace levydual
