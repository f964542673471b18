#include <cmath>
#include <random>

#include "levydual/errors.hpp"
#include "levydual/models.hpp"

namespace levydual {

void MertonParams::validate() const {
  const int d = dim();
  if (d != 2 && d != 3) throw InvalidArgument("merton: dimension must be 2 or 3");
  if (rho.rows() != d || rho.cols() != d) throw DimensionMismatch("merton: rho must be d x d");
  if (lambda.size() != d || tau.size() != d) {
    throw DimensionMismatch("merton: lambda and tau need one entry per asset");
  }
  for (int i = 0; i < d; ++i) {
    if (!(sigma(i) >= 0.0) || !std::isfinite(sigma(i))) throw InvalidArgument("merton: sigma must be nonnegative");
    if (!(lambda(i) >= 0.0) || !std::isfinite(lambda(i))) throw InvalidArgument("merton: lambda must be nonnegative");
    if (!(tau(i) > 0.0) || !std::isfinite(tau(i))) throw InvalidArgument("merton: tau must be positive");
    if (std::abs(rho(i, i) - 1.0) > 1e-12) throw InvalidArgument("merton: rho must have unit diagonal");
  }
  check_covariance(rho, "merton correlation");
  if (jump_corr) {
    const Matrix& r = *jump_corr;
    if (r.rows() != d || r.cols() != d) throw DimensionMismatch("merton: jump_corr must be d x d");
    for (int i = 0; i < d; ++i) {
      if (std::abs(r(i, i) - 1.0) > 1e-12) throw InvalidArgument("merton: jump_corr must have unit diagonal");
    }
    check_covariance(r, "merton jump correlation");
    if (Eigen::LLT<Matrix>(r).info() != Eigen::Success) {
      throw InvalidArgument("merton: jump_corr must be positive definite");
    }
  }
}

Matrix MertonParams::covariance() const { return sigma.asDiagonal() * rho * sigma.asDiagonal(); }

Matrix MertonParams::jump_covariance() const {
  const Matrix r = jump_corr ? *jump_corr : Matrix::Identity(dim(), dim());
  return tau.asDiagonal() * r * tau.asDiagonal();
}

double MertonParams::jump_intensity() const { return lambda.prod(); }

LevyTriplet merton_triplet(const MertonParams& p) {
  p.validate();
  const int d = p.dim();
  const double intensity = p.jump_intensity();
  JumpMeasure jumps = intensity > 0.0
                          ? JumpMeasure::gaussian(intensity, Vector::Zero(d), p.jump_covariance())
                          : JumpMeasure::empty(d);
  const std::string origin = "merton" + std::to_string(d) + "d";
  LevyTriplet t(Vector::Zero(d), p.covariance(), std::move(jumps), Truncation::Zero, origin);
  return with_martingale_drift(t);
}

DualTriplet1D merton_quanto_dual(const MertonParams& p) {
  if (p.dim() != 2) throw DimensionMismatch("merton_quanto_dual needs a two-asset model");
  const LevyTriplet t = merton_triplet(p);
  const double s1 = p.sigma(0), s2 = p.sigma(1);
  const Vector drift{{t.drift()(1) + p.rho(0, 1) * s1 * s2}};
  const Matrix cov{{s2 * s2}};
  const double intensity = p.jump_intensity() * std::exp(0.5 * p.tau(0) * p.tau(0));
  JumpMeasure jumps = JumpMeasure::empty(1);
  if (intensity > 0.0) {
    const double r = p.jump_corr ? (*p.jump_corr)(0, 1) : 0.0;
    jumps = JumpMeasure::gaussian(intensity, Vector{{r * p.tau(0) * p.tau(1)}},
                                  Matrix{{p.tau(1) * p.tau(1)}});
  }
  return DualTriplet1D{LevyTriplet(drift, cov, std::move(jumps), Truncation::Zero, "merton2d-quanto"),
                       Vector{{1.0, 0.0}}, Vector{{0.0, 1.0}}, "merton2d"};
}

MertonModel::MertonModel(MertonParams p, std::optional<Vector> spot)
    : Model(make_log_spot(spot, p.dim())),
      params_(std::move(p)),
      triplet_(merton_triplet(params_)),
      intensity_(params_.jump_intensity()),
      cov_(params_.covariance()),
      jump_cov_(params_.jump_covariance()),
      root_(psd_root(cov_)),
      jump_root_(psd_root(jump_cov_)) {}

Complex MertonModel::cumulant(const CVector& w) const {
  check_dim(w);
  if (w.isZero(0.0)) return 0.0;
  Complex k = pair(w, triplet_.drift()) + 0.5 * quad_form(w, cov_);
  if (intensity_ > 0.0) k += intensity_ * (std::exp(0.5 * quad_form(w, jump_cov_)) - 1.0);
  return k;
}

void MertonModel::sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                                    bool antithetic) const {
  const int d = dim();
  if (antithetic && out.rows() % 2 != 0) throw InvalidArgument("antithetic sampling needs pairs");
  std::normal_distribution<double> normal;
  std::poisson_distribution<long> poisson(intensity_ > 0.0 ? intensity_ * T : 1.0);
  const double sq = std::sqrt(T);
  const Vector drift = T * triplet_.drift();
  Vector z(d), jump = Vector::Zero(d), zj(d);
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    if (antithetic && r % 2 == 1) {
      z = -z;
    } else {
      for (int k = 0; k < d; ++k) z(k) = normal(rng);
      jump.setZero();
      if (intensity_ > 0.0) {
        const long n = poisson(rng);
        if (n > 0) {
          for (int k = 0; k < d; ++k) zj(k) = normal(rng);
          jump = std::sqrt(static_cast<double>(n)) * (jump_root_ * zj);
        }
      }
    }
    out.row(r) = (drift + sq * (root_ * z) + jump).transpose();
  }
}

}  // namespace levydual
