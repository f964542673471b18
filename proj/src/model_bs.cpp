#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "levydual/errors.hpp"
#include "levydual/models.hpp"

namespace levydual {

double Model::cumulant(const Vector& u) const {
  return cumulant(CVector(u.cast<Complex>())).real();
}

void Model::check_dim(const CVector& w) const {
  if (w.size() != dim()) {
    throw DimensionMismatch(name() + ": cumulant argument has length " +
                            std::to_string(w.size()) + ", expected " + std::to_string(dim()));
  }
}

Vector Model::make_log_spot(const std::optional<Vector>& spot, int dim) {
  if (!spot) return Vector::Zero(dim);
  if (spot->size() != dim) throw DimensionMismatch("spot vector length");
  for (Eigen::Index i = 0; i < spot->size(); ++i) {
    if (!((*spot)(i) > 0.0) || !std::isfinite((*spot)(i))) {
      throw InvalidArgument("spot prices must be positive and finite");
    }
  }
  return spot->array().log();
}

Matrix psd_root(const Matrix& c) {
  Eigen::SelfAdjointEigenSolver<Matrix> eig(c);
  const Vector root = eig.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  return eig.eigenvectors() * root.asDiagonal();
}

void BlackScholesParams::validate() const {
  const Eigen::Index d = sigma.size();
  if (d < 1) throw InvalidArgument("bs: at least one asset is required");
  if (rho.rows() != d || rho.cols() != d) throw DimensionMismatch("bs: rho must be d x d");
  for (Eigen::Index i = 0; i < d; ++i) {
    if (!(sigma(i) >= 0.0) || !std::isfinite(sigma(i))) {
      throw InvalidArgument("bs: sigma must be nonnegative");
    }
    if (std::abs(rho(i, i) - 1.0) > 1e-12) throw InvalidArgument("bs: rho must have unit diagonal");
  }
  check_covariance(rho, "bs correlation");
}

Matrix BlackScholesParams::covariance() const {
  return sigma.asDiagonal() * rho * sigma.asDiagonal();
}

BlackScholesParams BS2DParams::general() const {
  BlackScholesParams p;
  p.sigma = Vector{{sigma1, sigma2}};
  p.rho = Matrix{{1.0, rho}, {rho, 1.0}};
  return p;
}

LevyTriplet bs_triplet(const BlackScholesParams& p) {
  p.validate();
  const Matrix c = p.covariance();
  const Vector b = -0.5 * c.diagonal();
  return LevyTriplet(b, c, JumpMeasure::empty(static_cast<int>(b.size())), Truncation::Canonical,
                     "bs" + std::to_string(b.size()) + "d");
}

LevyTriplet bs_triplet(const BS2DParams& p) { return bs_triplet(p.general()); }

BlackScholesModel::BlackScholesModel(BlackScholesParams p, std::optional<Vector> spot)
    : Model(make_log_spot(spot, static_cast<int>(p.sigma.size()))), params_(std::move(p)) {
  params_.validate();
  cov_ = params_.covariance();
  drift_ = -0.5 * cov_.diagonal();
  root_ = psd_root(cov_);
}

BlackScholesModel::BlackScholesModel(const BS2DParams& p, std::optional<Vector> spot)
    : BlackScholesModel(p.general(), std::move(spot)) {}

LevyTriplet BlackScholesModel::triplet() const { return bs_triplet(params_); }

Complex BlackScholesModel::cumulant(const CVector& w) const {
  check_dim(w);
  if (w.isZero(0.0)) return 0.0;
  return pair(w, drift_) + 0.5 * quad_form(w, cov_);
}

void BlackScholesModel::sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                                          bool antithetic) const {
  const int d = dim();
  if (antithetic && out.rows() % 2 != 0) throw InvalidArgument("antithetic sampling needs pairs");
  std::normal_distribution<double> normal;
  const double sq = std::sqrt(T);
  Vector z(d);
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    if (antithetic && r % 2 == 1) {
      z = -z;
    } else {
      for (int k = 0; k < d; ++k) z(k) = normal(rng);
    }
    out.row(r) = (T * drift_ + sq * (root_ * z)).transpose();
  }
}

}  // namespace levydual
