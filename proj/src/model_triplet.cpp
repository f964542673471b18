#include <cmath>
#include <random>

#include "levydual/errors.hpp"
#include "levydual/models.hpp"

namespace levydual {

TripletModel::TripletModel(LevyTriplet t, std::optional<Vector> spot)
    : Model(make_log_spot(spot, t.dim())), triplet_(std::move(t)) {
  const JumpMeasure& F = triplet_.jumps();
  if (!F.is_finite_activity()) {
    throw UnsupportedModel("triplet models need a finite-activity jump measure");
  }
  const int d = triplet_.dim();
  effective_drift_ = triplet_.drift();
  if (triplet_.truncation() == Truncation::Canonical && F.kind() != JumpMeasure::Kind::Empty) {
    for (int i = 0; i < d; ++i) {
      effective_drift_(i) -= F.integrate_real(
          [i](const Vector& x) { return truncate(Truncation::Canonical, x)(i); });
    }
  }
  root_ = psd_root(triplet_.cov());
  if (F.kind() == JumpMeasure::Kind::FiniteAtoms) {
    atoms_ = F.atom_list();
    mass_ = F.total_mass();
  } else if (F.kind() == JumpMeasure::Kind::FiniteActivityDensity) {
    law_ = F.gaussian_law();
    mass_ = F.total_mass();
    if (law_) law_root_ = psd_root(law_->cov);
  }
}

Complex TripletModel::cumulant(const CVector& w) const {
  check_dim(w);
  return levydual::cumulant(triplet_, w);
}

bool TripletModel::exp_moment_contains(const Vector& u) const {
  return levydual::exp_moment_contains(triplet_, u);
}

bool TripletModel::is_gaussian() const {
  return triplet_.jumps().kind() == JumpMeasure::Kind::Empty;
}

bool TripletModel::supports_sampling() const {
  const auto kind = triplet_.jumps().kind();
  return kind == JumpMeasure::Kind::Empty || kind == JumpMeasure::Kind::FiniteAtoms ||
         law_.has_value();
}

void TripletModel::sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                                     bool antithetic) const {
  if (!supports_sampling()) {
    throw UnsupportedModel("no sampler for jump measure kind " + triplet_.jumps().kind_name());
  }
  if (antithetic && out.rows() % 2 != 0) throw InvalidArgument("antithetic sampling needs pairs");
  const int d = dim();
  std::normal_distribution<double> normal;
  std::poisson_distribution<long> poisson(mass_ > 0.0 ? mass_ * T : 1.0);
  std::vector<double> weights;
  for (const Atom& a : atoms_) weights.push_back(a.weight);
  std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
  const double sq = std::sqrt(T);
  const Vector drift = T * effective_drift_;
  Vector z(d), jump = Vector::Zero(d), zj(d);
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    if (antithetic && r % 2 == 1) {
      z = -z;
    } else {
      for (int k = 0; k < d; ++k) z(k) = normal(rng);
      jump.setZero();
      const long n = mass_ > 0.0 ? poisson(rng) : 0;
      for (long j = 0; j < n; ++j) {
        if (!atoms_.empty()) {
          jump += atoms_[pick(rng)].point;
        } else {
          for (int k = 0; k < d; ++k) zj(k) = normal(rng);
          jump += law_->mean + law_root_ * zj;
        }
      }
    }
    out.row(r) = (drift + sq * (root_ * z) + jump).transpose();
  }
}

}  // namespace levydual
