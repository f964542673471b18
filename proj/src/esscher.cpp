#include "levydual/esscher.hpp"

#include <cmath>
#include <stdexcept>

#include "levydual/errors.hpp"

namespace levydual {

namespace {

// Esscher tilt by theta followed by the linear map U.
LevyTriplet dual_transform(const LevyTriplet& t, const Vector& theta, const Matrix& U) {
  if (theta.size() != t.dim() || U.cols() != t.dim()) {
    throw DimensionMismatch("frame dimension does not match the triplet");
  }
  if (!t.jumps().is_finite_activity()) {
    throw UnsupportedMeasure("dual_triplet needs a finite-activity measure; use the GH parameter maps");
  }
  if (!exp_moment_contains(t, theta)) {
    throw DomainError("theta outside the exponential-moment domain");
  }
  Vector drift = U * t.drift() + U * t.cov() * theta;
  JumpMeasure jumps = t.jumps().transformed(U, theta);
  if (t.truncation() == Truncation::Canonical &&
      t.jumps().kind() != JumpMeasure::Kind::Empty) {
    drift += jumps.truncated_mean() - U * t.jumps().truncated_mean();
  }
  Matrix cov = U * t.cov() * U.transpose();
  cov = 0.5 * (cov + cov.transpose()).eval();
  return LevyTriplet(std::move(drift), std::move(cov), std::move(jumps), t.truncation(),
                     t.origin());
}

bool same_atoms(const JumpMeasure& a, const JumpMeasure& b, double tol) {
  const auto& x = a.atom_list();
  const auto& y = b.atom_list();
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if ((x[i].point - y[i].point).cwiseAbs().maxCoeff() > tol) return false;
    if (std::abs(x[i].weight - y[i].weight) > tol * std::max(1.0, x[i].weight)) return false;
  }
  return true;
}

}  // namespace

EsscherFrame::EsscherFrame(Vector theta, Vector u, double maturity)
    : theta_(std::move(theta)), u_(std::move(u)), maturity_(maturity) {
  if (theta_.size() != u_.size() || u_.size() == 0) {
    throw DimensionMismatch("frame theta and u must have equal positive length");
  }
  if (u_.norm() == 0.0) throw InvalidArgument("frame direction u must be nonzero");
  if (!(maturity_ > 0.0)) throw InvalidArgument("frame maturity must be positive");
}

EsscherFrame EsscherFrame::for_triplet(const LevyTriplet& t, Vector theta, Vector u,
                                       double maturity) {
  EsscherFrame f(std::move(theta), std::move(u), maturity);
  if (f.dim() != t.dim()) throw DimensionMismatch("frame dimension does not match the triplet");
  if (!exp_moment_contains(t, f.theta())) {
    throw DomainError("theta outside the exponential-moment domain");
  }
  return f;
}

LevyTriplet esscher_transform(const LevyTriplet& t, const Vector& theta) {
  return dual_transform(t, theta, Matrix::Identity(t.dim(), t.dim()));
}

DualTriplet1D dual_triplet(const LevyTriplet& t, const EsscherFrame& f) {
  LevyTriplet one = dual_transform(t, f.theta(), f.u().transpose());
  return {std::move(one), f.theta(), f.u(), t.origin()};
}

Complex dual_cumulant(const CumulantFn& kappa, const EsscherFrame& f, Complex z) {
  if (z == Complex(0.0, 0.0)) return 0.0;
  const CVector shifted = f.theta().cast<Complex>() + z * f.u().cast<Complex>();
  return kappa(shifted) - kappa(f.theta().cast<Complex>());
}

bool is_dual_martingale(const CumulantFn& kappa, const EsscherFrame& f) {
  return std::abs(dual_cumulant(kappa, f, 1.0)) < 1e-12;
}

DiffusionDual dual_triplet_diffusion(const Vector& b, const Matrix& c, const EsscherFrame& f) {
  const int d = f.dim();
  if (b.size() != d || c.rows() != d || c.cols() != d) {
    throw DimensionMismatch("diffusion characteristics do not match the frame");
  }
  check_covariance(c, "diffusion covariance");
  const Vector& u = f.u();
  return {u.dot(b) + u.dot(c * f.theta()), u.dot(c * u)};
}

LevyTriplet remark_dual_1d(const LevyTriplet& t) {
  if (t.dim() != 1) throw DimensionMismatch("remark_dual_1d needs a one-dimensional triplet");
  if (!t.jumps().is_finite_activity()) throw UnsupportedMeasure("finite-activity measure required");
  const JumpMeasure& F = t.jumps();
  double correction = 0.0;
  if (t.truncation() == Truncation::Canonical) {
    correction = F.integrate_real([](const Vector& x) {
      return truncate(Truncation::Canonical, x)(0) * std::expm1(x(0));
    });
  }
  Vector drift(1);
  drift(0) = -t.drift()(0) - t.cov()(0, 0) - correction;
  JumpMeasure dual_jumps = JumpMeasure::empty(1);
  if (F.kind() == JumpMeasure::Kind::FiniteAtoms) {
    std::vector<Atom> atoms;
    for (const auto& a : F.atom_list()) {
      Vector p(1);
      p(0) = -a.point(0);
      atoms.push_back({p, a.weight * std::exp(a.point(0))});
    }
    dual_jumps = JumpMeasure::atoms(1, std::move(atoms));
  } else if (F.kind() == JumpMeasure::Kind::FiniteActivityDensity) {
    dual_jumps = F.transformed(-Matrix::Identity(1, 1), Vector::Ones(1));
  }
  return LevyTriplet(std::move(drift), t.cov(), std::move(dual_jumps), t.truncation(), t.origin());
}

DualTriplet1D one_dim_dual(const LevyTriplet& t) {
  if (t.dim() != 1) throw DimensionMismatch("one_dim_dual needs a one-dimensional triplet");
  const EsscherFrame frame(Vector::Ones(1), -Vector::Ones(1));
  DualTriplet1D dual = dual_triplet(t, frame);
  const LevyTriplet direct = remark_dual_1d(t);
  constexpr double tol = 1e-12;
  bool ok = std::abs(dual.triplet.drift()(0) - direct.drift()(0)) <= tol &&
            std::abs(dual.triplet.cov()(0, 0) - direct.cov()(0, 0)) <= tol;
  if (ok && t.jumps().kind() == JumpMeasure::Kind::FiniteAtoms) {
    ok = same_atoms(dual.triplet.jumps(), direct.jumps(), tol);
  }
  if (!ok) throw std::logic_error("one_dim_dual disagrees with the direct dual formulas");
  return dual;
}

}  // namespace levydual
