#include "levydual/characteristics.hpp"

#include <cmath>

#include "levydual/errors.hpp"

namespace levydual {

namespace {

bool is_real(const CVector& w) { return (w.imag().array() == 0.0).all(); }

// int (e^{<w,x>} - 1 - <w,h(x)>) F(dx).
Complex jump_part(const LevyTriplet& t, const CVector& w, JumpIntegration how) {
  const JumpMeasure& F = t.jumps();
  const Truncation trunc = t.truncation();
  switch (F.kind()) {
    case JumpMeasure::Kind::Empty:
      return 0.0;
    case JumpMeasure::Kind::GHDensity:
      throw UnsupportedMeasure("GH triplets defer cumulants to the model's closed form");
    default:
      break;
  }
  if (is_real(w)) {
    const Vector u = w.real();
    if (F.kind() == JumpMeasure::Kind::FiniteActivityDensity && how == JumpIntegration::Auto &&
        F.has_laplace_hook() && trunc == Truncation::Zero) {
      return F.laplace(w).real() - F.laplace(CVector::Zero(w.size())).real();
    }
    return F.integrate_real([&](const Vector& x) {
      return std::expm1(u.dot(x)) - u.dot(truncate(trunc, x));
    });
  }
  if (F.kind() == JumpMeasure::Kind::FiniteActivityDensity && how == JumpIntegration::Auto &&
      F.has_laplace_hook() && trunc == Truncation::Zero) {
    return F.laplace(w) - F.laplace(CVector::Zero(w.size()));
  }
  return F.integrate([&](const Vector& x) {
    return std::exp(pair(w, x)) - 1.0 - pair(w, truncate(trunc, x));
  });
}

}  // namespace

void check_covariance(const Matrix& c, const std::string& what) {
  if (c.rows() != c.cols()) throw DimensionMismatch(what + " must be square");
  const double scale = std::max(1.0, c.cwiseAbs().maxCoeff());
  if ((c - c.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw InvalidArgument(what + " must be symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> eig(c, Eigen::EigenvaluesOnly);
  if (eig.eigenvalues().minCoeff() < -kPsdTolerance) {
    throw InvalidArgument(what + " must be positive semidefinite");
  }
}

LevyTriplet::LevyTriplet(Vector drift, Matrix cov, JumpMeasure jumps, Truncation trunc,
                         std::string origin)
    : drift_(std::move(drift)),
      cov_(std::move(cov)),
      jumps_(std::move(jumps)),
      trunc_(trunc),
      origin_(std::move(origin)) {
  const int d = dim();
  if (d < 1) throw InvalidArgument("triplet dimension must be positive");
  if (cov_.rows() != d || cov_.cols() != d) throw DimensionMismatch("triplet covariance");
  if (jumps_.dim() != d) throw DimensionMismatch("triplet jump measure dimension");
  check_covariance(cov_, "triplet covariance");
  if (trunc_ == Truncation::Zero && !jumps_.is_finite_activity()) {
    throw InvalidArgument("zero truncation requires a finite-activity jump measure");
  }
}

LevyTriplet LevyTriplet::with_drift(Vector drift) const {
  return LevyTriplet(std::move(drift), cov_, jumps_, trunc_, origin_);
}

Complex cumulant(const LevyTriplet& t, const CVector& w, JumpIntegration how) {
  if (w.size() != t.dim()) throw DimensionMismatch("cumulant argument dimension");
  if ((w.array() == Complex(0.0, 0.0)).all()) return 0.0;
  if (!exp_moment_contains(t, w.real())) {
    throw DomainError("Re(w) outside the exponential-moment domain");
  }
  if (is_real(w)) {
    const Vector u = w.real();
    const double value =
        u.dot(t.drift()) + 0.5 * u.dot(t.cov() * u) + jump_part(t, w, how).real();
    return {value, 0.0};
  }
  return pair(w, t.drift()) + 0.5 * quad_form(w, t.cov()) + jump_part(t, w, how);
}

double cumulant(const LevyTriplet& t, const Vector& u, JumpIntegration how) {
  return cumulant(t, CVector(u.cast<Complex>()), how).real();
}

LevyTriplet linear_transform(const LevyTriplet& t, const Matrix& U) {
  if (U.cols() != t.dim()) {
    throw DimensionMismatch("linear_transform expects " + std::to_string(t.dim()) + " columns");
  }
  if (t.jumps().kind() == JumpMeasure::Kind::GHDensity) {
    throw UnsupportedMeasure("GH triplets are projected with gh_radon");
  }
  Vector drift = U * t.drift();
  JumpMeasure jumps = t.jumps().pushforward(U);
  if (t.truncation() == Truncation::Canonical &&
      t.jumps().kind() != JumpMeasure::Kind::Empty) {
    drift += jumps.truncated_mean() - U * t.jumps().truncated_mean();
  }
  Matrix cov = U * t.cov() * U.transpose();
  cov = 0.5 * (cov + cov.transpose()).eval();
  return LevyTriplet(std::move(drift), std::move(cov), std::move(jumps), t.truncation(),
                     t.origin());
}

double martingale_drift(const LevyTriplet& t, int i, JumpIntegration how) {
  if (i < 0 || i >= t.dim()) throw DimensionMismatch("coordinate index out of range");
  const Vector e = unit_vector(t.dim(), i);
  if (!exp_moment_contains(t, e)) {
    throw DomainError("exponential moment of coordinate " + std::to_string(i) + " is infinite");
  }
  const Complex jump = jump_part(t, CVector(e.cast<Complex>()), how);
  return -0.5 * t.cov()(i, i) - jump.real();
}

LevyTriplet with_martingale_drift(const LevyTriplet& t, JumpIntegration how) {
  Vector b(t.dim());
  for (int i = 0; i < t.dim(); ++i) b(i) = martingale_drift(t, i, how);
  return t.with_drift(std::move(b));
}

bool exp_moment_contains(const LevyTriplet& t, const Vector& u) {
  return t.jumps().exp_moment_contains(u);
}

LevyTriplet with_truncation(const LevyTriplet& t, Truncation target) {
  if (t.truncation() == target) return t;
  if (!t.jumps().is_finite_activity()) {
    throw UnsupportedMeasure("truncation conversion requires a finite-activity measure");
  }
  const Vector shift = t.jumps().truncated_mean();
  Vector drift = target == Truncation::Zero ? Vector(t.drift() - shift)
                                            : Vector(t.drift() + shift);
  return LevyTriplet(std::move(drift), t.cov(), t.jumps(), target, t.origin());
}

}  // namespace levydual
