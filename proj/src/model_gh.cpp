#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "levydual/errors.hpp"
#include "levydual/models.hpp"
#include "levydual/quadrature.hpp"

namespace levydual {

namespace {

// alpha^2 - (beta+u)' Delta (beta+u), the GH moment quantity.
double moment_gap(const GHParams& p, const Vector& u) {
  const Vector b = p.beta + u;
  return p.alpha * p.alpha - b.dot(p.Delta * b);
}

bool moment_ok(const GHParams& p, const Vector& u) {
  const double q = moment_gap(p, u);
  return p.subclass == GHSubclass::VG ? q > 0.0 : q >= 0.0;
}

void check_direction(const GHParams& p, const Vector& u) {
  if (u.size() != 2) throw DimensionMismatch("GH direction must have length 2");
  if (!(u.dot(p.Delta * u) > 0.0)) throw DegenerateDirection("u' Delta u must be positive");
}

}  // namespace

GH1DParams gh_radon(const GHParams& p, const Vector& u) {
  p.validate();
  check_direction(p, u);
  const double q = u.dot(p.Delta * u);
  const double bu = u.dot(p.Delta * p.beta) / q;
  GH1DParams r;
  r.lambda = p.lambda;
  r.alpha = std::sqrt(std::max(0.0, p.gamma_squared() / q + bu * bu));
  r.beta = bu;
  r.delta = p.delta * std::sqrt(q);
  r.mu = u.dot(p.mu);
  return r;
}

GH1DParams gh_swap_dual(const GHParams& p) {
  p.validate();
  if (!moment_ok(p, Vector{{1.0, 0.0}})) {
    throw DomainError("gh_swap_dual: (beta1 + 1, beta2) leaves the moment cone");
  }
  const double a = p.alpha, b1 = p.beta(0) + 1.0, b2 = p.beta(1), d = p.delta;
  const double d11 = p.Delta(0, 0), d12 = p.Delta(0, 1), d22 = p.Delta(1, 1);
  const double q = d11 + d22 - 2.0 * d12;
  if (!(q > 0.0)) throw DegenerateDirection("delta11 + delta22 - 2 delta12 must be positive");
  GH1DParams r;
  r.lambda = p.lambda;
  r.beta = (b2 * d22 - b1 * d11 - d12 * (b2 - b1)) / q;
  r.alpha = std::sqrt(std::max(
      0.0, (a * a - b1 * b1 * d11 - b2 * b2 * d22 - 2.0 * b1 * b2 * d12) / q + r.beta * r.beta));
  r.delta = d * std::sqrt(q);
  r.mu = p.mu(1) - p.mu(0);
  return r;
}

double GHQuantoDual::drift_value() const {
  if (!drift) throw UnavailableDrift("GeneralGH quanto dual has no closed-form drift");
  return *drift;
}

GHQuantoDual gh_quanto_dual(const GHParams& p) {
  p.validate();
  if (!moment_ok(p, Vector{{1.0, 0.0}})) {
    throw DomainError("gh_quanto_dual: (beta1 + 1, beta2) leaves the moment cone");
  }
  const double a = p.alpha, b1 = p.beta(0) + 1.0, b2 = p.beta(1), d = p.delta;
  const double d11 = p.Delta(0, 0), d12 = p.Delta(0, 1), d22 = p.Delta(1, 1);
  GHQuantoDual r;
  r.params.lambda = p.lambda;
  r.params.alpha = std::sqrt(std::max(0.0, (a * a - b1 * b1 * (d11 - d12 * d12 / d22)) / d22));
  r.params.beta = b2 + b1 * d12 / d22;
  r.params.delta = d * std::sqrt(d22);
  r.params.mu = p.mu(1);
  if (p.subclass != GHSubclass::GeneralGH) {
    r.drift = GHModel(p).cumulant_gradient(Vector{{1.0, 0.0}})(1);
  }
  return r;
}

Complex gh1d_cumulant(const GH1DParams& q, GHSubclass subclass, Complex z) {
  if (z == 0.0) return 0.0;
  if (!gh1d_admissible(q, subclass, z.real())) {
    throw DomainError("GH1D cumulant: Re z = " + std::to_string(z.real()) +
                      " outside the admissible strip");
  }
  const double a2 = q.alpha * q.alpha;
  const double g2 = a2 - q.beta * q.beta;
  const Complex gz2 = a2 - (q.beta + z) * (q.beta + z);
  switch (subclass) {
    case GHSubclass::NIG:
      return z * q.mu + q.delta * (std::sqrt(g2) - std::sqrt(gz2));
    case GHSubclass::VG:
      return z * q.mu - q.lambda * (std::log(gz2) - std::log(g2));
    case GHSubclass::GeneralGH:
      break;
  }
  throw UnsupportedModel("GeneralGH cumulant needs Bessel functions of complex argument");
}

bool gh1d_admissible(const GH1DParams& q, GHSubclass subclass, double re_z) {
  const double s = std::abs(q.beta + re_z);
  return subclass == GHSubclass::VG ? s < q.alpha : s <= q.alpha;
}

double gh_levy_density(const GHParams& p, const Vector& x) {
  const double r = std::sqrt(x.dot(p.Delta.inverse() * x));
  if (!(r > 0.0)) throw InvalidArgument("GH Levy density is not defined at the origin");
  const double ar = p.alpha * r;
  const double tilt = std::exp(p.beta.dot(x));
  switch (p.subclass) {
    case GHSubclass::NIG: {
      // K_{3/2}(z) = sqrt(pi / (2z)) e^{-z} (1 + 1/z)
      const double k = std::sqrt(std::numbers::pi / (2.0 * ar)) * std::exp(-ar) * (1.0 + 1.0 / ar);
      return 2.0 * p.delta * std::pow(p.alpha / (2.0 * std::numbers::pi), 1.5) * tilt * k /
             std::pow(r, 1.5);
    }
    case GHSubclass::VG:
      return p.lambda * p.alpha * tilt * std::cyl_bessel_k(1.0, ar) / (std::numbers::pi * r);
    case GHSubclass::GeneralGH:
      break;
  }
  throw UnsupportedModel("GeneralGH Levy density is not implemented");
}

GHModel::GHModel(GHParams p, std::optional<Vector> spot)
    : Model(make_log_spot(spot, 2)), params_(std::move(p)) {
  params_.validate();
  delta_root_ = psd_root(params_.Delta);
  offset_ = Vector::Zero(2);
  if (params_.subclass != GHSubclass::GeneralGH) {
    for (int i = 0; i < 2; ++i) {
      if (!moment_ok(params_, unit_vector(2, i))) {
        throw DomainError("GH model: e_" + std::to_string(i + 1) +
                          " outside the exponential-moment domain, no martingale drift exists");
      }
      offset_(i) = -raw_cumulant(unit_vector(2, i).cast<Complex>()).real();
    }
  }
}

void GHModel::require_closed_form(const char* what) const {
  if (params_.subclass == GHSubclass::GeneralGH) {
    throw UnsupportedModel(std::string("GeneralGH ") + what +
                           " is not available; only NIG and VG have closed forms here");
  }
}

const Vector& GHModel::drift_offset() const {
  require_closed_form("drift calibration");
  return offset_;
}

bool GHModel::exp_moment_contains(const Vector& u) const {
  if (u.size() != 2) throw DimensionMismatch("GH moment test needs a 2-vector");
  return moment_ok(params_, u);
}

Complex GHModel::raw_cumulant(const CVector& w) const {
  require_closed_form("cumulant");
  check_dim(w);
  if (w.isZero(0.0)) return 0.0;
  const Vector re = w.real();
  if (!moment_ok(params_, re)) {
    throw DomainError("GH cumulant: Re w = (" + std::to_string(re(0)) + ", " +
                      std::to_string(re(1)) + ") outside the exponential-moment domain");
  }
  const double g2 = params_.gamma_squared();
  const CVector bw = params_.beta.cast<Complex>() + w;
  const Complex gw2 = params_.alpha * params_.alpha - quad_form(bw, params_.Delta);
  const Complex lin = pair(w, params_.mu);
  if (params_.subclass == GHSubclass::NIG) {
    return lin + params_.delta * (std::sqrt(g2) - std::sqrt(gw2));
  }
  return lin - params_.lambda * (std::log(gw2) - std::log(g2));
}

Complex GHModel::cumulant(const CVector& w) const {
  const Complex raw = raw_cumulant(w);
  if (w.isZero(0.0)) return 0.0;
  return raw + pair(w, offset_);
}

Vector GHModel::cumulant_gradient(const Vector& w) const {
  require_closed_form("cumulant gradient");
  if (!(moment_gap(params_, w) > 0.0)) {
    throw DomainError("GH cumulant gradient needs w strictly inside the moment domain");
  }
  const Vector bw = params_.beta + w;
  const double gw2 = moment_gap(params_, w);
  const Vector tilt = params_.Delta * bw;
  const Vector base = params_.mu + offset_;
  if (params_.subclass == GHSubclass::NIG) return base + params_.delta * tilt / std::sqrt(gw2);
  return base + 2.0 * params_.lambda * tilt / gw2;
}

Vector GHModel::mean_rate() const { return cumulant_gradient(Vector::Zero(2)); }

LevyTriplet GHModel::triplet() const {
  require_closed_form("triplet");
  // Canonical drift b = E[H_1] - int_{|x|>1} x F(dx), integrated in polar
  // coordinates out to where the density has decayed below double precision.
  const Matrix inv = params_.Delta.inverse();
  double rate = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 720; ++k) {
    const double phi = 2.0 * std::numbers::pi * k / 720.0;
    const Vector e{{std::cos(phi), std::sin(phi)}};
    rate = std::min(rate, params_.alpha * std::sqrt(e.dot(inv * e)) - params_.beta.dot(e));
  }
  const double R = 1.0 + 45.0 / std::max(rate, 1e-3);
  QuadratureOptions opts;
  opts.abs_tol = 1e-10;
  opts.max_intervals = 20000;
  Vector big(2);
  for (int i = 0; i < 2; ++i) {
    auto g = [&](const Vector& y) -> Complex {
      const double r = y(0), phi = y(1);
      const Vector x{{r * std::cos(phi), r * std::sin(phi)}};
      return x(i) * gh_levy_density(params_, x) * r;
    };
    big(i) = integrate_box(g, Vector{{1.0, 0.0}}, Vector{{R, 2.0 * std::numbers::pi}}, opts).real();
  }
  return LevyTriplet(mean_rate() - big, Matrix::Zero(2, 2),
                     JumpMeasure::generalized_hyperbolic(params_), Truncation::Canonical, name());
}

void GHModel::sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                                bool antithetic) const {
  require_closed_form("sampler");
  if (antithetic && out.rows() % 2 != 0) throw InvalidArgument("antithetic sampling needs pairs");
  std::normal_distribution<double> normal;
  const double gamma = std::sqrt(params_.gamma_squared());
  const bool nig = params_.subclass == GHSubclass::NIG;
  const double ig_mean = nig ? params_.delta * T / gamma : 0.0;
  const double ig_shape = nig ? params_.delta * params_.delta * T * T : 0.0;
  std::gamma_distribution<double> gamma_law(nig ? 1.0 : params_.lambda * T,
                                            nig ? 1.0 : 2.0 / params_.gamma_squared());
  const Vector drift = T * (params_.mu + offset_);
  const Vector skew = params_.Delta * params_.beta;
  Vector z(2);
  double w = 0.0;
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    if (antithetic && r % 2 == 1) {
      z = -z;
    } else {
      w = nig ? sample_inverse_gaussian(rng, ig_mean, ig_shape) : gamma_law(rng);
      w = std::max(w, std::numeric_limits<double>::min());
      z(0) = normal(rng);
      z(1) = normal(rng);
    }
    out.row(r) = (drift + w * skew + std::sqrt(w) * (delta_root_ * z)).transpose();
  }
}

}  // namespace levydual
