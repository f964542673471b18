#include "levydual/jump_measure.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "levydual/errors.hpp"

namespace levydual {

std::string to_string(Truncation t) { return t == Truncation::Canonical ? "canonical" : "zero"; }

Vector truncate(Truncation t, const Vector& x) {
  if (t == Truncation::Zero || x.norm() > 1.0) return Vector::Zero(x.size());
  return x;
}

namespace {

// Integrates f over R^d (d = 2, 3) in polar or spherical coordinates about the
// origin, out to radius R. Each ray is split where |M x| = 1 so that the
// truncation indicator never sits inside a panel.
Complex integrate_radial(const std::function<Complex(const Vector&)>& f, const Matrix& M,
                         double R, const QuadratureOptions& opts) {
  const int d = static_cast<int>(M.cols());
  const double pi = std::numbers::pi;
  const double solid = d == 2 ? 2.0 * pi : 2.0 * pi * pi;
  QuadratureOptions radial = opts;
  radial.abs_tol = 0.1 * opts.abs_tol / solid;
  auto ray = [&](const Vector& e) -> Complex {
    const double me = (M * e).norm();
    const double split = me > 0.0 ? std::min(1.0 / me, R) : R;
    Vector x(d);
    auto g = [&](double r) -> Complex {
      x = r * e;
      return f(x) * std::pow(r, d - 1);
    };
    Complex v = integrate_gk<Complex>(g, 0.0, split, radial).value;
    if (split < R) v += integrate_gk<Complex>(g, split, R, radial).value;
    return v;
  };
  if (d == 2) {
    auto h = [&](const Vector& a) { return ray(Vector{{std::cos(a(0)), std::sin(a(0))}}); };
    return integrate_box(h, Vector{{0.0}}, Vector{{2.0 * pi}});
  }
  auto h = [&](const Vector& a) {
    const double s = std::sin(a(0));
    return ray(Vector{{s * std::cos(a(1)), s * std::sin(a(1)), std::cos(a(0))}}) * s;
  };
  return integrate_box(h, Vector{{0.0, 0.0}}, Vector{{pi, 2.0 * pi}});
}

}  // namespace

QuadratureOptions measure_quadrature() {
  QuadratureOptions opts;
  opts.abs_tol = 1e-12;
  opts.rel_tol = 1e-14;
  opts.max_intervals = 2000;
  return opts;
}

JumpMeasure JumpMeasure::empty(int dim) {
  if (dim < 1) throw InvalidArgument("jump measure dimension must be positive");
  JumpMeasure m;
  m.kind_ = Kind::Empty;
  m.dim_ = dim;
  return m;
}

JumpMeasure JumpMeasure::atoms(int dim, std::vector<Atom> atoms) {
  if (dim < 1) throw InvalidArgument("jump measure dimension must be positive");
  for (const auto& a : atoms) {
    if (a.point.size() != dim) throw DimensionMismatch("atom point has wrong dimension");
    if (!(a.weight > 0.0)) throw InvalidArgument("atom weights must be positive");
    if (a.point.norm() < kOriginTolerance) throw InvalidArgument("atoms may not sit at the origin");
  }
  if (atoms.empty()) return empty(dim);
  JumpMeasure m;
  m.kind_ = Kind::FiniteAtoms;
  m.dim_ = dim;
  m.atoms_ = std::move(atoms);
  return m;
}

JumpMeasure JumpMeasure::density(double intensity, std::function<double(const Vector&)> p,
                                 Vector lo, Vector hi, DensityHooks hooks) {
  const int k = static_cast<int>(lo.size());
  if (k < 1 || hi.size() != k) throw DimensionMismatch("density box bounds");
  if (!(intensity >= 0.0)) throw InvalidArgument("jump intensity must be nonnegative");
  if (intensity == 0.0) return empty(k);
  auto base = std::make_shared<Base>();
  base->dim = k;
  base->intensity = intensity;
  base->p = std::move(p);
  base->lo = std::move(lo);
  base->hi = std::move(hi);
  base->hooks = std::move(hooks);
  JumpMeasure m;
  m.kind_ = Kind::FiniteActivityDensity;
  m.dim_ = k;
  m.base_ = std::move(base);
  m.map_ = Matrix::Identity(k, k);
  m.tilt_ = Vector::Zero(k);
  return m;
}

JumpMeasure JumpMeasure::gaussian(double intensity, Vector mean, Matrix cov) {
  const int k = static_cast<int>(mean.size());
  if (cov.rows() != k || cov.cols() != k) throw DimensionMismatch("gaussian jump covariance");
  Eigen::LLT<Matrix> llt(cov);
  if (llt.info() != Eigen::Success) {
    throw InvalidArgument("gaussian jump covariance must be positive definite");
  }
  const Matrix L = llt.matrixL();
  const double log_norm = -0.5 * k * std::log(2.0 * std::numbers::pi) -
                          L.diagonal().array().log().sum();
  auto p = [mean, L, log_norm](const Vector& x) {
    const Vector z = L.triangularView<Eigen::Lower>().solve(x - mean);
    return std::exp(log_norm - 0.5 * z.squaredNorm());
  };
  DensityHooks hooks;
  hooks.laplace = [intensity, mean, cov](const CVector& w) {
    return intensity * std::exp(pair(w, mean) + 0.5 * quad_form(w, cov));
  };
  hooks.gaussian = GaussianLaw{mean, cov};
  const Vector sd = cov.diagonal().cwiseSqrt();
  Vector lo = mean - 10.0 * sd;
  Vector hi = mean + 10.0 * sd;
  return density(intensity, std::move(p), std::move(lo), std::move(hi), std::move(hooks));
}

JumpMeasure JumpMeasure::generalized_hyperbolic(GHParams params) {
  params.validate();
  JumpMeasure m;
  m.kind_ = Kind::GHDensity;
  m.dim_ = 2;
  m.gh_ = std::make_shared<const GHParams>(std::move(params));
  return m;
}

std::string JumpMeasure::kind_name() const {
  switch (kind_) {
    case Kind::Empty:
      return "empty";
    case Kind::FiniteAtoms:
      return "atoms";
    case Kind::FiniteActivityDensity:
      return "density";
    case Kind::GHDensity:
      return "gh";
  }
  return "unknown";
}

const std::vector<Atom>& JumpMeasure::atom_list() const {
  if (kind_ != Kind::FiniteAtoms && kind_ != Kind::Empty) {
    throw UnsupportedMeasure("atom_list on a " + kind_name() + " measure");
  }
  return atoms_;
}

const GHParams& JumpMeasure::gh_params() const {
  if (kind_ != Kind::GHDensity) throw UnsupportedMeasure("gh_params on a " + kind_name() + " measure");
  return *gh_;
}

std::optional<GaussianLaw> JumpMeasure::gaussian_law() const {
  if (kind_ != Kind::FiniteActivityDensity || !base_->hooks.gaussian) return std::nullopt;
  const auto& g = *base_->hooks.gaussian;
  return GaussianLaw{map_ * (g.mean + g.cov * tilt_), map_ * g.cov * map_.transpose()};
}

bool JumpMeasure::has_laplace_hook() const {
  return kind_ == Kind::FiniteActivityDensity && static_cast<bool>(base_->hooks.laplace);
}

JumpMeasure JumpMeasure::transformed(const Matrix& U, const Vector& tilt) const {
  if (U.cols() != dim_ || tilt.size() != dim_) {
    throw DimensionMismatch("transform expects " + std::to_string(dim_) + " columns");
  }
  if (U.rows() < 1) throw DimensionMismatch("transform needs at least one row");
  const int n = static_cast<int>(U.rows());
  switch (kind_) {
    case Kind::Empty:
      return empty(n);
    case Kind::FiniteAtoms: {
      std::vector<Atom> out;
      out.reserve(atoms_.size());
      for (const auto& a : atoms_) {
        Vector y = U * a.point;
        if (y.norm() < kOriginTolerance) continue;
        out.push_back({std::move(y), a.weight * std::exp(tilt.dot(a.point))});
      }
      return atoms(n, std::move(out));
    }
    case Kind::FiniteActivityDensity: {
      JumpMeasure m = *this;
      m.dim_ = n;
      m.tilt_ = tilt_ + map_.transpose() * tilt;
      m.map_ = U * map_;
      return m;
    }
    case Kind::GHDensity:
      throw UnsupportedMeasure("GH jump measures transform only through closed-form parameter maps");
  }
  return *this;
}

JumpMeasure JumpMeasure::pushforward(const Matrix& U) const {
  return transformed(U, Vector::Zero(dim_));
}

JumpMeasure JumpMeasure::tilted(const Vector& tilt) const {
  return transformed(Matrix::Identity(dim_, dim_), tilt);
}

Complex JumpMeasure::integrate(const std::function<Complex(const Vector&)>& g,
                               const QuadratureOptions& opts) const {
  switch (kind_) {
    case Kind::Empty:
      return 0.0;
    case Kind::FiniteAtoms: {
      Complex sum = 0.0;
      for (const auto& a : atoms_) sum += a.weight * g(a.point);
      return sum;
    }
    case Kind::FiniteActivityDensity: {
      const Base& b = *base_;
      Vector lo = b.lo;
      Vector hi = b.hi;
      if (b.hooks.gaussian) {
        // Recentre the box on the tilted law.
        const Vector shift = b.hooks.gaussian->cov * tilt_;
        lo += shift;
        hi += shift;
      }
      auto integrand = [&](const Vector& x) -> Complex {
        const Vector y = map_ * x;
        if (y.norm() < kOriginTolerance) return 0.0;
        const double w = b.intensity * b.p(x) * std::exp(tilt_.dot(x));
        if (w == 0.0) return 0.0;
        return w * g(y);
      };
      const int k = static_cast<int>(lo.size());
      if (b.hooks.gaussian && (k == 2 || k == 3)) {
        const double R = lo.cwiseAbs().cwiseMax(hi.cwiseAbs()).norm();
        return integrate_radial(integrand, map_, R, opts);
      }
      if (k == 1) {
        // Split where |M x| = 1 and at the origin.
        const double m = map_.norm();
        std::vector<double> cuts{lo(0)};
        for (double c : {-1.0 / m, 0.0, 1.0 / m}) {
          if (std::isfinite(c) && c > cuts.back() && c < hi(0)) cuts.push_back(c);
        }
        cuts.push_back(hi(0));
        QuadratureOptions piece = opts;
        piece.abs_tol = opts.abs_tol / static_cast<double>(cuts.size() - 1);
        Complex sum = 0.0;
        Vector x(1);
        auto g = [&](double t) {
          x(0) = t;
          return integrand(x);
        };
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
          sum += integrate_gk<Complex>(g, cuts[i], cuts[i + 1], piece).value;
        }
        return sum;
      }
      return integrate_box(integrand, lo, hi, opts);
    }
    case Kind::GHDensity:
      throw UnsupportedMeasure("GH jump measures are not integrated by quadrature");
  }
  return 0.0;
}

double JumpMeasure::integrate_real(const std::function<double(const Vector&)>& g,
                                   const QuadratureOptions& opts) const {
  return integrate([&](const Vector& y) { return Complex(g(y), 0.0); }, opts).real();
}

Complex JumpMeasure::laplace(const CVector& w, JumpIntegration how) const {
  if (w.size() != dim_) throw DimensionMismatch("laplace argument dimension");
  if (!exp_moment_contains(w.real())) {
    throw DomainError("Re(w) outside the exponential-moment domain of the jump measure");
  }
  switch (kind_) {
    case Kind::Empty:
      return 0.0;
    case Kind::FiniteAtoms: {
      Complex sum = 0.0;
      for (const auto& a : atoms_) sum += a.weight * std::exp(pair(w, a.point));
      return sum;
    }
    case Kind::FiniteActivityDensity:
      if (how == JumpIntegration::Auto && base_->hooks.laplace) {
        const CVector base_w = map_.transpose().cast<Complex>() * w + tilt_.cast<Complex>();
        return base_->hooks.laplace(base_w);
      }
      return integrate([&](const Vector& y) { return std::exp(pair(w, y)); });
    case Kind::GHDensity:
      throw UnsupportedMeasure("GH Laplace transform lives at model level");
  }
  return 0.0;
}

double JumpMeasure::total_mass(JumpIntegration how) const {
  if (kind_ == Kind::GHDensity) return std::numeric_limits<double>::infinity();
  return laplace(CVector::Zero(dim_), how).real();
}

bool JumpMeasure::exp_moment_contains(const Vector& u) const {
  if (u.size() != dim_) throw DimensionMismatch("exp_moment_contains argument dimension");
  switch (kind_) {
    case Kind::Empty:
    case Kind::FiniteAtoms:
      return true;
    case Kind::FiniteActivityDensity:
      if (!base_->hooks.exp_moment_domain) return true;
      return base_->hooks.exp_moment_domain(map_.transpose() * u + tilt_);
    case Kind::GHDensity: {
      const auto& p = *gh_;
      const Vector shifted = p.beta + u;
      const double q = p.alpha * p.alpha - shifted.dot(p.Delta * shifted);
      return p.subclass == GHSubclass::VG ? q > 0.0 : q >= 0.0;
    }
  }
  return false;
}

Vector JumpMeasure::truncated_mean() const {
  if (kind_ == Kind::GHDensity) throw UnsupportedMeasure("GH measures are not integrated");
  Vector out = Vector::Zero(dim_);
  if (kind_ == Kind::Empty) return out;
  for (int k = 0; k < dim_; ++k) {
    out(k) = integrate_real([k](const Vector& y) { return y.norm() <= 1.0 ? y(k) : 0.0; });
  }
  return out;
}

double JumpMeasure::big_jump_first_moment() const {
  if (kind_ == Kind::GHDensity) {
    throw UnsupportedMeasure("big-jump moments of GH measures are not integrated");
  }
  return integrate_real([](const Vector& y) {
    const double r = y.norm();
    return r > 1.0 ? r : 0.0;
  });
}

JumpSummary JumpMeasure::summary_1d(JumpIntegration how) const {
  if (dim_ != 1) throw DimensionMismatch("summary_1d needs a one-dimensional measure");
  if (kind_ == Kind::GHDensity) throw UnsupportedMeasure("GH measures have infinite mass");
  if (kind_ == Kind::Empty) return {};
  if (how == JumpIntegration::Auto && kind_ == Kind::FiniteActivityDensity &&
      base_->hooks.gaussian) {
    const auto& g = *base_->hooks.gaussian;
    const double mass =
        base_->intensity * std::exp(tilt_.dot(g.mean) + 0.5 * tilt_.dot(g.cov * tilt_));
    const auto law = *gaussian_law();
    return {mass, law.mean(0), law.cov(0, 0)};
  }
  JumpSummary s;
  s.mass = integrate_real([](const Vector&) { return 1.0; });
  s.mean = integrate_real([](const Vector& y) { return y(0); }) / s.mass;
  const double m = s.mean;
  s.variance = integrate_real([m](const Vector& y) { return (y(0) - m) * (y(0) - m); }) / s.mass;
  return s;
}

}  // namespace levydual
