#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levydual/gh_params.hpp"
#include "levydual/quadrature.hpp"
#include "levydual/types.hpp"

namespace levydual {

/// Truncation convention h attached to a triplet.
/// Canonical: h(x) = x 1{|x| <= 1}. Zero: h(x) = 0, finite-activity measures only.
enum class Truncation { Canonical, Zero };

std::string to_string(Truncation t);

/// Evaluates h(x). Both conventions satisfy h(-x) = -h(x).
Vector truncate(Truncation t, const Vector& x);

/// Points closer to the origin than this are treated as the origin.
inline constexpr double kOriginTolerance = 1e-14;

/// Choice between analytic hooks and generic quadrature for jump integrals.
enum class JumpIntegration { Auto, Quadrature };

/// Quadrature settings used for jump integrals against densities.
QuadratureOptions measure_quadrature();

struct Atom {
  Vector point;
  double weight = 0.0;
};

/// Normalized Gaussian jump law N(mean, cov).
struct GaussianLaw {
  Vector mean;
  Matrix cov;
};

/// Closed-form information attached to a jump density, in the density's own
/// coordinates. Missing hooks fall back to quadrature.
struct DensityHooks {
  /// w -> int e^{<w,x>} F(dx), including the total intensity.
  std::function<Complex(const CVector&)> laplace;
  /// u -> whether int_{|x|>1} e^{<u,x>} F(dx) is finite. Absent means always.
  std::function<bool(const Vector&)> exp_moment_domain;
  /// Set when the normalized jump law is Gaussian.
  std::optional<GaussianLaw> gaussian;
};

/// Moment summary of a one-dimensional finite jump measure.
struct JumpSummary {
  double mass = 0.0;
  double mean = 0.0;
  double variance = 0.0;
};

/// The Levy kernel F of a triplet.
///
/// Densities are stored lazily as a base density on R^k together with a
/// linear map M (n x k) and an exponential tilt theta (length k):
///   F(E) = int 1_E(M x) e^{<theta, x>} p(x) dx * intensity,
/// restricted to E in B(R^n \ {0}). Pushforwards and Esscher tilts compose
/// on (M, theta), so the measure is never discretized. Atoms are transformed
/// eagerly and exactly.
class JumpMeasure {
 public:
  enum class Kind { Empty, FiniteAtoms, FiniteActivityDensity, GHDensity };

  static JumpMeasure empty(int dim);
  static JumpMeasure atoms(int dim, std::vector<Atom> atoms);
  /// intensity * p(x) dx, with p a probability density supported (for
  /// quadrature purposes) on the box [lo, hi].
  static JumpMeasure density(double intensity, std::function<double(const Vector&)> p,
                             Vector lo, Vector hi, DensityHooks hooks = {});
  /// intensity * N(mean, cov); hooks are installed and the quadrature box is
  /// mean +/- 10 max standard deviations.
  static JumpMeasure gaussian(double intensity, Vector mean, Matrix cov);
  static JumpMeasure generalized_hyperbolic(GHParams params);

  int dim() const { return dim_; }
  Kind kind() const { return kind_; }
  bool is_finite_activity() const { return kind_ != Kind::GHDensity; }
  std::string kind_name() const;

  /// Atoms after all transformations (FiniteAtoms only).
  const std::vector<Atom>& atom_list() const;
  /// GH parameters (GHDensity only).
  const GHParams& gh_params() const;
  /// The Gaussian law of the normalized measure, when available analytically.
  std::optional<GaussianLaw> gaussian_law() const;
  bool has_laplace_hook() const;

  /// F'(E) = int 1_E(U y) e^{<tilt, y>} F(dy); mass landing at the origin is
  /// discarded.
  JumpMeasure transformed(const Matrix& U, const Vector& tilt) const;
  JumpMeasure pushforward(const Matrix& U) const;
  JumpMeasure tilted(const Vector& tilt) const;

  /// int g(y) F(dy) over y != 0. Atoms are summed exactly, densities are
  /// integrated by quadrature.
  Complex integrate(const std::function<Complex(const Vector&)>& g,
                    const QuadratureOptions& opts = measure_quadrature()) const;
  /// Real-valued variant of integrate.
  double integrate_real(const std::function<double(const Vector&)>& g,
                        const QuadratureOptions& opts = measure_quadrature()) const;

  /// int e^{<w,y>} F(dy). Requires Re(w) in the exponential-moment domain.
  Complex laplace(const CVector& w, JumpIntegration how = JumpIntegration::Auto) const;

  double total_mass(JumpIntegration how = JumpIntegration::Auto) const;

  /// Whether int_{|y|>1} e^{<u,y>} F(dy) < infinity.
  bool exp_moment_contains(const Vector& u) const;

  /// int h(y) F(dy) under the canonical truncation h(y) = y 1{|y| <= 1}.
  Vector truncated_mean() const;
  /// int_{|y|>1} |y| F(dy).
  double big_jump_first_moment() const;

  /// Mass, mean and variance of a one-dimensional finite measure.
  JumpSummary summary_1d(JumpIntegration how = JumpIntegration::Auto) const;

 private:
  struct Base {
    int dim = 0;
    double intensity = 0.0;
    std::function<double(const Vector&)> p;
    Vector lo, hi;
    DensityHooks hooks;
  };

  JumpMeasure() = default;

  Kind kind_ = Kind::Empty;
  int dim_ = 0;
  std::vector<Atom> atoms_;
  std::shared_ptr<const Base> base_;
  Matrix map_;
  Vector tilt_;
  std::shared_ptr<const GHParams> gh_;
};

}  // namespace levydual
