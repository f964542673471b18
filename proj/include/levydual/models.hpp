#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "levydual/characteristics.hpp"
#include "levydual/esscher.hpp"
#include "levydual/gh_params.hpp"
#include "levydual/rng.hpp"
#include "levydual/types.hpp"

namespace levydual {

/// Black-Scholes volatilities and correlation matrix in any dimension.
struct BlackScholesParams {
  Vector sigma;
  Matrix rho;
  void validate() const;
  Matrix covariance() const;
};

struct BS2DParams {
  double sigma1 = 0.2;
  double sigma2 = 0.2;
  double rho = 0.0;
  BlackScholesParams general() const;
};

/// Merton jump-diffusion with the product jump density: simultaneous jumps
/// at rate prod(lambda) with law N(0, diag(tau) R_J diag(tau)). R_J is the
/// identity unless jump_corr is set.
struct MertonParams {
  Vector sigma;
  Matrix rho;
  Vector lambda;
  Vector tau;
  std::optional<Matrix> jump_corr;
  int dim() const { return static_cast<int>(sigma.size()); }
  void validate() const;
  Matrix covariance() const;
  Matrix jump_covariance() const;
  double jump_intensity() const;
};

/// A concrete exponential Levy model S^i = exp(log_spot_i + H^i) with H_0 = 0.
class Model {
 public:
  virtual ~Model() = default;
  virtual std::string name() const = 0;
  virtual int dim() const = 0;
  virtual LevyTriplet triplet() const = 0;
  /// Joint cumulant of H_1, requiring Re(w) in the exponential-moment domain.
  virtual Complex cumulant(const CVector& w) const = 0;
  double cumulant(const Vector& u) const;
  virtual bool exp_moment_contains(const Vector& u) const = 0;
  /// True when H has no jumps, so that every projection is Gaussian.
  virtual bool is_gaussian() const { return false; }
  virtual bool supports_sampling() const { return true; }
  /// Fills each row of `out` with an independent draw of H_T. With
  /// `antithetic`, rows 2k and 2k+1 share their non-Gaussian draws and have
  /// opposite Gaussian noise; the row count must then be even.
  virtual void sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                                 bool antithetic) const = 0;

  const Vector& log_spot() const { return log_spot_; }
  Vector spot() const { return log_spot_.array().exp(); }

 protected:
  explicit Model(Vector log_spot) : log_spot_(std::move(log_spot)) {}
  void check_dim(const CVector& w) const;
  /// log of the spot vector, or zeros when absent.
  static Vector make_log_spot(const std::optional<Vector>& spot, int dim);

 private:
  Vector log_spot_;
};

using ModelPtr = std::shared_ptr<const Model>;

class BlackScholesModel final : public Model {
 public:
  explicit BlackScholesModel(BlackScholesParams p, std::optional<Vector> spot = std::nullopt);
  explicit BlackScholesModel(const BS2DParams& p, std::optional<Vector> spot = std::nullopt);
  std::string name() const override { return "bs" + std::to_string(dim()) + "d"; }
  int dim() const override { return static_cast<int>(params_.sigma.size()); }
  LevyTriplet triplet() const override;
  using Model::cumulant;
  Complex cumulant(const CVector& w) const override;
  bool exp_moment_contains(const Vector&) const override { return true; }
  bool is_gaussian() const override { return true; }
  void sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                         bool antithetic) const override;
  const BlackScholesParams& params() const { return params_; }

 private:
  BlackScholesParams params_;
  Vector drift_;
  Matrix cov_;
  Matrix root_;
};

class MertonModel final : public Model {
 public:
  explicit MertonModel(MertonParams p, std::optional<Vector> spot = std::nullopt);
  std::string name() const override { return "merton" + std::to_string(dim()) + "d"; }
  int dim() const override { return params_.dim(); }
  LevyTriplet triplet() const override { return triplet_; }
  using Model::cumulant;
  Complex cumulant(const CVector& w) const override;
  bool exp_moment_contains(const Vector&) const override { return true; }
  bool is_gaussian() const override { return intensity_ == 0.0; }
  void sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                         bool antithetic) const override;
  const MertonParams& params() const { return params_; }

 private:
  MertonParams params_;
  LevyTriplet triplet_;
  double intensity_;
  Matrix cov_, jump_cov_;
  Matrix root_, jump_root_;
};

/// Bivariate NIG or VG model with the drift offset chosen so that every
/// exp(H^i) is a martingale. GeneralGH parameters are accepted for the
/// parameter maps but refuse cumulants, triplets and sampling.
class GHModel final : public Model {
 public:
  explicit GHModel(GHParams p, std::optional<Vector> spot = std::nullopt);
  std::string name() const override { return "gh2d-" + to_string(params_.subclass); }
  int dim() const override { return 2; }
  LevyTriplet triplet() const override;
  using Model::cumulant;
  Complex cumulant(const CVector& w) const override;
  bool exp_moment_contains(const Vector& u) const override;
  bool supports_sampling() const override { return params_.subclass != GHSubclass::GeneralGH; }
  void sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                         bool antithetic) const override;
  const GHParams& params() const { return params_; }
  /// Drift added to mu so that kappa(e_i) = 0.
  const Vector& drift_offset() const;
  /// Cumulant without the drift offset.
  Complex raw_cumulant(const CVector& w) const;
  /// Mean rate E[H_1] = grad kappa(0).
  Vector mean_rate() const;
  /// grad kappa(w) at a real point.
  Vector cumulant_gradient(const Vector& w) const;

 private:
  void require_closed_form(const char* what) const;
  GHParams params_;
  Vector offset_;
  Matrix delta_root_;
};

/// Model backed directly by a finite-activity triplet: diffusion plus a
/// compound Poisson part with atoms or a Gaussian jump law. The drift is used
/// as given, so uncalibrated triplets are allowed.
class TripletModel final : public Model {
 public:
  explicit TripletModel(LevyTriplet t, std::optional<Vector> spot = std::nullopt);
  std::string name() const override { return "triplet-" + triplet_.origin(); }
  int dim() const override { return triplet_.dim(); }
  LevyTriplet triplet() const override { return triplet_; }
  using Model::cumulant;
  Complex cumulant(const CVector& w) const override;
  bool exp_moment_contains(const Vector& u) const override;
  bool is_gaussian() const override;
  bool supports_sampling() const override;
  void sample_increments(double T, Rng& rng, Eigen::Ref<RowMatrix> out,
                         bool antithetic) const override;

 private:
  LevyTriplet triplet_;
  Vector effective_drift_;
  Matrix root_;
  double mass_ = 0.0;
  std::vector<Atom> atoms_;
  std::optional<GaussianLaw> law_;
  Matrix law_root_;
};

/// Symmetric square root factor A with A A' = c for a PSD matrix c.
Matrix psd_root(const Matrix& c);

LevyTriplet bs_triplet(const BS2DParams& p);
LevyTriplet bs_triplet(const BlackScholesParams& p);
LevyTriplet merton_triplet(const MertonParams& p);

/// Closed-form characteristics of H^2 under P_theta with theta = (1,0).
DualTriplet1D merton_quanto_dual(const MertonParams& p);

/// Law of u'H for H ~ GH_2.
GH1DParams gh_radon(const GHParams& p, const Vector& u);
/// Law of H^2 - H^1 under P_theta, theta = (1,0).
GH1DParams gh_swap_dual(const GHParams& p);

struct GHQuantoDual {
  GH1DParams params;
  /// Mean rate of H^2 under P_theta; absent for GeneralGH.
  std::optional<double> drift;
  /// Throws UnavailableDrift when drift is absent.
  double drift_value() const;
};

/// Law of H^2 under P_theta, theta = (1,0), using the martingale-calibrated offset.
GHQuantoDual gh_quanto_dual(const GHParams& p);

/// Cumulant of a one-dimensional NIG or VG law with parameters q (per unit time).
Complex gh1d_cumulant(const GH1DParams& q, GHSubclass subclass, Complex z);
/// Whether z is admissible for gh1d_cumulant.
bool gh1d_admissible(const GH1DParams& q, GHSubclass subclass, double re_z);

/// Levy density of a bivariate NIG or VG law at x != 0.
double gh_levy_density(const GHParams& p, const Vector& x);

Complex joint_cumulant(const Model& m, const CVector& w);

/// n independent rows of log S_T. Deterministic in (model, T, n, seed) for any
/// worker count; workers = 0 picks the hardware concurrency.
RowMatrix sample_terminal(const Model& m, double T, std::int64_t n, std::uint64_t seed,
                          int workers = 0);

}  // namespace levydual
