#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "levydual/models.hpp"
#include "levydual/pricing.hpp"

namespace levydual {

struct McEstimate {
  double mean = 0.0;
  /// Sample standard deviation of the independent units over sqrt(units).
  double std_error = 0.0;
  /// Number of simulated paths.
  std::int64_t n = 0;
  std::uint64_t seed = 0;
};

struct McOptions {
  /// 0 uses the hardware concurrency.
  int workers = 0;
  /// Pairs paths with opposite Gaussian noise; the standard error is then
  /// computed from the pair averages.
  bool antithetic = true;
};

/// |value - target| / std_error, with 0/0 read as 0 and x/0 as infinity.
double z_score(double value, double target, double std_error);

/// Mean of g(H_T) over n paths, where H_T excludes the initial log prices.
McEstimate mc_expectation(const Model& m, double T, std::int64_t n, std::uint64_t seed,
                          const std::function<double(const Vector&)>& g,
                          const McOptions& opts = {});

McEstimate mc_price(const Model& m, const Payoff& p, double T, std::int64_t n,
                    std::uint64_t seed, const McOptions& opts = {});

/// Estimates E[exp(H^i_T)], which is 1 for a calibrated coordinate.
McEstimate verify_martingale(const Model& m, int i, double T, std::int64_t n, std::uint64_t seed,
                             const McOptions& opts = {});

/// Estimates E[exp(theta' H_T - T kappa(theta))], which is 1.
McEstimate verify_density(const Model& m, const Vector& theta, double T, std::int64_t n,
                          std::uint64_t seed, const McOptions& opts = {});

struct DualityOptions {
  PricingOptions pricing;
  McOptions mc;
  SwapRoute route = SwapRoute::Put;
  /// Prices the dual side on the model with every correlation sign flipped.
  bool negative_control = false;
  double threshold = 3.0;
};

struct DualityReport {
  std::string label;
  Payoff payoff;
  double maturity = 0.0;
  double dual_value = 0.0;
  PricingMethod dual_method = PricingMethod::Fourier;
  McEstimate mc;
  double z = 0.0;
  bool pass = false;
  bool negative_control = false;
  Vector theta;
  Vector u;
};

/// Prices the payoff through its dual reduction and by direct simulation and
/// compares the two.
DualityReport verify_duality_report(const Model& m, const Payoff& p, double T, std::int64_t n,
                                    std::uint64_t seed, const DualityOptions& opts = {});

/// Copy of a Black-Scholes or Merton model with the off-diagonal diffusion
/// correlations negated.
ModelPtr flip_correlation(const Model& m);

}  // namespace levydual
