#pragma once

#include <functional>
#include <optional>
#include <string>

#include "levydual/esscher.hpp"
#include "levydual/types.hpp"

namespace levydual {

enum class PricingMethod { ClosedForm, Fourier, MonteCarlo };
std::string to_string(PricingMethod m);

struct PriceResult {
  double value = 0.0;
  PricingMethod method = PricingMethod::Fourier;
  /// Monte Carlo standard error; set iff method is MonteCarlo.
  std::optional<double> std_error;
  std::optional<EsscherFrame> frame;
  /// 95% normal confidence interval, Monte Carlo only.
  std::optional<std::pair<double, double>> confidence_interval() const;
};

enum class VanillaKind { Call, Put, Digital };
std::string to_string(VanillaKind k);

/// Cumulant z -> kappa(z) of a one-dimensional process per unit time,
/// with the admissible real parts of z.
struct Cumulant1D {
  std::function<Complex(Complex)> kappa;
  std::function<bool(double)> admissible;
};

struct FourierOptions {
  double damping = 0.75;
  double abs_tol = 1e-10;
  /// The integration range grows until the integrand stays below this.
  double envelope_tol = 1e-14;
  double initial_radius = 50.0;
  double max_radius = 1e5;
  int max_intervals = 4000;
};

/// Call, put or digital on S_T = F exp(X_T - T kappa(1)), where X has
/// cumulant c.kappa and F is the forward. Calls and puts use damped Fourier
/// inversion on the out-of-the-money side and parity for the other side;
/// digitals return P(S_T > K) by Gil-Pelaez inversion.
PriceResult vanilla_fourier(const Cumulant1D& c, double forward, double K, double T,
                            VanillaKind kind, const FourierOptions& opts = {});

/// Black formula with zero rates. vol = 0 gives the intrinsic value.
PriceResult bs_closed_form(double vol, double forward, double K, double T, VanillaKind kind);

}  // namespace levydual
