#pragma once

#include <optional>
#include <string>

#include "levydual/esscher.hpp"
#include "levydual/fourier.hpp"
#include "levydual/models.hpp"

namespace levydual {

enum class PayoffKind {
  Call,
  Put,
  Digital,
  Swap,
  QuantoCall,
  QuantoPut,
  CorrelationDigital,
  QuantoSwap
};
std::string to_string(PayoffKind k);
/// Parses the names produced by to_string; throws InvalidArgument otherwise.
PayoffKind parse_payoff_kind(const std::string& s);

/// Payoff on the terminal prices. Call, Put and Digital refer to the first asset;
/// the two-asset payoffs use S^1 as the payment asset and S^2 as the measured one.
struct Payoff {
  PayoffKind kind = PayoffKind::Swap;
  double strike = 0.0;
  bool has_strike() const;
  /// Number of assets the payoff reads.
  int required_dim() const;
  void validate() const;
  /// Payoff value at terminal log prices x.
  double evaluate(const Vector& log_prices) const;
  static Payoff call(double K) { return {PayoffKind::Call, K}; }
  static Payoff put(double K) { return {PayoffKind::Put, K}; }
  static Payoff digital(double K) { return {PayoffKind::Digital, K}; }
  static Payoff swap() { return {PayoffKind::Swap, 0.0}; }
  static Payoff quanto_call(double K) { return {PayoffKind::QuantoCall, K}; }
  static Payoff quanto_put(double K) { return {PayoffKind::QuantoPut, K}; }
  static Payoff correlation_digital(double K) { return {PayoffKind::CorrelationDigital, K}; }
  static Payoff quanto_swap() { return {PayoffKind::QuantoSwap, 0.0}; }
};

enum class MethodChoice { Auto, Fourier, ClosedForm };

struct PricingOptions {
  MethodChoice method = MethodChoice::Auto;
  FourierOptions fourier;
};

enum class SwapRoute { Put, Call };

/// A multi-asset payoff rewritten as prefactor * E_theta[g(S^u_T)] for a
/// vanilla g on the dual asset S^u = exp(u' log S).
struct DualReduction {
  EsscherFrame frame;
  VanillaKind vanilla;
  double strike;
  /// exp(theta' log S_0 + T kappa(theta)).
  double prefactor;
  /// exp(u' log S_0).
  double dual_spot;
  /// E_theta[S^u_T] = dual_spot * exp(T kappa^u(1)).
  double dual_forward;
  Cumulant1D cumulant;
};

/// The Esscher frame a payoff reduces to on a dim-asset model.
EsscherFrame payoff_frame(const Payoff& p, int dim, double T, SwapRoute route = SwapRoute::Put);

/// GH_1 parameters of H^u under P_theta, before the drift offset: the closed
/// maps for the swap and quanto frames, tilt followed by projection otherwise.
GH1DParams gh_dual_params(const GHParams& p, const EsscherFrame& f);

/// Cumulant of H^u under P_theta. GH models use the closed parameter maps,
/// every other backend evaluates kappa(theta + z u) - kappa(theta).
Cumulant1D dual_cumulant_1d(const Model& m, const EsscherFrame& f);

/// The frame and vanilla problem a payoff reduces to.
DualReduction reduce(const Model& m, const Payoff& p, double T,
                     SwapRoute route = SwapRoute::Put);

/// Prices a reduction: the closed form when the model is Gaussian (or when
/// forced), the Fourier engine otherwise.
PriceResult price_reduction(const Model& m, const DualReduction& r,
                            const PricingOptions& opts = {});

PriceResult price(const Model& m, const Payoff& p, double T, const PricingOptions& opts = {});

PriceResult price_swap(const Model& m, double T, SwapRoute route = SwapRoute::Put,
                       const PricingOptions& opts = {});
PriceResult price_quanto_call(const Model& m, double K, double T, const PricingOptions& opts = {});
PriceResult price_quanto_put(const Model& m, double K, double T, const PricingOptions& opts = {});
PriceResult price_correlation_digital(const Model& m, double K, double T,
                                      const PricingOptions& opts = {});
PriceResult price_quanto_swap(const Model& m, double T, const PricingOptions& opts = {});

}  // namespace levydual
