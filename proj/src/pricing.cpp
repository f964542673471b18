#include "levydual/pricing.hpp"

#include <algorithm>
#include <cmath>

#include "levydual/errors.hpp"

namespace levydual {

std::string to_string(PayoffKind k) {
  switch (k) {
    case PayoffKind::Call:
      return "call";
    case PayoffKind::Put:
      return "put";
    case PayoffKind::Digital:
      return "digital";
    case PayoffKind::Swap:
      return "swap";
    case PayoffKind::QuantoCall:
      return "quanto_call";
    case PayoffKind::QuantoPut:
      return "quanto_put";
    case PayoffKind::CorrelationDigital:
      return "correlation_digital";
    case PayoffKind::QuantoSwap:
      return "quanto_swap";
  }
  return "unknown";
}

PayoffKind parse_payoff_kind(const std::string& s) {
  for (PayoffKind k : {PayoffKind::Call, PayoffKind::Put, PayoffKind::Digital, PayoffKind::Swap,
                       PayoffKind::QuantoCall, PayoffKind::QuantoPut,
                       PayoffKind::CorrelationDigital, PayoffKind::QuantoSwap}) {
    if (to_string(k) == s) return k;
  }
  throw InvalidArgument("unknown payoff kind '" + s + "'");
}

bool Payoff::has_strike() const {
  return kind != PayoffKind::Swap && kind != PayoffKind::QuantoSwap;
}

int Payoff::required_dim() const {
  switch (kind) {
    case PayoffKind::Call:
    case PayoffKind::Put:
    case PayoffKind::Digital:
      return 1;
    case PayoffKind::QuantoSwap:
      return 3;
    default:
      return 2;
  }
}

void Payoff::validate() const {
  if (has_strike() && (!(strike > 0.0) || !std::isfinite(strike))) {
    throw InvalidArgument(to_string(kind) + " needs a positive strike");
  }
}

double Payoff::evaluate(const Vector& x) const {
  switch (kind) {
    case PayoffKind::Call:
      return std::max(std::exp(x(0)) - strike, 0.0);
    case PayoffKind::Put:
      return std::max(strike - std::exp(x(0)), 0.0);
    case PayoffKind::Digital:
      return x(0) > std::log(strike) ? 1.0 : 0.0;
    case PayoffKind::Swap:
      return std::max(std::exp(x(0)) - std::exp(x(1)), 0.0);
    case PayoffKind::QuantoCall:
      return std::exp(x(0)) * std::max(std::exp(x(1)) - strike, 0.0);
    case PayoffKind::QuantoPut:
      return std::exp(x(0)) * std::max(strike - std::exp(x(1)), 0.0);
    case PayoffKind::CorrelationDigital:
      return x(1) > std::log(strike) ? std::exp(x(0)) : 0.0;
    case PayoffKind::QuantoSwap:
      return std::exp(x(0)) * std::max(std::exp(x(1)) - std::exp(x(2)), 0.0);
  }
  return 0.0;
}

GH1DParams gh_dual_params(const GHParams& p, const EsscherFrame& f) {
  if (f.dim() != 2) throw DimensionMismatch("GH frames are two-dimensional");
  const Vector e1{{1.0, 0.0}};
  if (f.theta() == e1 && f.u() == Vector{{-1.0, 1.0}}) return gh_swap_dual(p);
  if (f.theta() == e1 && f.u() == Vector{{0.0, 1.0}}) return gh_quanto_dual(p).params;
  GHParams tilted = p;
  tilted.beta += f.theta();
  const Vector b = tilted.beta;
  const double gap = p.alpha * p.alpha - b.dot(p.Delta * b);
  if (p.subclass == GHSubclass::VG ? !(gap > 0.0) : !(gap >= 0.0)) {
    throw DomainError("theta outside the GH moment domain");
  }
  return gh_radon(tilted, f.u());
}

Cumulant1D dual_cumulant_1d(const Model& m, const EsscherFrame& f) {
  if (f.dim() != m.dim()) throw DimensionMismatch("frame and model dimensions differ");
  if (const auto* gh = dynamic_cast<const GHModel*>(&m)) {
    const double shift = f.u().dot(gh->drift_offset());
    const GH1DParams q = gh_dual_params(gh->params(), f);
    const GHSubclass sub = gh->params().subclass;
    return Cumulant1D{[q, sub, shift](Complex z) { return z * shift + gh1d_cumulant(q, sub, z); },
                      [q, sub](double re) { return gh1d_admissible(q, sub, re); }};
  }
  auto kappa = [&m](const CVector& w) { return m.cumulant(w); };
  return Cumulant1D{
      [kappa, f](Complex z) { return dual_cumulant(kappa, f, z); },
      [&m, f](double re) { return m.exp_moment_contains(f.theta() + re * f.u()); }};
}

EsscherFrame payoff_frame(const Payoff& p, int d, double T, SwapRoute route) {
  const bool vanilla = p.required_dim() == 1;
  if (vanilla ? d < 1 : d != p.required_dim()) {
    throw DimensionMismatch(to_string(p.kind) + " needs a " + std::to_string(p.required_dim()) +
                            "-asset model, got " + std::to_string(d));
  }
  Vector theta = Vector::Zero(d), u = Vector::Zero(d);
  switch (p.kind) {
    case PayoffKind::Call:
    case PayoffKind::Put:
    case PayoffKind::Digital:
      u(0) = 1.0;
      break;
    case PayoffKind::Swap:
      if (route == SwapRoute::Put) {
        theta << 1.0, 0.0;
        u << -1.0, 1.0;
      } else {
        theta << 0.0, 1.0;
        u << 1.0, -1.0;
      }
      break;
    case PayoffKind::QuantoCall:
    case PayoffKind::QuantoPut:
    case PayoffKind::CorrelationDigital:
      theta << 1.0, 0.0;
      u << 0.0, 1.0;
      break;
    case PayoffKind::QuantoSwap:
      theta << 1.0, 1.0, 0.0;
      u << 0.0, -1.0, 1.0;
      break;
  }
  return EsscherFrame(theta, u, T);
}

DualReduction reduce(const Model& m, const Payoff& p, double T, SwapRoute route) {
  p.validate();
  if (!(T > 0.0)) throw InvalidArgument("maturity must be positive");
  EsscherFrame frame = payoff_frame(p, m.dim(), T, route);
  VanillaKind kind = VanillaKind::Put;
  double strike = p.strike;
  switch (p.kind) {
    case PayoffKind::Call:
    case PayoffKind::QuantoCall:
      kind = VanillaKind::Call;
      break;
    case PayoffKind::Put:
    case PayoffKind::QuantoPut:
      kind = VanillaKind::Put;
      break;
    case PayoffKind::Digital:
    case PayoffKind::CorrelationDigital:
      kind = VanillaKind::Digital;
      break;
    case PayoffKind::Swap:
      kind = route == SwapRoute::Put ? VanillaKind::Put : VanillaKind::Call;
      strike = 1.0;
      break;
    case PayoffKind::QuantoSwap:
      kind = VanillaKind::Put;
      strike = 1.0;
      break;
  }
  const Vector& theta = frame.theta();
  const Vector& u = frame.u();
  if (!m.exp_moment_contains(theta)) {
    throw DomainError(to_string(p.kind) + ": theta outside the exponential-moment domain");
  }
  Cumulant1D c = dual_cumulant_1d(m, frame);
  if (!c.admissible(1.0)) {
    throw DomainError(to_string(p.kind) + ": dual asset has no finite forward");
  }
  const Vector& ls = m.log_spot();
  const double prefactor = std::exp(theta.dot(ls) + T * m.cumulant(theta));
  const double dual_spot = std::exp(u.dot(ls));
  const double dual_forward = dual_spot * std::exp(T * c.kappa(1.0).real());
  return DualReduction{frame, kind, strike, prefactor, dual_spot, dual_forward, std::move(c)};
}

PriceResult price_reduction(const Model& m, const DualReduction& r, const PricingOptions& opts) {
  const double T = r.frame.maturity();
  const bool closed = opts.method == MethodChoice::ClosedForm ||
                      (opts.method == MethodChoice::Auto && m.is_gaussian());
  PriceResult res;
  if (closed) {
    if (!m.is_gaussian()) {
      throw UnsupportedModel(m.name() + " has jumps; no closed form for the dual problem");
    }
    const LevyTriplet t = m.triplet();
    const DiffusionDual dd = dual_triplet_diffusion(t.drift(), t.cov(), r.frame);
    res = bs_closed_form(std::sqrt(std::max(dd.variance, 0.0)), r.dual_forward, r.strike, T,
                         r.vanilla);
  } else {
    res = vanilla_fourier(r.cumulant, r.dual_forward, r.strike, T, r.vanilla, opts.fourier);
  }
  res.value = std::max(0.0, r.prefactor * res.value);
  res.frame = r.frame;
  return res;
}

PriceResult price(const Model& m, const Payoff& p, double T, const PricingOptions& opts) {
  return price_reduction(m, reduce(m, p, T), opts);
}

PriceResult price_swap(const Model& m, double T, SwapRoute route, const PricingOptions& opts) {
  return price_reduction(m, reduce(m, Payoff::swap(), T, route), opts);
}

PriceResult price_quanto_call(const Model& m, double K, double T, const PricingOptions& opts) {
  return price(m, Payoff::quanto_call(K), T, opts);
}

PriceResult price_quanto_put(const Model& m, double K, double T, const PricingOptions& opts) {
  return price(m, Payoff::quanto_put(K), T, opts);
}

PriceResult price_correlation_digital(const Model& m, double K, double T,
                                      const PricingOptions& opts) {
  return price(m, Payoff::correlation_digital(K), T, opts);
}

PriceResult price_quanto_swap(const Model& m, double T, const PricingOptions& opts) {
  return price(m, Payoff::quanto_swap(), T, opts);
}

}  // namespace levydual
