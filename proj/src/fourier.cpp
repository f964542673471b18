#include "levydual/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "levydual/errors.hpp"
#include "levydual/quadrature.hpp"

namespace levydual {

std::string to_string(PricingMethod m) {
  switch (m) {
    case PricingMethod::ClosedForm:
      return "closed";
    case PricingMethod::Fourier:
      return "fourier";
    case PricingMethod::MonteCarlo:
      return "mc";
  }
  return "unknown";
}

std::string to_string(VanillaKind k) {
  switch (k) {
    case VanillaKind::Call:
      return "call";
    case VanillaKind::Put:
      return "put";
    case VanillaKind::Digital:
      return "digital";
  }
  return "unknown";
}

std::optional<std::pair<double, double>> PriceResult::confidence_interval() const {
  if (!std_error) return std::nullopt;
  return std::make_pair(value - 1.959963984540054 * *std_error,
                        value + 1.959963984540054 * *std_error);
}

namespace {

void check_inputs(double forward, double K, double T) {
  if (!(forward > 0.0) || !std::isfinite(forward)) throw InvalidArgument("forward must be positive");
  if (!(K > 0.0) || !std::isfinite(K)) throw InvalidArgument("strike must be positive");
  if (!(T > 0.0) || !std::isfinite(T)) throw InvalidArgument("maturity must be positive");
}

// Integrates f over [0, inf): the upper limit doubles from the initial radius
// until |f| sampled on [R, 2R] stays below the envelope tolerance.
double integrate_half_line(const std::function<double(double)>& f, const FourierOptions& opts) {
  double R = opts.initial_radius;
  for (;;) {
    double envelope = 0.0;
    for (int k = 0; k <= 256; ++k) envelope = std::max(envelope, std::abs(f(R * (1.0 + k / 256.0))));
    if (envelope < opts.envelope_tol) break;
    R *= 2.0;
    if (R > opts.max_radius) {
      throw QuadratureError("Fourier integrand still above " + std::to_string(opts.envelope_tol) +
                            " at radius " + std::to_string(opts.max_radius));
    }
  }
  QuadratureOptions q;
  q.abs_tol = opts.abs_tol;
  q.max_intervals = opts.max_intervals;
  return integrate_gk<double>(f, 0.0, R, q).value;
}

// E[(e^Y - e^k)^+] (a > 0) or E[(e^k - e^Y)^+] (a < -1) for the normalized
// log return Y, with damping exponent a.
double damped_price(const Cumulant1D& c, double kappa1, double k, double T, double a,
                    const FourierOptions& opts) {
  if (!c.admissible(a + 1.0)) {
    throw ContourError("damping line Re z = " + std::to_string(a + 1.0) +
                       " leaves the admissible strip");
  }
  auto psi = [&](Complex z) { return T * (c.kappa(z) - z * kappa1); };
  auto f = [&](double v) {
    const Complex z(a + 1.0, v);
    const Complex num = std::exp(psi(z) - Complex(0.0, v * k));
    const Complex den = Complex(a, v) * Complex(a + 1.0, v);
    return (num / den).real();
  };
  return std::exp(-a * k) / std::numbers::pi * integrate_half_line(f, opts);
}

}  // namespace

PriceResult vanilla_fourier(const Cumulant1D& c, double forward, double K, double T,
                            VanillaKind kind, const FourierOptions& opts) {
  check_inputs(forward, K, T);
  if (!c.admissible(1.0)) throw DomainError("cumulant is not admissible at z = 1");
  const double kappa1 = c.kappa(1.0).real();
  const double k = std::log(K / forward);

  if (kind == VanillaKind::Digital) {
    if (!c.admissible(0.0)) throw DomainError("cumulant is not admissible on the imaginary axis");
    auto f = [&](double v) {
      const Complex phi = std::exp(T * (c.kappa(Complex(0.0, v)) - Complex(0.0, v) * kappa1));
      return (phi * std::exp(Complex(0.0, -v * k))).imag() / v;
    };
    const double p = 0.5 + integrate_half_line(f, opts) / std::numbers::pi;
    return PriceResult{std::clamp(p, 0.0, 1.0), PricingMethod::Fourier, std::nullopt, std::nullopt};
  }

  const bool call_side = K >= forward;
  double damping = opts.damping;
  double otm = 0.0;
  for (int attempt = 0;; ++attempt) {
    try {
      const double a = call_side ? damping : -1.0 - damping;
      otm = forward * damped_price(c, kappa1, k, T, a, opts);
      break;
    } catch (const ContourError&) {
      if (attempt == 2) throw;
      damping *= 0.5;
    }
  }
  const double call = call_side ? otm : otm + forward - K;
  const double put = call_side ? otm - forward + K : otm;
  const double value = kind == VanillaKind::Call ? call : put;
  return PriceResult{std::max(0.0, value), PricingMethod::Fourier, std::nullopt, std::nullopt};
}

PriceResult bs_closed_form(double vol, double forward, double K, double T, VanillaKind kind) {
  check_inputs(forward, K, T);
  if (!(vol >= 0.0)) throw InvalidArgument("volatility must be nonnegative");
  const double s = vol * std::sqrt(T);
  double value = 0.0;
  if (s == 0.0) {
    switch (kind) {
      case VanillaKind::Call:
        value = std::max(forward - K, 0.0);
        break;
      case VanillaKind::Put:
        value = std::max(K - forward, 0.0);
        break;
      case VanillaKind::Digital:
        value = forward > K ? 1.0 : 0.0;
        break;
    }
  } else {
    auto N = [](double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); };
    const double d1 = (std::log(forward / K) + 0.5 * s * s) / s;
    const double d2 = d1 - s;
    switch (kind) {
      case VanillaKind::Call:
        value = forward * N(d1) - K * N(d2);
        break;
      case VanillaKind::Put:
        value = K * N(-d2) - forward * N(-d1);
        break;
      case VanillaKind::Digital:
        value = N(d2);
        break;
    }
  }
  return PriceResult{std::max(0.0, value), PricingMethod::ClosedForm, std::nullopt, std::nullopt};
}

}  // namespace levydual
