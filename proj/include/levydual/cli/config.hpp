#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "levydual/errors.hpp"
#include "levydual/models.hpp"
#include "levydual/montecarlo.hpp"
#include "levydual/pricing.hpp"

namespace levydual::cli {

/// Malformed configuration; the message names the offending field.
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("ConfigError: " + what) {}
};

enum class EngineMethod { Auto, Fourier, Closed, MonteCarlo };

struct EngineConfig {
  EngineMethod method = EngineMethod::Auto;
  std::int64_t paths = 1000000;
  std::uint64_t seed = 42;
  double damping = 0.75;
  double abs_tol = 1e-10;
  int workers = 0;
  bool antithetic = true;
};

struct TradeConfig {
  Payoff payoff;
  double maturity = 1.0;
  SwapRoute route = SwapRoute::Put;
};

struct VerifyConfig {
  /// Tilts for the density suite; defaults to each e_i and their sum when admissible.
  std::vector<Vector> thetas;
  bool negative_control = false;
};

struct RunConfig {
  std::string model_kind;
  ModelPtr model;
  TradeConfig trade;
  EngineConfig engine;
  VerifyConfig verify;
};

/// Builds a run configuration. Type and presence errors raise ConfigError;
/// parameter values the models reject raise the model's own errors.
RunConfig parse_config(const nlohmann::json& doc);
RunConfig load_config(const std::string& path);

std::string to_string(EngineMethod m);
PricingOptions pricing_options(const EngineConfig& e);
McOptions mc_options(const EngineConfig& e);

}  // namespace levydual::cli
