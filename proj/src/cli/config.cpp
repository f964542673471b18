#include "levydual/cli/config.hpp"

#include <fstream>
#include <sstream>

namespace levydual::cli {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& path, const std::string& key) {
  if (!obj.contains(key)) throw ConfigError(path + "." + key + " is missing");
  return obj.at(key);
}

const json& section(const json& doc, const std::string& name) {
  const json& s = require(doc, "config", name);
  if (!s.is_object()) throw ConfigError(name + " must be an object");
  return s;
}

double number(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path + " must be a number");
  return j.get<double>();
}

double number_at(const json& obj, const std::string& path, const std::string& key) {
  return number(require(obj, path, key), path + "." + key);
}

Vector vector_of(const json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path + " must be a nonempty array of numbers");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = number(j[i], path + "[" + std::to_string(i) + "]");
  }
  return v;
}

Vector vector_at(const json& obj, const std::string& path, const std::string& key, Eigen::Index n) {
  Vector v = vector_of(require(obj, path, key), path + "." + key);
  if (n > 0 && v.size() != n) {
    throw ConfigError(path + "." + key + " must have " + std::to_string(n) + " entries");
  }
  return v;
}

Matrix matrix_of(const json& j, const std::string& path, Eigen::Index n) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) {
    throw ConfigError(path + " must be a " + std::to_string(n) + "x" + std::to_string(n) + " array");
  }
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Vector row = vector_of(j[static_cast<std::size_t>(i)], path + "[" + std::to_string(i) + "]");
    if (row.size() != n) throw ConfigError(path + " rows must have " + std::to_string(n) + " entries");
    m.row(i) = row.transpose();
  }
  return m;
}

// A correlation given as one number (every off-diagonal entry) or a full matrix.
Matrix correlation_at(const json& obj, const std::string& path, const std::string& key,
                      Eigen::Index n) {
  const json& j = require(obj, path, key);
  if (j.is_number()) {
    Matrix m = Matrix::Constant(n, n, j.get<double>());
    m.diagonal().setOnes();
    return m;
  }
  return matrix_of(j, path + "." + key, n);
}

std::optional<Vector> spot_at(const json& obj, Eigen::Index n) {
  if (!obj.contains("spot")) return std::nullopt;
  return vector_at(obj, "model", "spot", n);
}

std::string string_at(const json& obj, const std::string& path, const std::string& key) {
  const json& j = require(obj, path, key);
  if (!j.is_string()) throw ConfigError(path + "." + key + " must be a string");
  return j.get<std::string>();
}

ModelPtr parse_model(const json& m, std::string& kind) {
  kind = string_at(m, "model", "kind");
  if (kind == "bs") {
    BlackScholesParams p;
    p.sigma = vector_at(m, "model", "sigma", 0);
    p.rho = correlation_at(m, "model", "rho", p.sigma.size());
    return std::make_shared<BlackScholesModel>(p, spot_at(m, p.sigma.size()));
  }
  if (kind == "merton") {
    MertonParams p;
    p.sigma = vector_at(m, "model", "sigma", 0);
    const Eigen::Index d = p.sigma.size();
    p.rho = correlation_at(m, "model", "rho", d);
    p.lambda = vector_at(m, "model", "lambda", d);
    p.tau = vector_at(m, "model", "tau", d);
    if (m.contains("jump_corr")) p.jump_corr = correlation_at(m, "model", "jump_corr", d);
    return std::make_shared<MertonModel>(p, spot_at(m, d));
  }
  if (kind == "gh") {
    GHParams p;
    const std::string sub = string_at(m, "model", "subclass");
    if (sub == "nig") {
      p.subclass = GHSubclass::NIG;
      p.lambda = -0.5;
    } else if (sub == "vg") {
      p.subclass = GHSubclass::VG;
      p.delta = 0.0;
    } else if (sub == "general") {
      p.subclass = GHSubclass::GeneralGH;
    } else {
      throw ConfigError("model.subclass must be one of nig, vg, general");
    }
    if (p.subclass != GHSubclass::NIG) p.lambda = number_at(m, "model", "lambda");
    if (p.subclass != GHSubclass::VG) p.delta = number_at(m, "model", "delta");
    p.alpha = number_at(m, "model", "alpha");
    p.beta = vector_at(m, "model", "beta", 2);
    p.mu = m.contains("mu") ? vector_at(m, "model", "mu", 2) : Vector(Vector::Zero(2));
    p.Delta = m.contains("Delta") ? matrix_of(m.at("Delta"), "model.Delta", 2)
                                  : Matrix(Matrix::Identity(2, 2));
    return std::make_shared<GHModel>(p, spot_at(m, 2));
  }
  throw ConfigError("model.kind must be one of bs, merton, gh");
}

TradeConfig parse_trade(const json& t) {
  TradeConfig c;
  try {
    c.payoff.kind = parse_payoff_kind(string_at(t, "trade", "payoff"));
  } catch (const InvalidArgument&) {
    throw ConfigError("trade.payoff is not a known payoff kind");
  }
  if (c.payoff.has_strike()) {
    c.payoff.strike = number_at(t, "trade", "strike");
    if (!(c.payoff.strike > 0.0)) throw ConfigError("trade.strike must be positive");
  }
  c.maturity = number_at(t, "trade", "maturity");
  if (!(c.maturity > 0.0)) throw ConfigError("trade.maturity must be positive");
  if (t.contains("route")) {
    const std::string r = string_at(t, "trade", "route");
    if (r == "put") {
      c.route = SwapRoute::Put;
    } else if (r == "call") {
      c.route = SwapRoute::Call;
    } else {
      throw ConfigError("trade.route must be put or call");
    }
  }
  return c;
}

EngineConfig parse_engine(const json& e) {
  EngineConfig c;
  if (e.contains("method")) {
    const std::string m = string_at(e, "engine", "method");
    if (m == "auto") {
      c.method = EngineMethod::Auto;
    } else if (m == "fourier") {
      c.method = EngineMethod::Fourier;
    } else if (m == "closed") {
      c.method = EngineMethod::Closed;
    } else if (m == "mc") {
      c.method = EngineMethod::MonteCarlo;
    } else {
      throw ConfigError("engine.method must be one of auto, fourier, closed, mc");
    }
  }
  if (e.contains("paths")) {
    const json& j = e.at("paths");
    if (!j.is_number_integer() || j.get<std::int64_t>() < 2) {
      throw ConfigError("engine.paths must be an integer >= 2");
    }
    c.paths = j.get<std::int64_t>();
  }
  if (e.contains("seed")) {
    const json& j = e.at("seed");
    if (!j.is_number_unsigned()) throw ConfigError("engine.seed must be a nonnegative integer");
    c.seed = j.get<std::uint64_t>();
  }
  if (e.contains("damping")) {
    c.damping = number_at(e, "engine", "damping");
    if (!(c.damping > 0.0)) throw ConfigError("engine.damping must be positive");
  }
  if (e.contains("abs_tol")) {
    c.abs_tol = number_at(e, "engine", "abs_tol");
    if (!(c.abs_tol > 0.0)) throw ConfigError("engine.abs_tol must be positive");
  }
  if (e.contains("workers")) {
    const json& j = e.at("workers");
    if (!j.is_number_integer() || j.get<int>() < 0) {
      throw ConfigError("engine.workers must be a nonnegative integer");
    }
    c.workers = j.get<int>();
  }
  if (e.contains("antithetic")) {
    if (!e.at("antithetic").is_boolean()) throw ConfigError("engine.antithetic must be a boolean");
    c.antithetic = e.at("antithetic").get<bool>();
  }
  return c;
}

VerifyConfig parse_verify(const json& v, const Model& m) {
  VerifyConfig c;
  const auto d = static_cast<Eigen::Index>(m.dim());
  if (v.contains("negative_control")) {
    if (!v.at("negative_control").is_boolean()) {
      throw ConfigError("verify.negative_control must be a boolean");
    }
    c.negative_control = v.at("negative_control").get<bool>();
  }
  if (v.contains("theta")) {
    const json& list = v.at("theta");
    if (!list.is_array() || list.empty()) throw ConfigError("verify.theta must be a nonempty array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "verify.theta[" + std::to_string(i) + "]";
      Vector th = vector_of(list[i], path);
      if (th.size() != d) throw ConfigError(path + " must have " + std::to_string(d) + " entries");
      c.thetas.push_back(th);
    }
  } else {
    for (Eigen::Index i = 0; i < d; ++i) c.thetas.push_back(unit_vector(static_cast<int>(d), static_cast<int>(i)));
    const Vector all = Vector::Ones(d);
    if (m.exp_moment_contains(all)) c.thetas.push_back(all);
  }
  return c;
}

}  // namespace

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ConfigError("config must be a JSON object");
  RunConfig c;
  c.model = parse_model(section(doc, "model"), c.model_kind);
  c.trade = parse_trade(section(doc, "trade"));
  const int need = c.trade.payoff.required_dim();
  if (need > 1 && c.model->dim() != need) {
    throw ConfigError("trade.payoff " + to_string(c.trade.payoff.kind) + " needs a " +
                      std::to_string(need) + "-asset model, model has " +
                      std::to_string(c.model->dim()));
  }
  c.engine = doc.contains("engine") ? parse_engine(section(doc, "engine")) : EngineConfig{};
  c.verify = parse_verify(doc.contains("verify") ? section(doc, "verify") : json::object(), *c.model);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("invalid JSON: ") + e.what());
  }
  return parse_config(doc);
}

std::string to_string(EngineMethod m) {
  switch (m) {
    case EngineMethod::Auto:
      return "auto";
    case EngineMethod::Fourier:
      return "fourier";
    case EngineMethod::Closed:
      return "closed";
    case EngineMethod::MonteCarlo:
      return "mc";
  }
  return "unknown";
}

PricingOptions pricing_options(const EngineConfig& e) {
  PricingOptions p;
  p.method = e.method == EngineMethod::Fourier  ? MethodChoice::Fourier
             : e.method == EngineMethod::Closed ? MethodChoice::ClosedForm
                                                : MethodChoice::Auto;
  p.fourier.damping = e.damping;
  p.fourier.abs_tol = e.abs_tol;
  return p;
}

McOptions mc_options(const EngineConfig& e) {
  McOptions m;
  m.workers = e.workers;
  m.antithetic = e.antithetic;
  return m;
}

}  // namespace levydual::cli
