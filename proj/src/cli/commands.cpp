#include "levydual/cli/commands.hpp"

#include <chrono>
#include <cstdio>
#include <sstream>
#include <vector>

namespace levydual::cli {

using nlohmann::json;

namespace {

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << e.what() << '\n';
    return kConfigError;
  } catch (const NumericalError& e) {
    err << e.what() << '\n';
    return kNumericalError;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return kModelError;
  } catch (const std::exception& e) {
    err << "NumericalError: " << e.what() << '\n';
    return kNumericalError;
  }
}

RunConfig load(const std::string& path, const GlobalOptions& g) {
  RunConfig c = load_config(path);
  if (g.seed) c.engine.seed = *g.seed;
  if (g.paths) {
    if (*g.paths < 2) throw ConfigError("--paths must be at least 2");
    c.engine.paths = *g.paths;
  }
  return c;
}

json to_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

json frame_json(const EsscherFrame& f) {
  return json{{"theta", to_json(f.theta())}, {"u", to_json(f.u())}, {"maturity", f.maturity()}};
}

json trade_json(const TradeConfig& t) {
  json j{{"payoff", to_string(t.payoff.kind)}, {"maturity", t.maturity}};
  if (t.payoff.has_strike()) j["strike"] = t.payoff.strike;
  if (t.payoff.kind == PayoffKind::Swap) j["route"] = t.route == SwapRoute::Put ? "put" : "call";
  return j;
}

void emit(std::ostream& out, const json& j, const GlobalOptions& g) {
  out << j.dump(g.json_indent < 0 ? -1 : g.json_indent) << '\n';
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

json jump_summary_json(const JumpMeasure& F) {
  json j{{"kind", F.kind_name()}};
  if (F.kind() == JumpMeasure::Kind::Empty) {
    j["intensity"] = 0.0;
    return j;
  }
  const JumpSummary s = F.summary_1d();
  j["intensity"] = s.mass;
  j["mean"] = s.mean;
  j["variance"] = s.variance;
  if (F.kind() == JumpMeasure::Kind::FiniteAtoms) {
    json atoms = json::array();
    for (const Atom& a : F.atom_list()) atoms.push_back({{"point", a.point(0)}, {"weight", a.weight}});
    j["atoms"] = atoms;
  }
  return j;
}

std::vector<std::string> split_suite(const std::string& suite) {
  std::vector<std::string> parts;
  std::stringstream ss(suite);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) parts.push_back(item);
  }
  return parts;
}

}  // namespace

int cmd_price(const std::string& config_path, const GlobalOptions& g, std::ostream& out,
              std::ostream& err) {
  return guarded(err, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const RunConfig c = load(config_path, g);
    const Model& m = *c.model;
    PriceResult r;
    json j{{"model", m.name()}, {"trade", trade_json(c.trade)}};
    if (c.engine.method == EngineMethod::MonteCarlo) {
      const McEstimate e = mc_price(m, c.trade.payoff, c.trade.maturity, c.engine.paths,
                                    c.engine.seed, mc_options(c.engine));
      r = PriceResult{e.mean, PricingMethod::MonteCarlo, e.std_error, std::nullopt};
      j["paths"] = e.n;
      j["seed"] = e.seed;
    } else {
      const DualReduction red = reduce(m, c.trade.payoff, c.trade.maturity, c.trade.route);
      r = price_reduction(m, red, pricing_options(c.engine));
    }
    j["value"] = r.value;
    j["method"] = to_string(r.method);
    if (r.std_error) {
      j["stderr"] = *r.std_error;
      const auto ci = *r.confidence_interval();
      j["ci95"] = {ci.first, ci.second};
    }
    if (r.frame) j["frame"] = frame_json(*r.frame);
    if (!g.no_timing) j["elapsed_ms"] = elapsed_ms(t0);
    emit(out, j, g);
    return static_cast<int>(kOk);
  });
}

int cmd_dual(const std::string& config_path, const GlobalOptions& g, std::ostream& out,
             std::ostream& err) {
  return guarded(err, [&] {
    const auto t0 = std::chrono::steady_clock::now();
    const RunConfig c = load(config_path, g);
    const Model& m = *c.model;
    const EsscherFrame f = payoff_frame(c.trade.payoff, m.dim(), c.trade.maturity, c.trade.route);
    json j{{"model", m.name()}, {"trade", trade_json(c.trade)}, {"frame", frame_json(f)}};
    json dual;
    bool closed_cumulant = true;
    if (const auto* gh = dynamic_cast<const GHModel*>(&m)) {
      const GHParams& p = gh->params();
      const GH1DParams q = gh_dual_params(p, f);
      dual = {{"family", "gh1d"},   {"subclass", to_string(p.subclass)},
              {"lambda", q.lambda}, {"alpha", q.alpha},
              {"beta", q.beta},     {"delta", q.delta},
              {"mu", q.mu}};
      if (p.subclass == GHSubclass::GeneralGH) {
        closed_cumulant = false;
        dual["drift_offset"] = nullptr;
        dual["drift"] = nullptr;
      } else {
        dual["drift_offset"] = f.u().dot(gh->drift_offset());
        dual["drift"] = f.u().dot(gh->cumulant_gradient(f.theta()));
      }
    } else {
      const DualTriplet1D d = dual_triplet(m.triplet(), f);
      dual = {{"family", "triplet"},
              {"drift", d.triplet.drift()(0)},
              {"variance", d.triplet.cov()(0, 0)},
              {"truncation", to_string(d.triplet.truncation())},
              {"jumps", jump_summary_json(d.triplet.jumps())}};
    }
    j["dual"] = dual;
    if (closed_cumulant) {
      const CumulantFn kappa = [&m](const CVector& w) { return m.cumulant(w); };
      j["is_dual_martingale"] = is_dual_martingale(kappa, f);
      const DualReduction red = reduce(m, c.trade.payoff, c.trade.maturity, c.trade.route);
      j["prefactor"] = red.prefactor;
      j["dual_spot"] = red.dual_spot;
      j["dual_forward"] = red.dual_forward;
    } else {
      j["is_dual_martingale"] = nullptr;
    }
    if (!g.no_timing) j["elapsed_ms"] = elapsed_ms(t0);
    emit(out, j, g);
    return static_cast<int>(kOk);
  });
}

int cmd_verify(const std::string& config_path, const std::string& suite, const GlobalOptions& g,
               std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    bool duality = false, martingale = false, density = false;
    const auto parts = split_suite(suite);
    if (parts.empty()) throw ConfigError("--suite selection is empty");
    for (const std::string& s : parts) {
      if (s == "all") {
        duality = martingale = density = true;
      } else if (s == "duality") {
        duality = true;
      } else if (s == "martingale") {
        martingale = true;
      } else if (s == "density") {
        density = true;
      } else {
        throw ConfigError("--suite entry '" + s + "' is not one of all, duality, martingale, density");
      }
    }
    const RunConfig c = load(config_path, g);
    const Model& m = *c.model;
    const McOptions mco = mc_options(c.engine);
    const std::int64_t n = c.engine.paths;
    const std::uint64_t seed = c.engine.seed;
    const double T = c.trade.maturity;

    std::ostringstream table;
    table << "case,dual_value,mc_value,mc_stderr,z,pass\n";
    int rows = 0, passed = 0;
    auto row = [&](const std::string& name, double dual, const McEstimate& e, double z, bool ok) {
      table << name << ',' << fmt(dual) << ',' << fmt(e.mean) << ',' << fmt(e.std_error) << ','
            << fmt(z) << ',' << (ok ? "true" : "false") << '\n';
      ++rows;
      passed += ok ? 1 : 0;
    };

    if (duality) {
      DualityOptions opts;
      opts.pricing = pricing_options(c.engine);
      opts.mc = mco;
      opts.route = c.trade.route;
      const DualityReport r = verify_duality_report(m, c.trade.payoff, T, n, seed, opts);
      row("duality:" + r.label, r.dual_value, r.mc, r.z, r.pass);
      if (c.verify.negative_control) {
        opts.negative_control = true;
        const DualityReport bad = verify_duality_report(m, c.trade.payoff, T, n, seed, opts);
        row("negative_control:" + bad.label, bad.dual_value, bad.mc, bad.z, bad.pass);
      }
    }
    if (martingale) {
      for (int i = 0; i < m.dim(); ++i) {
        const McEstimate e = verify_martingale(m, i, T, n, seed, mco);
        const double z = z_score(e.mean, 1.0, e.std_error);
        row("martingale:" + m.name() + ":S" + std::to_string(i + 1), 1.0, e, z, z <= 3.0);
      }
    }
    if (density) {
      for (const Vector& th : c.verify.thetas) {
        const McEstimate e = verify_density(m, th, T, n, seed, mco);
        const double z = z_score(e.mean, 1.0, e.std_error);
        std::string name = "density:" + m.name() + ":theta=";
        for (Eigen::Index k = 0; k < th.size(); ++k) name += (k ? ";" : "") + fmt(th(k));
        row(name, 1.0, e, z, z <= 3.0);
      }
    }
    out << table.str();
    err << "verify: " << passed << "/" << rows << " rows passed\n";
    return static_cast<int>(passed == rows ? kOk : kVerificationFailed);
  });
}

}  // namespace levydual::cli
