#include "levydual/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "levydual/errors.hpp"

namespace levydual {

namespace {

struct Moments {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }
};

Moments merge(const Moments& a, const Moments& b) {
  if (a.count == 0) return b;
  if (b.count == 0) return a;
  Moments r;
  r.count = a.count + b.count;
  const double na = static_cast<double>(a.count), nb = static_cast<double>(b.count);
  const double n = static_cast<double>(r.count);
  const double d = b.mean - a.mean;
  r.mean = a.mean + d * nb / n;
  r.m2 = a.m2 + b.m2 + d * d * na * nb / n;
  return r;
}

Moments tree_reduce(std::vector<Moments> level) {
  if (level.empty()) return {};
  while (level.size() > 1) {
    std::vector<Moments> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(merge(level[i], level[i + 1]));
    if (level.size() % 2 == 1) next.push_back(level.back());
    level = std::move(next);
  }
  return level.front();
}

}  // namespace

double z_score(double value, double target, double std_error) {
  const double diff = std::abs(value - target);
  if (std_error > 0.0) return diff / std_error;
  return diff <= 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
}

McEstimate mc_expectation(const Model& m, double T, std::int64_t n, std::uint64_t seed,
                          const std::function<double(const Vector&)>& g, const McOptions& opts) {
  if (n < 2) throw InvalidArgument("Monte Carlo needs at least 2 paths");
  if (!(T > 0.0)) throw InvalidArgument("maturity must be positive");
  if (!m.supports_sampling()) throw UnsupportedModel(m.name() + " has no terminal sampler");
  const int per_unit = opts.antithetic ? 2 : 1;
  const std::int64_t units = (n + per_unit - 1) / per_unit;
  const std::int64_t units_per_block = kBlockSize / per_unit;
  const std::int64_t blocks = (units + units_per_block - 1) / units_per_block;
  std::vector<Moments> stats(static_cast<std::size_t>(blocks));

  for_each_block(blocks * kBlockSize, opts.workers,
                 [&](std::int64_t block, std::int64_t, std::int64_t) {
                   const std::int64_t first = block * units_per_block;
                   const std::int64_t count = std::min(units_per_block, units - first);
                   Rng rng = make_stream(seed, static_cast<std::uint64_t>(block));
                   RowMatrix rows(count * per_unit, m.dim());
                   m.sample_increments(T, rng, rows, opts.antithetic);
                   Moments s;
                   Vector x(m.dim());
                   for (std::int64_t k = 0; k < count; ++k) {
                     double v = 0.0;
                     for (int j = 0; j < per_unit; ++j) {
                       x = rows.row(k * per_unit + j).transpose();
                       v += g(x);
                     }
                     s.add(v / per_unit);
                   }
                   stats[static_cast<std::size_t>(block)] = s;
                 });

  const Moments total = tree_reduce(std::move(stats));
  McEstimate e;
  e.mean = total.mean;
  const double var = total.count > 1 ? total.m2 / static_cast<double>(total.count - 1) : 0.0;
  e.std_error = std::sqrt(std::max(var, 0.0) / static_cast<double>(total.count));
  e.n = total.count * per_unit;
  e.seed = seed;
  return e;
}

McEstimate mc_price(const Model& m, const Payoff& p, double T, std::int64_t n, std::uint64_t seed,
                    const McOptions& opts) {
  p.validate();
  const bool vanilla = p.required_dim() == 1;
  if (vanilla ? m.dim() < 1 : m.dim() != p.required_dim()) {
    throw DimensionMismatch(to_string(p.kind) + " does not match a " + std::to_string(m.dim()) +
                            "-asset model");
  }
  const Vector spot = m.log_spot();
  return mc_expectation(
      m, T, n, seed, [&p, &spot](const Vector& h) { return p.evaluate(spot + h); }, opts);
}

McEstimate verify_martingale(const Model& m, int i, double T, std::int64_t n, std::uint64_t seed,
                             const McOptions& opts) {
  if (i < 0 || i >= m.dim()) throw DimensionMismatch("coordinate index out of range");
  return mc_expectation(
      m, T, n, seed, [i](const Vector& h) { return std::exp(h(i)); }, opts);
}

McEstimate verify_density(const Model& m, const Vector& theta, double T, std::int64_t n,
                          std::uint64_t seed, const McOptions& opts) {
  if (theta.size() != m.dim()) throw DimensionMismatch("theta length differs from model dimension");
  if (!m.exp_moment_contains(theta)) throw DomainError("theta outside the exponential-moment domain");
  const double shift = T * m.cumulant(theta);
  return mc_expectation(
      m, T, n, seed, [&theta, shift](const Vector& h) { return std::exp(theta.dot(h) - shift); },
      opts);
}

ModelPtr flip_correlation(const Model& m) {
  auto flip = [](Matrix r) {
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      for (Eigen::Index j = 0; j < r.cols(); ++j) {
        if (i != j) r(i, j) = -r(i, j);
      }
    }
    return r;
  };
  const Vector spot = m.spot();
  if (const auto* bs = dynamic_cast<const BlackScholesModel*>(&m)) {
    BlackScholesParams p = bs->params();
    p.rho = flip(p.rho);
    return std::make_shared<BlackScholesModel>(p, spot);
  }
  if (const auto* mj = dynamic_cast<const MertonModel*>(&m)) {
    MertonParams p = mj->params();
    p.rho = flip(p.rho);
    return std::make_shared<MertonModel>(p, spot);
  }
  throw UnsupportedModel("correlation flip is defined for Black-Scholes and Merton models only");
}

DualityReport verify_duality_report(const Model& m, const Payoff& p, double T, std::int64_t n,
                                    std::uint64_t seed, const DualityOptions& opts) {
  ModelPtr corrupted;
  const Model* dual_model = &m;
  if (opts.negative_control) {
    corrupted = flip_correlation(m);
    dual_model = corrupted.get();
  }
  const DualReduction red = reduce(*dual_model, p, T, opts.route);
  const PriceResult dual = price_reduction(*dual_model, red, opts.pricing);

  DualityReport r;
  r.label = m.name() + ":" + to_string(p.kind);
  r.payoff = p;
  r.maturity = T;
  r.dual_value = dual.value;
  r.dual_method = dual.method;
  r.mc = mc_price(m, p, T, n, seed, opts.mc);
  r.z = z_score(r.dual_value, r.mc.mean, r.mc.std_error);
  r.pass = r.z <= opts.threshold;
  r.negative_control = opts.negative_control;
  r.theta = red.frame.theta();
  r.u = red.frame.u();
  return r;
}

}  // namespace levydual
