#include "levydual/quadrature.hpp"

namespace levydual {

namespace {

Complex integrate_level(const std::function<Complex(const Vector&)>& f, const Vector& lo,
                        const Vector& hi, Vector& x, int level, double abs_tol,
                        const QuadratureOptions& opts) {
  const int d = static_cast<int>(lo.size());
  QuadratureOptions local = opts;
  local.abs_tol = abs_tol;
  if (level == d - 1) {
    auto g = [&](double t) {
      x(level) = t;
      return f(x);
    };
    return integrate_gk<Complex>(g, lo(level), hi(level), local).value;
  }
  const double inner_tol = 0.1 * abs_tol / std::max(1.0, hi(level) - lo(level));
  auto g = [&](double t) {
    x(level) = t;
    return integrate_level(f, lo, hi, x, level + 1, inner_tol, opts);
  };
  return integrate_gk<Complex>(g, lo(level), hi(level), local).value;
}

}  // namespace

Complex integrate_box(const std::function<Complex(const Vector&)>& f, const Vector& lo,
                      const Vector& hi, const QuadratureOptions& opts) {
  if (lo.size() != hi.size() || lo.size() == 0) {
    throw DimensionMismatch("integrate_box: bounds must be non-empty and of equal length");
  }
  Vector x = lo;
  return integrate_level(f, lo, hi, x, 0, opts.abs_tol, opts);
}

}  // namespace levydual
