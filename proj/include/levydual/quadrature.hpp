#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <queue>
#include <string>
#include <vector>

#include "levydual/errors.hpp"
#include "levydual/types.hpp"

namespace levydual {

struct QuadratureOptions {
  double abs_tol = 1e-10;
  double rel_tol = 0.0;
  int max_intervals = 4000;
};

template <class T>
struct QuadratureResult {
  T value{};
  double error = 0.0;
  int intervals = 0;
};

namespace detail {

// Kronrod 15-point abscissae on [0, 1] (symmetric), Kronrod weights, and the
// embedded Gauss 7-point weights for the odd-indexed abscissae.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

template <class T>
struct Panel {
  double a, b;
  T value;
  double error;
  bool operator<(const Panel& o) const { return error < o.error; }
};

template <class T, class F>
Panel<T> gk15(F& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const T fc = f(center);
  T kronrod = fc * kWgk[7];
  T gauss = fc * kWg[3];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const T sum = f(center - dx) + f(center + dx);
    kronrod += sum * kWgk[j];
    if (j % 2 == 1) gauss += sum * kWg[j / 2];
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (7/15) integration of f over [a, b].
/// Works for real- or complex-valued integrands. Throws QuadratureError when
/// the requested tolerance is not met within max_intervals panels.
template <class T, class F>
QuadratureResult<T> integrate_gk(F&& f, double a, double b, const QuadratureOptions& opts = {}) {
  if (a == b) return {};
  std::priority_queue<detail::Panel<T>> heap;
  auto first = detail::gk15<T>(f, a, b);
  T total = first.value;
  double error = first.error;
  heap.push(first);
  int intervals = 1;
  auto converged = [&] {
    return error <= std::max(opts.abs_tol, opts.rel_tol * std::abs(total));
  };
  while (!converged()) {
    if (intervals >= opts.max_intervals) {
      throw QuadratureError("no convergence on [" + std::to_string(a) + ", " + std::to_string(b) +
                            "], error estimate " + std::to_string(error));
    }
    auto worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (!(mid > worst.a && mid < worst.b)) {
      throw QuadratureError("panel width underflow near " + std::to_string(mid));
    }
    auto left = detail::gk15<T>(f, worst.a, mid);
    auto right = detail::gk15<T>(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++intervals;
  }
  // Re-sum from the panels to shed accumulated update round-off.
  T sum{};
  double err = 0.0;
  while (!heap.empty()) {
    sum += heap.top().value;
    err += heap.top().error;
    heap.pop();
  }
  return {sum, err, intervals};
}

/// Iterated integration over the box [lo, hi] in R^d. The innermost
/// coordinate is the last one. Inner integrals use a tolerance scaled by the
/// outer widths so the total error stays within opts.abs_tol.
Complex integrate_box(const std::function<Complex(const Vector&)>& f, const Vector& lo,
                      const Vector& hi, const QuadratureOptions& opts = {});

}  // namespace levydual
