#pragma once

#include <cmath>
#include <vector>

#include "levydual/characteristics.hpp"
#include "levydual/models.hpp"

namespace oracle {

// Frozen values from independent scipy computations (dblquad / quad / norm.cdf).
inline constexpr double kMertonJumpIntegralE1 = 0.6487212707001282;   // int (e^{x1}-1) N(0,I) dx on [-10,10]^2
inline constexpr double kBsAtmCall = 0.07965567455405798;             // Black, F=K=1, vol 0.2, T=1
inline constexpr double kMargrabePut = 0.10524315781125254;           // Black put, vol sqrt(0.07)
inline constexpr double kMargrabeDirectQuadrature = 0.10524315792259419;  // 2D quadrature of E(S1-S2)^+
inline constexpr double kCorrDigitalBs = 0.460172162722971;           // Phi(-0.1)
inline constexpr double kNigRawE1 = 0.12701665379258298;              // 4 - sqrt(15)
inline constexpr double kRadonAlpha = 2.958039891549808;              // sqrt(8.75)
// Levy densities at x = (0.3, -0.5), alpha 3, beta (0.4, -0.2), Delta = I, by the
// subordinator mixture integral.
inline constexpr double kNigDensityMix = 0.38260559078085615;         // delta 0.8
inline constexpr double kVgDensityMix = 0.5190876408867509;           // lambda 1.3
// NIG alpha 4, beta (0.3, -0.2), delta 1, Delta [[1.25, .5], [.5, 1]]:
inline constexpr double kNigQuantoDriftQuadrature = 0.005339190525180754;  // b2 + int x2 (e^{x1}-1) F, radius 12
inline constexpr double kNigCanonicalDrift1 = -0.16823872852817656;
inline constexpr double kNigCanonicalDrift2 = -0.1277825044231476;

}  // namespace oracle

namespace fixtures {

using namespace levydual;

inline LevyTriplet three_atoms_1d() {
  return LevyTriplet(Vector{{0.01}}, Matrix{{0.04}},
                     JumpMeasure::atoms(1, {{Vector{{0.5}}, 1.0}, {Vector{{-0.3}}, 0.7},
                                            {Vector{{1.4}}, 0.2}}),
                     Truncation::Canonical, "atoms3");
}

inline LevyTriplet atoms_2d(Truncation t = Truncation::Canonical) {
  Matrix c{{0.04, 0.01}, {0.01, 0.09}};
  return LevyTriplet(Vector{{0.02, -0.01}}, c,
                     JumpMeasure::atoms(2, {{Vector{{1.0, 1.0}}, 0.5}, {Vector{{-1.0, 2.0}}, 0.25},
                                            {Vector{{0.3, -0.4}}, 1.5}}),
                     t, "atoms2d");
}

inline MertonParams merton2d(double s1 = 0.2, double s2 = 0.3, double rho = 0.5, double l1 = 1.0,
                             double l2 = 1.0, double t1 = 1.0, double t2 = 0.5) {
  MertonParams p;
  p.sigma = Vector{{s1, s2}};
  p.rho = Matrix{{1.0, rho}, {rho, 1.0}};
  p.lambda = Vector{{l1, l2}};
  p.tau = Vector{{t1, t2}};
  return p;
}

inline MertonParams merton3d() {
  MertonParams p;
  p.sigma = Vector{{0.2, 0.25, 0.15}};
  p.rho = Matrix{{1.0, 0.3, 0.1}, {0.3, 1.0, 0.4}, {0.1, 0.4, 1.0}};
  p.lambda = Vector{{1.0, 0.8, 1.2}};
  p.tau = Vector{{0.2, 0.15, 0.25}};
  return p;
}

inline GHParams nig_acceptance() {
  return GHParams::nig(5.0, Vector{{0.2, -0.1}}, 0.5, Vector{{0.0, 0.0}});
}

inline GHParams nig_skewed() {
  return GHParams::nig(4.0, Vector{{0.3, -0.2}}, 1.0, Vector{{0.0, 0.0}},
                       Matrix{{1.25, 0.5}, {0.5, 1.0}});
}

inline GHParams vg_example() {
  return GHParams::vg(2.0, 6.0, Vector{{0.5, -0.5}}, Vector{{0.0, 0.0}});
}

inline BlackScholesParams bs3d(double s1, double s2, double s3, Matrix rho) {
  BlackScholesParams p;
  p.sigma = Vector{{s1, s2, s3}};
  p.rho = std::move(rho);
  return p;
}

}  // namespace fixtures
