#include <doctest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <numbers>

#include "levydual/errors.hpp"
#include "levydual/esscher.hpp"
#include "levydual/models.hpp"
#include "support.hpp"

using namespace levydual;

namespace {

GHParams tilt(GHParams p, const Vector& theta) {
  p.beta += theta;
  return p;
}

void check_gh1d(const GH1DParams& a, const GH1DParams& b, double tol) {
  CHECK(std::abs(a.lambda - b.lambda) <= tol);
  CHECK(std::abs(a.alpha - b.alpha) <= tol);
  CHECK(std::abs(a.beta - b.beta) <= tol);
  CHECK(std::abs(a.delta - b.delta) <= tol);
  CHECK(std::abs(a.mu - b.mu) <= tol);
}

// int (e^{<w,x>} - 1 - <w,x>) F(dx) in polar coordinates.
double compensated_integral(const GHParams& p, const Vector& w, double R) {
  auto g = [&](const Vector& y) -> Complex {
    const Vector x{{y(0) * std::cos(y(1)), y(0) * std::sin(y(1))}};
    const double wx = w.dot(x);
    return (std::expm1(wx) - wx) * gh_levy_density(p, x) * y(0);
  };
  QuadratureOptions opts;
  opts.abs_tol = 1e-9;
  opts.max_intervals = 20000;
  return integrate_box(g, Vector{{0.0, 0.0}}, Vector{{R, 2.0 * std::numbers::pi}}, opts).real();
}

struct Moments {
  Vector mean;
  Matrix cov;
};

Moments moments(const RowMatrix& x) {
  Moments m;
  m.mean = x.colwise().mean().transpose();
  const RowMatrix c = x.rowwise() - m.mean.transpose();
  m.cov = (c.transpose() * c) / static_cast<double>(x.rows() - 1);
  return m;
}

}  // namespace

TEST_SUITE("models") {

TEST_CASE("Black-Scholes triplet") {
  const LevyTriplet t = bs_triplet(BS2DParams{0.3, 0.2, 0.5});
  CHECK(t.drift()(0) == doctest::Approx(-0.045).epsilon(1e-15));
  CHECK(t.drift()(1) == doctest::Approx(-0.02).epsilon(1e-15));
  CHECK(t.cov()(0, 1) == doctest::Approx(0.03).epsilon(1e-15));
  CHECK(t.jumps().kind() == JumpMeasure::Kind::Empty);
  CHECK_THROWS_AS(bs_triplet(BS2DParams{0.3, 0.2, 1.5}), InvalidArgument);
  CHECK_THROWS_AS(bs_triplet(BS2DParams{-0.3, 0.2, 0.0}), InvalidArgument);
  const BlackScholesModel m(BS2DParams{0.3, 0.2, 0.5}, Vector{{100.0, 80.0}});
  CHECK(m.spot()(0) == doctest::Approx(100.0).epsilon(1e-15));
  CHECK(std::abs(m.cumulant(Vector{{1.0, 0.0}})) <= 1e-16);
  CHECK_THROWS_AS(BlackScholesModel(BS2DParams{}, Vector{{1.0, -1.0}}), InvalidArgument);
  CHECK_THROWS_AS(BlackScholesModel(BS2DParams{}, Vector{{1.0}}), DimensionMismatch);
}

TEST_CASE("Merton triplet") {
  const MertonParams p = fixtures::merton2d();
  const LevyTriplet t = merton_triplet(p);
  CHECK(t.truncation() == Truncation::Zero);
  CHECK(t.jumps().total_mass() == doctest::Approx(1.0).epsilon(1e-15));
  // b_1 = -sigma1^2/2 - lambda (e^{tau1^2/2} - 1)
  CHECK(std::abs(t.drift()(0) - (-0.02 - oracle::kMertonJumpIntegralE1)) <= 1e-12);
  for (int i = 0; i < 2; ++i) CHECK(std::abs(martingale_drift(t, i) - t.drift()(i)) <= 1e-14);

  const LevyTriplet tiny = merton_triplet(fixtures::merton2d(0.2, 0.3, 0.5, 1.0, 1.0, 1e-8, 1e-8));
  CHECK(std::abs(tiny.drift()(0) + 0.02) <= 1e-14);
  CHECK(std::abs(tiny.drift()(1) + 0.045) <= 1e-14);

  const LevyTriplet off = merton_triplet(fixtures::merton2d(0.2, 0.3, 0.5, 0.0, 1.0));
  CHECK(off.jumps().kind() == JumpMeasure::Kind::Empty);
  CHECK(MertonModel(fixtures::merton2d(0.2, 0.3, 0.5, 0.0, 1.0)).is_gaussian());

  MertonParams bad = p;
  bad.tau(0) = 0.0;
  CHECK_THROWS_AS(merton_triplet(bad), InvalidArgument);
  bad = p;
  bad.lambda = Vector{{1.0}};
  CHECK_THROWS_AS(merton_triplet(bad), DimensionMismatch);
}

TEST_CASE("Merton quanto dual in closed form") {
  for (double r : {0.5, -0.3}) {
    MertonParams p = fixtures::merton2d(0.2, 0.3, r, 1.0, 1.0, 0.25, 0.2);
    p.jump_corr = Matrix{{1.0, 0.4}, {0.4, 1.0}};
    const DualTriplet1D closed = merton_quanto_dual(p);
    const DualTriplet1D generic =
        dual_triplet(merton_triplet(p), EsscherFrame(Vector{{1.0, 0.0}}, Vector{{0.0, 1.0}}));
    CHECK(std::abs(closed.triplet.drift()(0) - generic.triplet.drift()(0)) <= 1e-10);
    CHECK(std::abs(closed.triplet.cov()(0, 0) - generic.triplet.cov()(0, 0)) <= 1e-10);
    const JumpSummary a = closed.triplet.jumps().summary_1d();
    const JumpSummary b = generic.triplet.jumps().summary_1d();
    CHECK(std::abs(a.mass - b.mass) <= 1e-10);
    CHECK(std::abs(a.mean - b.mean) <= 1e-10);
    CHECK(std::abs(a.variance - b.variance) <= 1e-10);
    // F^u(R) = int e^{x1} F(dx)
    CHECK(std::abs(a.mass - merton_triplet(p).jumps().laplace(CVector{{1.0, 0.0}}).real()) <= 1e-12);
    CHECK(a.mean == doctest::Approx(0.4 * 0.25 * 0.2).epsilon(1e-14));
    CHECK(closed.source == "merton2d");
  }
  CHECK_THROWS_AS(merton_quanto_dual(fixtures::merton3d()), DimensionMismatch);

  const DualTriplet1D ex = merton_quanto_dual(fixtures::merton2d(0.2, 0.3, 0.5, 1.0, 1.0, 1.0, 0.5));
  CHECK(ex.triplet.cov()(0, 0) == doctest::Approx(0.09).epsilon(1e-15));
  CHECK(ex.triplet.jumps().summary_1d().mass == doctest::Approx(1.6487212707001282).epsilon(1e-15));

  const MertonParams flat = fixtures::merton2d(0.2, 0.3, 0.0, 0.0, 1.0, 1.0, 0.5);
  const DualTriplet1D nf = merton_quanto_dual(flat);
  CHECK(nf.triplet.drift()(0) == merton_triplet(flat).drift()(1));
  CHECK(nf.triplet.jumps().kind() == JumpMeasure::Kind::Empty);

  const DualTriplet1D big = merton_quanto_dual(fixtures::merton2d(0.2, 0.3, 0.5, 2.0, 3.0, 1.0, 0.5));
  CHECK(big.triplet.jumps().summary_1d().mass == doctest::Approx(6.0 * std::exp(0.5)).epsilon(1e-15));
}

TEST_CASE("GH Radon transform") {
  const GHParams p = fixtures::nig_acceptance();
  const GH1DParams q = gh_radon(p, Vector{{1.0, 0.0}});
  CHECK(q.alpha == doctest::Approx(std::sqrt(25.0 - 0.01)).epsilon(1e-15));
  CHECK(q.beta == doctest::Approx(0.2).epsilon(1e-15));
  CHECK(q.delta == doctest::Approx(0.5).epsilon(1e-15));

  // Delta = I: alpha_u = sqrt((alpha^2 - |beta|^2)/|u|^2 + (u'beta/|u|^2)^2).
  const GHParams r = GHParams::nig(3.0, Vector{{0.4, -0.2}}, 0.8, Vector{{0.1, 0.2}});
  const Vector u{{-1.0, 1.0}};
  const GH1DParams qr = gh_radon(r, u);
  const double bu = u.dot(r.beta) / 2.0;
  CHECK(qr.alpha == doctest::Approx(std::sqrt((9.0 - 0.2) / 2.0 + bu * bu)).epsilon(1e-14));
  CHECK(qr.beta == doctest::Approx(bu).epsilon(1e-14));
  CHECK(qr.delta == doctest::Approx(0.8 * std::sqrt(2.0)).epsilon(1e-14));
  CHECK(qr.mu == doctest::Approx(0.1).epsilon(1e-14));

  const GHParams s = GHParams::nig(3.0, Vector{{0.5, -0.5}}, 1.0, Vector{{0.0, 0.0}});
  const GH1DParams qs = gh_radon(s, Vector{{1.0, 0.0}});
  CHECK(qs.alpha == doctest::Approx(oracle::kRadonAlpha).epsilon(1e-14));
  CHECK(qs.beta == 0.5);
  CHECK(qs.delta == 1.0);

  const GHParams sym = GHParams::nig(2.0, Vector{{0.0, 0.0}}, 0.7, Vector{{0.1, 0.3}});
  const GH1DParams q2 = gh_radon(sym, Vector{{0.0, 1.0}});
  CHECK(q2.alpha == 2.0);
  CHECK(q2.beta == 0.0);
  CHECK(q2.delta == 0.7);
  CHECK(q2.mu == 0.3);
  CHECK(q2.lambda == sym.lambda);
  CHECK(gh_radon(sym, Vector{{1.0, 1.0}}).delta == doctest::Approx(0.7 * std::sqrt(2.0)).epsilon(1e-15));

  CHECK_THROWS_AS(gh_radon(p, Vector{{0.0, 0.0}}), DegenerateDirection);
  CHECK_THROWS_AS(gh_radon(p, Vector{{1.0, 0.0, 0.0}}), DimensionMismatch);
}

TEST_CASE("GH Radon transform matches the projected cumulant") {
  for (const GHParams& p : {fixtures::nig_skewed(), fixtures::vg_example()}) {
    const GHModel m(p);
    for (const Vector& u : {Vector{{1.0, 0.0}}, Vector{{0.5, -1.5}}, Vector{{2.0, 1.0}}}) {
      const GH1DParams q = gh_radon(p, u);
      for (double z : {-0.6, -0.2, 0.3, 0.9}) {
        const Complex zc(z, 0.7);
        CHECK(std::abs(gh1d_cumulant(q, p.subclass, zc) - m.raw_cumulant(zc * u.cast<Complex>())) <= 1e-12);
      }
    }
  }
}

TEST_CASE("GH swap and quanto maps equal tilt then projection") {
  const std::vector<GHParams> cases = {
      fixtures::nig_acceptance(), fixtures::nig_skewed(), fixtures::vg_example(),
      GHParams::nig(3.0, Vector{{0.4, -0.2}}, 0.8, Vector{{0.1, 0.2}}, Matrix{{2.0, -0.5}, {-0.5, 0.625}})};
  for (const GHParams& p : cases) {
    const GHParams t = tilt(p, Vector{{1.0, 0.0}});
    check_gh1d(gh_swap_dual(p), gh_radon(t, Vector{{-1.0, 1.0}}), 1e-12);
    check_gh1d(gh_quanto_dual(p).params, gh_radon(t, Vector{{0.0, 1.0}}), 1e-12);
  }
  // Delta = I
  const GHParams p = fixtures::nig_acceptance();
  const GH1DParams sw = gh_swap_dual(p);
  CHECK(sw.beta == doctest::Approx((-0.1 - 1.2) / 2.0).epsilon(1e-15));
  CHECK(sw.delta == doctest::Approx(0.5 * std::sqrt(2.0)).epsilon(1e-15));
  const GH1DParams qd = gh_quanto_dual(p).params;
  CHECK(qd.alpha == doctest::Approx(std::sqrt(25.0 - 1.44)).epsilon(1e-15));
  CHECK(qd.beta == doctest::Approx(-0.1).epsilon(1e-15));

  CHECK_THROWS_AS(gh_swap_dual(GHParams::nig(1.0, Vector{{0.5, 0.0}}, 1.0, Vector{{0.0, 0.0}})),
                  DomainError);
}

TEST_CASE("GH quanto drift") {
  const GHQuantoDual q = gh_quanto_dual(fixtures::nig_skewed());
  REQUIRE(q.drift.has_value());
  CHECK(std::abs(q.drift_value() - oracle::kNigQuantoDriftQuadrature) <= 1e-8);

  GHParams g = fixtures::nig_skewed();
  g.subclass = GHSubclass::GeneralGH;
  g.lambda = 1.2;
  const GHQuantoDual gq = gh_quanto_dual(g);
  CHECK_FALSE(gq.drift.has_value());
  CHECK_THROWS_AS(gq.drift_value(), UnavailableDrift);
  CHECK(gq.params.lambda == 1.2);
}

TEST_CASE("GH drift offset calibrates to martingales") {
  const GHModel m(GHParams::nig(4.0, Vector{{0.0, 0.0}}, 1.0, Vector{{0.0, 0.0}}));
  CHECK(m.raw_cumulant(CVector{{1.0, 0.0}}).real() == doctest::Approx(oracle::kNigRawE1).epsilon(1e-14));
  CHECK(m.drift_offset()(0) == doctest::Approx(-oracle::kNigRawE1).epsilon(1e-14));
  CHECK(m.drift_offset()(1) == doctest::Approx(-oracle::kNigRawE1).epsilon(1e-14));
  for (int i = 0; i < 2; ++i) CHECK(std::abs(m.cumulant(unit_vector(2, i))) <= 1e-15);
  const GHModel v(fixtures::vg_example());
  for (int i = 0; i < 2; ++i) CHECK(std::abs(v.cumulant(unit_vector(2, i))) <= 1e-15);
  CHECK_THROWS_AS(GHModel(GHParams::nig(1.0, Vector{{0.5, 0.0}}, 1.0, Vector{{0.0, 0.0}})), DomainError);
}

TEST_CASE("GeneralGH refuses closed-form operations") {
  GHParams g = fixtures::nig_skewed();
  g.subclass = GHSubclass::GeneralGH;
  g.lambda = 0.7;
  const GHModel m(g);
  CHECK_FALSE(m.supports_sampling());
  CHECK_THROWS_AS(m.cumulant(CVector{{0.5, 0.0}}), UnsupportedModel);
  CHECK_THROWS_AS(m.triplet(), UnsupportedModel);
  CHECK_THROWS_AS(m.drift_offset(), UnsupportedModel);
  CHECK_THROWS_AS(gh_levy_density(g, Vector{{0.1, 0.1}}), UnsupportedModel);
  CHECK_THROWS_AS(gh1d_cumulant(gh_radon(g, Vector{{1.0, 0.0}}), GHSubclass::GeneralGH, 0.5),
                  UnsupportedModel);
  CHECK_THROWS_AS(sample_terminal(m, 1.0, 10, 1), UnsupportedModel);
  CHECK_NOTHROW(gh_swap_dual(g));
}

TEST_CASE("GH Levy densities") {
  const Vector x{{0.3, -0.5}};
  const GHParams nig = GHParams::nig(3.0, Vector{{0.4, -0.2}}, 0.8, Vector{{0.0, 0.0}});
  CHECK(gh_levy_density(nig, x) == doctest::Approx(oracle::kNigDensityMix).epsilon(1e-10));
  const GHParams vg = GHParams::vg(1.3, 3.0, Vector{{0.4, -0.2}}, Vector{{0.0, 0.0}});
  CHECK(gh_levy_density(vg, x) == doctest::Approx(oracle::kVgDensityMix).epsilon(1e-10));

  // Bessel forms against Boost.
  const GHParams s = fixtures::nig_skewed();
  const Matrix inv = s.Delta.inverse();
  for (const Vector& y : {Vector{{0.01, 0.02}}, Vector{{-1.0, 0.7}}, Vector{{2.5, -3.0}}}) {
    const double r = std::sqrt(y.dot(inv * y));
    const double k = boost::math::cyl_bessel_k(1.5, s.alpha * r);
    const double expect = 2.0 * s.delta * std::pow(s.alpha / (2.0 * std::numbers::pi), 1.5) *
                          std::exp(s.beta.dot(y)) * k / std::pow(r, 1.5);
    CHECK(gh_levy_density(s, y) == doctest::Approx(expect).epsilon(1e-12));
    const GHParams v = fixtures::vg_example();
    const double rv = y.norm();
    const double ev = v.lambda * v.alpha * std::exp(v.beta.dot(y)) *
                      boost::math::cyl_bessel_k(1.0, v.alpha * rv) / (std::numbers::pi * rv);
    CHECK(gh_levy_density(v, y) == doctest::Approx(ev).epsilon(1e-12));
  }
  CHECK_THROWS_AS(gh_levy_density(s, Vector{{0.0, 0.0}}), InvalidArgument);
}

TEST_CASE("GH cumulant agrees with the Levy density") {
  const Vector w{{0.5, 0.3}};
  for (const GHParams& p : {fixtures::nig_skewed(), fixtures::vg_example()}) {
    const GHModel m(p);
    const double lhs = m.cumulant(w) - w.dot(m.mean_rate());
    const double rhs = compensated_integral(p, w, 12.0);
    CHECK(std::abs(lhs - rhs) <= 1e-6);
  }
}

TEST_CASE("GH triplet canonical drift") {
  const LevyTriplet t = GHModel(fixtures::nig_skewed()).triplet();
  CHECK(t.truncation() == Truncation::Canonical);
  CHECK(t.jumps().kind() == JumpMeasure::Kind::GHDensity);
  CHECK(std::abs(t.drift()(0) - oracle::kNigCanonicalDrift1) <= 1e-8);
  CHECK(std::abs(t.drift()(1) - oracle::kNigCanonicalDrift2) <= 1e-8);
}

TEST_CASE("GH one-dimensional cumulant") {
  const GH1DParams q{-0.5, 3.0, 0.5, 1.0, 0.1};
  CHECK(gh1d_cumulant(q, GHSubclass::NIG, 0.0) == Complex(0.0, 0.0));
  CHECK(gh1d_cumulant(q, GHSubclass::NIG, 1.0).real() ==
        doctest::Approx(0.1 + std::sqrt(8.75) - std::sqrt(6.75)).epsilon(1e-14));
  CHECK(gh1d_admissible(q, GHSubclass::NIG, 2.5));
  CHECK_FALSE(gh1d_admissible(q, GHSubclass::VG, 2.5));
  CHECK_THROWS_AS(gh1d_cumulant(q, GHSubclass::NIG, 2.6), DomainError);
}

TEST_CASE("sampler moments match the cumulant") {
  const std::int64_t n = 200000;
  const BlackScholesModel bs(BS2DParams{0.3, 0.2, 0.5});
  const MertonModel mer(fixtures::merton2d(0.2, 0.3, 0.5, 1.0, 1.0, 0.25, 0.2));
  const GHModel nig(fixtures::nig_skewed());
  const GHModel vg(fixtures::vg_example());
  const double T = 0.75;
  for (const Model* m : std::vector<const Model*>{&bs, &mer, &nig, &vg}) {
    CAPTURE(m->name());
    const RowMatrix x = sample_terminal(*m, T, n, 11);
    const Moments mo = moments(x);
    const double h = 1e-4;
    for (int i = 0; i < 2; ++i) {
      const Vector e = unit_vector(2, i);
      const double mean = T * (m->cumulant(Vector(h * e)) - m->cumulant(Vector(-h * e))) / (2 * h);
      const double var =
          T * (m->cumulant(Vector(h * e)) + m->cumulant(Vector(-h * e))) / (h * h);
      CHECK(std::abs(mo.mean(i) - mean) <= 5.0 * std::sqrt(var / n));
      CHECK(std::abs(mo.cov(i, i) / var - 1.0) <= 0.03);
    }
    // Empirical characteristic function.
    for (const Vector& u : {Vector{{1.0, 0.0}}, Vector{{0.7, -1.2}}, Vector{{2.0, 1.5}}}) {
      Complex acc = 0.0;
      for (Eigen::Index r = 0; r < x.rows(); ++r) acc += std::exp(Complex(0.0, u.dot(x.row(r).transpose())));
      acc /= static_cast<double>(n);
      const Complex expect = std::exp(T * m->cumulant(CVector(Complex(0.0, 1.0) * u.cast<Complex>())));
      CHECK(std::abs(acc - expect) <= 5.0 / std::sqrt(static_cast<double>(n)));
    }
    CHECK(x.allFinite());
    CHECK((x.array().exp() > 0.0).all());
  }
}

TEST_CASE("NIG cumulant by Monte Carlo") {
  const GHModel m(fixtures::nig_skewed());
  const RowMatrix x = sample_terminal(m, 1.0, 400000, 3);
  const Vector w{{0.4, 0.6}};
  const Eigen::ArrayXd e = (x * w).array().exp();
  const double mean = e.mean();
  const double se = std::sqrt((e - mean).square().sum() / (e.size() - 1) / e.size());
  CHECK(std::abs(mean - std::exp(m.cumulant(w))) <= 5.0 * se);
}

TEST_CASE("terminal sampling is deterministic across workers") {
  const GHModel m(fixtures::nig_acceptance(), Vector{{100.0, 90.0}});
  const std::int64_t n = 3 * kBlockSize + 17;
  const RowMatrix a = sample_terminal(m, 1.0, n, 99, 1);
  const RowMatrix b = sample_terminal(m, 1.0, n, 99, 4);
  const RowMatrix c = sample_terminal(m, 1.0, n, 99, 8);
  CHECK(a == b);
  CHECK(a == c);
  CHECK(a != sample_terminal(m, 1.0, n, 100, 1));
  CHECK(a.row(0)(0) != 0.0);
  CHECK(std::abs(a.col(0).mean() - std::log(100.0)) < 0.1);
  CHECK_THROWS_AS(sample_terminal(m, 0.0, 10, 1), InvalidArgument);
  CHECK_THROWS_AS(sample_terminal(m, 1.0, 0, 1), InvalidArgument);
}

TEST_CASE("antithetic rows negate the Gaussian part") {
  const BlackScholesModel m(BS2DParams{0.3, 0.2, 0.5});
  RowMatrix out(4, 2);
  Rng rng = make_stream(5, 0);
  m.sample_increments(1.0, rng, out, true);
  const Vector drift = m.triplet().drift();
  CHECK((out.row(0) + out.row(1) - 2.0 * drift.transpose()).norm() <= 1e-15);
  RowMatrix odd(3, 2);
  CHECK_THROWS_AS(m.sample_increments(1.0, rng, odd, true), InvalidArgument);
}

TEST_CASE("triplet-backed model") {
  const TripletModel m(with_martingale_drift(fixtures::atoms_2d(Truncation::Zero)));
  CHECK(std::abs(m.cumulant(Vector{{1.0, 0.0}})) <= 1e-14);
  const RowMatrix x = sample_terminal(m, 1.0, 200000, 8);
  for (int i = 0; i < 2; ++i) {
    const Eigen::ArrayXd e = x.col(i).array().exp();
    const double se = std::sqrt((e - e.mean()).square().sum() / (e.size() - 1) / e.size());
    CHECK(std::abs(e.mean() - 1.0) <= 5.0 * se);
  }
  const TripletModel g(merton_triplet(fixtures::merton2d()));
  CHECK(std::abs(g.cumulant(CVector{{Complex(0.3, 1.0), Complex(-0.2, 0.5)}}) -
                 MertonModel(fixtures::merton2d()).cumulant(CVector{{Complex(0.3, 1.0), Complex(-0.2, 0.5)}})) <=
        1e-12);
}

}  // TEST_SUITE
