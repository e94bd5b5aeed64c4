#include "doctest.h"

#include "rhls/exponents.hpp"
#include "rhls/extremal.hpp"
#include "rhls/geometry.hpp"
#include "rhls/norms.hpp"
#include "rhls/special.hpp"

#include <cmath>
#include <random>
#include <vector>

using namespace rhls;

namespace {

const double kPi = 3.14159265358979323846;

std::vector<double> random_point(std::mt19937_64& rng, int n, double scale) {
  std::normal_distribution<double> z(0.0, scale);
  std::vector<double> x(n);
  for (double& c : x) c = z(rng);
  return x;
}

double norm2(const std::vector<double>& x) {
  double s = 0.0;
  for (double c : x) s += c * c;
  return std::sqrt(s);
}

double dist(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

}  // namespace

TEST_SUITE("geometry") {

TEST_CASE("stereographic lift round-trips and hits the poles") {
  std::mt19937_64 rng(101);
  for (int n : {1, 2, 3}) {
    CAPTURE(n);
    for (int trial = 0; trial < 50; ++trial) {
      const std::vector<double> x = random_point(rng, n, 2.0);
      const std::vector<double> xi = stereo_lift_point(x);
      REQUIRE(xi.size() == std::size_t(n) + 1);
      CHECK(norm2(xi) == doctest::Approx(1.0).epsilon(1e-13));
      const std::vector<double> back = stereo_drop_point(xi);
      for (int i = 0; i < n; ++i)
        CHECK(back[i] == doctest::Approx(x[i]).epsilon(1e-12));
    }
    const std::vector<double> origin(n, 0.0);
    const std::vector<double> north = stereo_lift_point(origin);
    CHECK(north.back() == doctest::Approx(1.0).epsilon(1e-15));
    std::vector<double> far(n, 0.0);
    far[0] = 1e9;
    CHECK(stereo_lift_point(far).back() ==
          doctest::Approx(-1.0).epsilon(1e-8));
  }
}

TEST_CASE("chordal distance closed form") {
  std::mt19937_64 rng(103);
  for (int n : {1, 2, 3}) {
    for (int trial = 0; trial < 70; ++trial) {
      const std::vector<double> x = random_point(rng, n, 3.0);
      const std::vector<double> y = random_point(rng, n, 3.0);
      const double nx = norm2(x), ny = norm2(y);
      const double formula = 2.0 * dist(x, y) /
                             std::sqrt((1.0 + nx * nx) * (1.0 + ny * ny));
      CAPTURE(n);
      CAPTURE(trial);
      CHECK(chordal_distance(x, y) == doctest::Approx(formula).epsilon(1e-12));
      CHECK(dist(stereo_lift_point(x), stereo_lift_point(y)) ==
            doctest::Approx(formula).epsilon(1e-12));
    }
  }
}

TEST_CASE("point inversion is an involution fixing its sphere") {
  std::mt19937_64 rng(107);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + int(trial % 3);
    KelvinParams kp(random_point(rng, n, 1.0), 0.5 + 2.0 * (trial % 5));
    std::vector<double> x = random_point(rng, n, 2.0);
    if (dist(x, kp.center) < 1e-6) x[0] += 1.0;
    const std::vector<double> once = kelvin_point(x, kp);
    const std::vector<double> twice = kelvin_point(once, kp);
    for (int i = 0; i < n; ++i)
      CHECK(twice[i] == doctest::Approx(x[i]).epsilon(1e-11));
    // A point on the inversion sphere stays put.
    std::vector<double> s = kp.center;
    s[0] += kp.lambda;
    const std::vector<double> fixed = kelvin_point(s, kp);
    for (int i = 0; i < n; ++i)
      CHECK(fixed[i] == doctest::Approx(s[i]).epsilon(1e-12));
  }
  CHECK(KelvinParams().centered_at_origin());
  CHECK_FALSE(KelvinParams({1.0}, 1.0).centered_at_origin());
}

TEST_CASE("polar-angle coordinates stay inside (0, pi)") {
  CHECK(lift_angle(0.0) == doctest::Approx(0.5 * kPi).epsilon(1e-15));
  for (double u = -20.0; u <= 20.0; u += 0.5) {
    const double th = lift_angle(u);
    CHECK(th > 0.0);
    CHECK(th < kPi);
    // Angles approaching pi are stored with absolute ulp error only, which
    // drops back as ~cosh(u) * ulp in the log radius (measured factor 1.3).
    const double envelope =
        1e-12 * (1.0 + std::fabs(u)) + 1e-15 * std::cosh(u);
    CHECK(std::fabs(drop_log_radius(th) - u) <= envelope);
  }
}

TEST_CASE("lift transports measure and critical quasi-norms") {
  for (int n : {1, 2}) {
    const double alpha = n + 1.0;
    const ExponentSet exps = make_critical_exponents(n, alpha);
    const RadialFn f = extremal_rn({1.0, 1.0}, exps, 20.0, 1025);
    const ZonalFn F = lift_function(f, exps);
    REQUIRE(F.size() == f.size());
    CAPTURE(n);
    // Total lifted weight = |S^n| once the window covers both tails.
    double wsum = 0.0;
    for (double w : F.weights) wsum += w;
    CHECK(wsum == doctest::Approx(sphere_area(n)).epsilon(1e-8));
    // Node-by-node critical norm transport.
    CHECK(lp_quasi_norm(F, exps.p) ==
          doctest::Approx(lp_quasi_norm(f, exps.p)).epsilon(1e-10));
    // Round trip.
    const RadialFn back = drop_function(F, exps);
    for (std::size_t k = 0; k < f.size(); ++k) {
      CHECK(back.log_radii[k] ==
            doctest::Approx(f.log_radii[k]).epsilon(1e-12));
      CHECK(back.values[k] ==
            doctest::Approx(f.values[k]).epsilon(1e-12));
    }
  }
}

TEST_CASE("dilation: lattice shifts are exact, norms are invariant") {
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const RadialFn f = extremal_rn({1.0, 1.0}, exps, 16.0, 513);
  const double h = f.step();

  SUBCASE("aligned shift") {
    const double lam = std::exp(8.0 * h);
    const DilationResult d = dilate(f, lam, exps);
    CHECK(d.aligned);
    const double amp = std::pow(lam, -1.0 / exps.p);
    for (std::size_t k = 8; k < f.size(); ++k)
      CHECK(d.fn.values[k] ==
            doctest::Approx(amp * f.values[k - 8]).epsilon(1e-14));
  }

  SUBCASE("quasi-norm invariance across lambda") {
    const double base = lp_quasi_norm(f, exps.p);
    // Non-lattice shifts go through the monotone-cubic resample, whose norm
    // drift at this step size (h = 1/16) measures ~2e-5.
    for (double lam : {0.25, 0.7, 1.3, 4.0}) {
      CAPTURE(lam);
      const DilationResult d = dilate(f, lam, exps);
      CHECK(d.clipped_mass_fraction < 1e-6);
      CHECK(lp_quasi_norm(d.fn, exps.p) ==
            doctest::Approx(base).epsilon(1e-4));
    }
  }
}

TEST_CASE("radial inversion: solution profile is self-inverse at lambda = d") {
  for (int n : {1, 2}) {
    for (double alpha : {n + 1.0, n + 2.0}) {
      CAPTURE(n);
      CAPTURE(alpha);
      const ExponentSet exps = make_critical_exponents(n, alpha);
      const RadialFn grid = make_log_grid(n, 16.0, 513);
      std::vector<double> w(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k) {
        const double r = std::exp(grid.log_radii[k]);
        w[k] = std::pow(r * r + 1.0, 0.5 * (alpha - n));
      }
      const RadialFn prof(grid.log_radii, w, n);
      const RadialFn refl =
          kelvin_transform(prof, KelvinParams({}, 1.0), exps);
      for (std::size_t k = 0; k < prof.size(); ++k) {
        CHECK(refl.values[k] ==
              doctest::Approx(prof.values[k]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("radial inversion is an involution inside the shared window") {
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const RadialFn grid = make_log_grid(1, 12.0, 385);
  std::vector<double> vals(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    vals[k] = 1.0 / (1.0 + std::exp(grid.log_radii[k]));
  const RadialFn f(grid.log_radii, vals, 1);
  const double lam = std::exp(4.0 * f.step());
  const RadialFn twice = kelvin_transform(
      kelvin_transform(f, KelvinParams({}, lam), exps), KelvinParams({}, lam),
      exps);
  const double shift = 2.0 * std::log(lam);
  for (std::size_t k = 0; k < f.size(); ++k) {
    const double u = f.log_radii[k];
    // Reflected source must lie inside the window both times.
    if (shift - u < f.log_radii.front() || shift - u > f.log_radii.back())
      continue;
    CHECK(twice.values[k] == doctest::Approx(f.values[k]).epsilon(1e-12));
  }
}

}  // TEST_SUITE
