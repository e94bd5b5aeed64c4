#include "doctest.h"

#include "rhls/exponents.hpp"
#include "rhls/quadrature.hpp"
#include "rhls/special.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

using namespace rhls;

namespace {

const double kPi = 3.14159265358979323846;

// Gegenbauer family normalized to 1 at the right endpoint, written here from
// the classical special cases so the check is independent of the library's
// recurrence: Chebyshev for S^1 slices (n = 1), Legendre for S^2 (n = 2).
double zonal_poly(int n, int l, double x) {
  if (n == 1) return std::cos(l * std::acos(std::max(-1.0, std::min(1.0, x))));
  double pm = 1.0, pc = x;
  if (l == 0) return 1.0;
  for (int k = 1; k < l; ++k) {
    const double pn = ((2.0 * k + 1.0) * x * pc - k * pm) / (k + 1.0);
    pm = pc;
    pc = pn;
  }
  return pc;
}

}  // namespace

TEST_SUITE("special") {

TEST_CASE("log_gamma against textbook values") {
  CHECK(log_gamma(0.5) == doctest::Approx(0.5 * std::log(kPi)).epsilon(1e-14));
  CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-14));
  // Gamma(7.5) = (0.5)(1.5)...(6.5) sqrt(pi), accumulated explicitly.
  double g = std::sqrt(kPi);
  for (double x = 0.5; x < 7.0; x += 1.0) g *= x;
  CHECK(log_gamma(7.5) == doctest::Approx(std::log(g)).epsilon(1e-13));
  CHECK_THROWS_AS((void)log_gamma(0.0), std::invalid_argument);
  CHECK_THROWS_AS((void)log_gamma(-1.5), std::invalid_argument);
}

TEST_CASE("sphere areas and ball volumes") {
  CHECK(sphere_area(0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(sphere_area(1) == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(sphere_area(2) == doctest::Approx(4.0 * kPi).epsilon(1e-15));
  CHECK(sphere_area(3) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-15));
  CHECK(ball_volume(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ball_volume(2) == doctest::Approx(kPi).epsilon(1e-15));
  CHECK(ball_volume(3) == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-15));
  // |S^{n-2}| = (n-1) omega_{n-1}: ties the two normalizations together.
  for (int n = 2; n <= 6; ++n) {
    CAPTURE(n);
    CHECK(sphere_area(n - 2) ==
          doctest::Approx((n - 1) * ball_volume(n - 1)).epsilon(1e-14));
  }
}

TEST_CASE("closed-form sharp constants and kernel integrals") {
  CHECK(sharp_constant(1, 2.0) ==
        doctest::Approx(2.0 / (kPi * kPi)).epsilon(1e-14));
  CHECK(sharp_constant(2, 4.0) ==
        doctest::Approx(1.0 / (2.0 * kPi)).epsilon(1e-14));
  CHECK(sharp_constant(1, 3.0) ==
        doctest::Approx(1.0 / (2.0 * kPi * kPi)).epsilon(1e-14));
  CHECK(sharp_constant(2, 3.0) ==
        doctest::Approx(2.0 / (3.0 * std::sqrt(kPi))).epsilon(1e-14));
  CHECK(kernel_integral(1, 2.0) == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(kernel_integral(2, 3.0) ==
        doctest::Approx(16.0 * kPi / 3.0).epsilon(1e-14));
  CHECK(kernel_integral(2, 4.0) == doctest::Approx(8.0 * kPi).epsilon(1e-14));
  CHECK_THROWS_AS((void)sharp_constant(2, 2.0), std::invalid_argument);
  CHECK_THROWS_AS((void)kernel_integral(1, 0.5), std::invalid_argument);
}

TEST_CASE("sharp constant equals |S^n|^{-alpha/n} times the kernel integral") {
  for (int n : {1, 2}) {
    for (double da : {0.5, 1.0, 2.0}) {
      const double alpha = n + da;
      CAPTURE(n);
      CAPTURE(alpha);
      const double route =
          std::pow(sphere_area(n), -alpha / n) * kernel_integral(n, alpha);
      CHECK(sharp_constant(n, alpha) == doctest::Approx(route).epsilon(1e-12));
    }
  }
}

TEST_CASE("kernel eigenvalues against a Gauss-Jacobi quadrature oracle") {
  // mu_l = |S^{n-1}| 2^{(alpha-n)/2} int_{-1}^{1} (1-t)^{(alpha-2)/2}
  //        (1+t)^{(n-2)/2} P_l(t) dt with P_l(1) = 1.
  for (int n : {1, 2}) {
    for (double alpha : {n + 1.0, n + 2.5}) {
      CAPTURE(n);
      CAPTURE(alpha);
      const std::vector<double> mu = kernel_eigenvalues(n, alpha, 8);
      REQUIRE(mu.size() == 9);
      CHECK(mu[0] == doctest::Approx(kernel_integral(n, alpha)).epsilon(1e-14));
      const QuadratureRule gj =
          gauss_jacobi(64, 0.5 * (alpha - 2.0), 0.5 * (n - 2.0));
      const double front = sphere_area(n - 1) * std::pow(2.0, 0.5 * (alpha - n));
      for (int l = 0; l <= 8; ++l) {
        double s = 0.0;
        for (std::size_t i = 0; i < gj.nodes.size(); ++i)
          s += gj.weights[i] * zonal_poly(n, l, gj.nodes[i]);
        CAPTURE(l);
        CHECK(mu[l] == doctest::Approx(front * s).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("eigenvalue signs and decay") {
  // (n-alpha)/2 + l flips the sign until l passes (alpha-n)/2; afterwards the
  // ratio is positive and the magnitudes decrease.
  const std::vector<double> mu = kernel_eigenvalues(1, 2.0, 12);
  CHECK(mu[0] > 0.0);
  CHECK(mu[1] < 0.0);  // ratio at l=0 is (n-alpha)/(n+alpha) < 0
  for (int l = 2; l <= 12; ++l) {
    CAPTURE(l);
    CHECK(std::fabs(mu[l]) < std::fabs(mu[l - 1]));
  }
}

TEST_CASE("log-coordinate kernels reduce to elementary closed forms") {
  const ExponentSet e12 = make_critical_exponents(1, 2.0);
  const ExponentSet e13 = make_critical_exponents(1, 3.0);
  for (double u : {-6.0, -1.25, -0.5, 0.0, 0.5, 1.25, 6.0}) {
    CAPTURE(u);
    // (1,2): L(u) = 2 e^{|u|/2}; (1,3): L(u) = 4 cosh u.
    CHECK(ln_kernel(1, 2.0, u, e12) ==
          doctest::Approx(2.0 * std::exp(0.5 * std::fabs(u))).epsilon(1e-13));
    CHECK(ln_kernel(1, 3.0, u, e13) ==
          doctest::Approx(4.0 * std::cosh(u)).epsilon(1e-13));
    // (2,4): Z(u) = 2 pi cosh u (the angular integral is linear in cos t).
    CHECK(zn_kernel(2, 4.0, u) ==
          doctest::Approx(2.0 * kPi * std::cosh(u)).epsilon(1e-12));
  }
}

TEST_CASE("angular kernel grows with |u|") {
  for (int n : {1, 2, 3}) {
    const double alpha = n + 1.5;
    CAPTURE(n);
    double prev = zn_kernel(n, alpha, 0.0);
    for (double u = 0.25; u <= 8.0; u += 0.25) {
      const double cur = zn_kernel(n, alpha, u);
      CHECK(cur >= prev * (1.0 - 1e-14));
      prev = cur;
    }
  }
}

}  // TEST_SUITE
