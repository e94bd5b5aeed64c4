#include "rhls/special.hpp"

#include "rhls/quadrature.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rhls {

namespace {
constexpr double kPi = std::numbers::pi;

void require_reversed(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("need n >= 1");
  if (!(alpha > n)) throw std::invalid_argument("need alpha > n");
}
}  // namespace

double log_gamma(double x) {
  if (!(x > 0.0)) throw std::invalid_argument("log_gamma: need x > 0");
  return std::lgamma(x);
}

double sphere_area(int n) {
  if (n < 0) throw std::invalid_argument("sphere_area: need n >= 0");
  return 2.0 * std::exp(0.5 * (n + 1) * std::log(kPi) - log_gamma(0.5 * (n + 1)));
}

double ball_volume(int n) {
  if (n < 0) throw std::invalid_argument("ball_volume: need n >= 0");
  if (n == 0) return 1.0;
  return std::exp(0.5 * n * std::log(kPi) - log_gamma(0.5 * n + 1.0));
}

double sharp_constant(int n, double alpha) {
  require_reversed(n, alpha);
  const double log_value =
      0.5 * (n - alpha) * std::log(kPi) + log_gamma(0.5 * alpha) -
      log_gamma(0.5 * (n + alpha)) +
      (alpha / n) * (log_gamma(double(n)) - log_gamma(0.5 * n));
  return std::exp(log_value);
}

double kernel_integral(int n, double alpha) {
  require_reversed(n, alpha);
  const double log_value = (alpha - 1.0) * std::log(2.0) +
                           std::log(sphere_area(n - 1)) + log_gamma(0.5 * n) +
                           log_gamma(0.5 * alpha) - log_gamma(0.5 * (n + alpha));
  return std::exp(log_value);
}

std::vector<double> kernel_eigenvalues(int n, double alpha, std::size_t L) {
  require_reversed(n, alpha);
  std::vector<double> mu(L + 1);
  mu[0] = kernel_integral(n, alpha);
  const double lo = 0.5 * (n - alpha), hi = 0.5 * (n + alpha);
  for (std::size_t l = 0; l < L; ++l)
    mu[l + 1] = mu[l] * (lo + double(l)) / (hi + double(l));
  return mu;
}

double zn_kernel(int n, double alpha, double u) {
  require_reversed(n, alpha);
  const double e = 0.5 * (alpha - n);  // positive, so no singularity at u = 0
  const double c = std::cosh(u);
  if (n == 1) return std::pow(c + 1.0, e) + std::pow(c - 1.0, e);

  static const QuadratureRule azimuth = map_to_interval(gauss_legendre(128), 0.0, kPi);
  double acc = 0.0;
  for (std::size_t k = 0; k < azimuth.nodes.size(); ++k) {
    const double t = azimuth.nodes[k];
    double f = std::pow(c - std::cos(t), e);
    if (n > 2) f *= std::pow(std::sin(t), double(n - 2));
    acc += azimuth.weights[k] * f;
  }
  return (n - 1) * ball_volume(n - 1) * acc;
}

double ln_kernel(int n, double alpha, double u, const ExponentSet& exps) {
  if (exps.n != n || exps.alpha != alpha)
    throw std::invalid_argument("ln_kernel: exponent set carries different (n, alpha)");
  const double s = double(n) / exps.q - 0.5 * (n - alpha);
  return std::pow(2.0, 0.5 * (alpha - n)) * std::exp(u * s) * zn_kernel(n, alpha, u);
}

}  // namespace rhls
