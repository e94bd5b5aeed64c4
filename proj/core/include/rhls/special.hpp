#pragma once

#include "rhls/exponents.hpp"

#include <cstddef>
#include <vector>

namespace rhls {

// log Gamma on (0, inf); rejects x <= 0.
double log_gamma(double x);

// Surface measure of the unit sphere S^n in R^{n+1}; |S^0| = 2.
double sphere_area(int n);

// Volume of the unit ball in R^n; omega_0 = 1.
double ball_volume(int n);

// Sharp constant N*(n, alpha) of the reversed HLS inequality,
//   N* = pi^{(n-alpha)/2} * Gamma(alpha/2)/Gamma(n/2+alpha/2)
//        * (Gamma(n/2)/Gamma(n))^{-alpha/n},
// evaluated in log space.  Requires alpha > n.
double sharp_constant(int n, double alpha);

// int_{S^n} |xi - eta|^{alpha - n} d eta  (independent of xi),
//   = 2^{alpha-1} |S^{n-1}| Gamma(n/2) Gamma(alpha/2) / Gamma((n+alpha)/2).
double kernel_integral(int n, double alpha);

// Funk-Hecke eigenvalue of the kernel |xi - eta|^{alpha-n} on degree-l zonal
// harmonics: mu_0 = kernel_integral, mu_{l+1} = mu_l * ((n-alpha)/2 + l) /
// ((n+alpha)/2 + l).  Returned for l = 0..L.
std::vector<double> kernel_eigenvalues(int n, double alpha, std::size_t L);

// Angular factor of the radial kernel in logarithmic coordinates:
//   Z_n(u) = (cosh u + 1)^{(alpha-n)/2} + (cosh u - 1)^{(alpha-n)/2}   (n = 1)
//   Z_n(u) = (n-1) omega_{n-1} int_0^pi (cosh u - cos t)^{(alpha-n)/2}
//            (sin t)^{n-2} dt                                          (n >= 2)
// The n >= 2 integral uses a fixed 128-node Gauss-Legendre rule.
double zn_kernel(int n, double alpha, double u);

// Log-coordinate convolution kernel
//   L_n(u) = 2^{(alpha-n)/2} e^{u (n/q - (n-alpha)/2)} Z_n(u),
// with q taken from exps (which must carry the same n, alpha).
double ln_kernel(int n, double alpha, double u, const ExponentSet& exps);

}  // namespace rhls
