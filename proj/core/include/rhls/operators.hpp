#pragma once

#include "rhls/exponents.hpp"
#include "rhls/grids.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace rhls {

// Azimuthally averaged kernel (2 - 2 cos gamma)^{(alpha-n)/2} between polar
// angles, tabulated on a Gauss zonal grid.  Assembled from the truncated
// harmonic expansion sum_l mu_l G_l(x)G_l(x') / |G_l|^2 (degree <= m-1 with
// discrete norms), which keeps the matrix symmetric and makes every row sum
// against the grid weights equal kernel_integral(n, alpha) to machine
// precision (discrete orthogonality of the retained polynomials).
struct ZonalKernelMatrix {
  ZonalFn grid;                // Gauss grid carrying angles and weights
  std::vector<double> kernel;  // m x m row-major, symmetric
  int n = 0;
  double alpha = 0.0;
  std::size_t degree = 0;      // highest retained harmonic degree
  double min_entry = 0.0;      // smallest kernel value (positivity diagnostic)

  std::size_t size() const { return grid.size(); }
  double kernel_at(std::size_t j, std::size_t k) const {
    return kernel[j * size() + k];
  }
  double weighted_entry(std::size_t j, std::size_t k) const {
    return kernel_at(j, k) * grid.weights[k];
  }
  double row_sum(std::size_t j) const;
  std::vector<double> row_sums() const;
  // H_j = sum_k kernel[j][k] w_k F_k; row-parallel with a fixed in-row
  // summation order, so results are identical for every thread count.
  std::vector<double> apply(const std::vector<double>& values) const;
};

ZonalKernelMatrix make_kernel_matrix(int n, double alpha, std::size_t m = 256);

// Direct azimuthal average: two-point mean over the azimuth for n = 1, a
// 128-node Gauss-Legendre integral for n >= 2.  Independent cross-check of
// the expansion-based matrix entries.
double zonal_kernel_direct(int n, double alpha, double theta, double theta_p);

ZonalFn sphere_operator(const ZonalKernelMatrix& K, const ZonalFn& F);
ZonalFn sphere_operator(const ZonalFn& F, const ExponentSet& exps);

// Evaluate the operator output at arbitrary polar angles by harmonic
// synthesis (F must live on the Gauss grid).  Lets the sphere route be
// compared with the radial route on a lifted log grid.
std::vector<double> sphere_operator_at(const ZonalFn& F, double alpha,
                                       const std::vector<double>& thetas);

struct RadialOpResult {
  RadialFn fn;
  double truncation_estimate = 0.0;  // est. window-truncation tail / result
  bool truncation_warning = false;   // estimate exceeded 1e-8
  bool degenerate = false;           // input was identically zero
};

// Riesz-type potential of a radial function via the log-coordinate
// convolution H = L_n * F with F(u) = e^{un/p} f(e^u), unwrapped through
// h(r) = r^{-n/q} H(ln r).  Direct O(m^2) summation (trapezoid weights).
RadialOpResult radial_operator(const RadialFn& f, const ExponentSet& exps);

enum class SplitPart { near, far };

// Restriction of the potential to |y - x| <= rho (near) or > rho (far);
// the angular integral is cut exactly at the indicator boundary, so
// near + far reproduces the one-piece kernel.
RadialFn split_operator(const RadialFn& f, double rho, SplitPart part,
                        const ExponentSet& exps);

struct McResult {
  std::vector<double> values;
  std::vector<double> stderrs;
};

// Monte Carlo estimate of the potential at the given points, importance
// sampling from the density proportional to (1 + |y|^2)^{-n} (the critical
// p-th power of the extremal profile; keeps the weights bounded for every
// alpha > n).  Deterministic for a fixed seed, independent of threading.
McResult mc_operator(const std::function<double(const std::vector<double>&)>& f,
                     int n, double alpha,
                     const std::vector<std::vector<double>>& points,
                     std::size_t samples, std::uint64_t seed);

}  // namespace rhls
