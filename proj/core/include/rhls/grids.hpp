#pragma once

#include <cstddef>
#include <vector>

namespace rhls {

// Zonal function on S^n: samples of F(theta) on a polar-angle grid carrying
// its own quadrature weights, so that sum_k weights[k] * g(values[k])
// approximates the full sphere integral of g(F).
struct ZonalFn {
  std::vector<double> angles;   // polar angles in (0, pi)
  std::vector<double> weights;  // positive; sum ~ |S^n|
  std::vector<double> values;   // nonnegative samples
  int n = 0;

  ZonalFn() = default;
  ZonalFn(std::vector<double> angles, std::vector<double> weights,
          std::vector<double> values, int n);
  std::size_t size() const { return angles.size(); }
};

// Radial function on R^n sampled on a uniform grid in u = ln r.
struct RadialFn {
  std::vector<double> log_radii;  // uniform, increasing
  std::vector<double> values;     // nonnegative samples
  int n = 0;

  RadialFn() = default;
  RadialFn(std::vector<double> log_radii, std::vector<double> values, int n);
  std::size_t size() const { return log_radii.size(); }
  double step() const;
  // Lebesgue measure of R^n carried by each node under the trapezoid rule:
  // |S^{n-1}| e^{n u_k} h (halved at the ends).
  std::vector<double> measure_weights() const;
};

// Nonnegative step function on an interval partition.
struct SampledFn1D {
  std::vector<double> edges;   // strictly increasing, size N+1
  std::vector<double> values;  // nonnegative, size N

  SampledFn1D() = default;
  SampledFn1D(std::vector<double> edges, std::vector<double> values);
  std::size_t cells() const { return values.size(); }
  std::vector<double> widths() const;
  std::vector<double> midpoints() const;
};

// Gauss grid in cos(theta) for zonal quadrature on S^n: exact for
// polynomial zonal integrands against the sin^{n-1} measure.  Weights
// include the full spherical measure (they sum to |S^n|).
ZonalFn make_zonal_grid(int n, std::size_t m = 256);

// Uniform log grid on [-U, U]; default step U/512 (m = 1025 nodes).
RadialFn make_log_grid(int n, double U = 12.0, std::size_t m = 1025);

}  // namespace rhls
