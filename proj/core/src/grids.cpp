#include "rhls/grids.hpp"

#include "rhls/quadrature.hpp"
#include "rhls/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rhls {

namespace {

void check_nonnegative(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!(x >= 0.0)) throw std::invalid_argument(std::string(what) + ": negative or NaN value");
}

}  // namespace

ZonalFn::ZonalFn(std::vector<double> a, std::vector<double> w,
                 std::vector<double> v, int dim)
    : angles(std::move(a)), weights(std::move(w)), values(std::move(v)), n(dim) {
  if (n < 1) throw std::invalid_argument("ZonalFn: need n >= 1");
  if (angles.size() != weights.size() || angles.size() != values.size())
    throw std::invalid_argument("ZonalFn: arrays must share one length");
  if (angles.empty()) throw std::invalid_argument("ZonalFn: empty grid");
  for (double t : angles)
    if (!(t > 0.0 && t < 3.14159265358979323846))
      throw std::invalid_argument("ZonalFn: angles must lie in (0, pi)");
  for (double w0 : weights)
    if (!(w0 > 0.0)) throw std::invalid_argument("ZonalFn: weights must be positive");
  check_nonnegative(values, "ZonalFn values");
}

RadialFn::RadialFn(std::vector<double> u, std::vector<double> v, int dim)
    : log_radii(std::move(u)), values(std::move(v)), n(dim) {
  if (n < 1) throw std::invalid_argument("RadialFn: need n >= 1");
  if (log_radii.size() != values.size())
    throw std::invalid_argument("RadialFn: arrays must share one length");
  if (log_radii.size() < 2) throw std::invalid_argument("RadialFn: need >= 2 nodes");
  const double h = log_radii[1] - log_radii[0];
  if (!(h > 0.0)) throw std::invalid_argument("RadialFn: grid must increase");
  for (std::size_t k = 1; k < log_radii.size(); ++k) {
    const double d = log_radii[k] - log_radii[k - 1];
    if (std::fabs(d - h) > 1e-9 * std::max(1.0, std::fabs(h)))
      throw std::invalid_argument("RadialFn: grid must be uniform");
  }
  check_nonnegative(values, "RadialFn values");
}

double RadialFn::step() const { return log_radii[1] - log_radii[0]; }

std::vector<double> RadialFn::measure_weights() const {
  const double h = step();
  const double ang = sphere_area(n - 1);
  std::vector<double> w(size());
  for (std::size_t k = 0; k < size(); ++k)
    w[k] = ang * std::exp(n * log_radii[k]) * h;
  w.front() *= 0.5;
  w.back() *= 0.5;
  return w;
}

SampledFn1D::SampledFn1D(std::vector<double> e, std::vector<double> v)
    : edges(std::move(e)), values(std::move(v)) {
  if (edges.size() != values.size() + 1)
    throw std::invalid_argument("SampledFn1D: need edges = values + 1");
  if (values.empty()) throw std::invalid_argument("SampledFn1D: empty partition");
  for (std::size_t k = 1; k < edges.size(); ++k)
    if (!(edges[k] > edges[k - 1]))
      throw std::invalid_argument("SampledFn1D: edges must strictly increase");
  check_nonnegative(values, "SampledFn1D values");
}

std::vector<double> SampledFn1D::widths() const {
  std::vector<double> w(cells());
  for (std::size_t k = 0; k < cells(); ++k) w[k] = edges[k + 1] - edges[k];
  return w;
}

std::vector<double> SampledFn1D::midpoints() const {
  std::vector<double> m(cells());
  for (std::size_t k = 0; k < cells(); ++k) m[k] = 0.5 * (edges[k] + edges[k + 1]);
  return m;
}

ZonalFn make_zonal_grid(int n, std::size_t m) {
  if (n < 1) throw std::invalid_argument("make_zonal_grid: need n >= 1");
  if (m < 2) throw std::invalid_argument("make_zonal_grid: need m >= 2");
  const double a = 0.5 * (n - 2);
  QuadratureRule r = gauss_jacobi(m, a, a);
  const double ang = sphere_area(n - 1);
  std::vector<double> angles(m), weights(m), values(m, 0.0);
  // nodes ascend in x = cos(theta); store ascending theta instead
  for (std::size_t k = 0; k < m; ++k) {
    angles[k] = std::acos(r.nodes[m - 1 - k]);
    weights[k] = ang * r.weights[m - 1 - k];
  }
  return ZonalFn(std::move(angles), std::move(weights), std::move(values), n);
}

RadialFn make_log_grid(int n, double U, std::size_t m) {
  if (!(U > 0.0)) throw std::invalid_argument("make_log_grid: need U > 0");
  if (m < 2 || m % 2 == 0)
    throw std::invalid_argument("make_log_grid: need odd m >= 3 (grid contains u = 0)");
  std::vector<double> u(m), v(m, 0.0);
  const double h = 2.0 * U / double(m - 1);
  for (std::size_t k = 0; k < m; ++k) u[k] = -U + h * double(k);
  return RadialFn(std::move(u), std::move(v), n);
}

}  // namespace rhls
