#include "rhls/geometry.hpp"

#include "rhls/special.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace rhls {

namespace {

double sq_norm(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return s;
}

// Fritsch-Carlson slopes: monotone on monotone data, never overshoots the
// local value range, so nonnegative data stays nonnegative.
std::vector<double> pchip_slopes(const std::vector<double>& x,
                                 const std::vector<double>& y) {
  const std::size_t n = x.size();
  std::vector<double> d(n, 0.0);
  if (n < 2) return d;
  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x[i + 1] - x[i];
    delta[i] = (y[i + 1] - y[i]) / h[i];
  }
  if (n == 2) {
    d[0] = d[1] = delta[0];
    return d;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  auto end_slope = [](double h0, double h1, double d0, double d1) {
    double s = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
    if (s * d0 <= 0.0) return 0.0;
    if (d0 * d1 < 0.0 && std::fabs(s) > 3.0 * std::fabs(d0)) return 3.0 * d0;
    return s;
  };
  d[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  d[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
  return d;
}

// Evaluate the Hermite interpolant on a uniform grid; points outside the
// covered window read as zero.
class PchipOnGrid {
 public:
  PchipOnGrid(const std::vector<double>& x, const std::vector<double>& y)
      : x_(x), y_(y), d_(pchip_slopes(x, y)) {}

  double operator()(double t) const {
    if (t < x_.front() || t > x_.back()) return 0.0;
    const double h = (x_.back() - x_.front()) / static_cast<double>(x_.size() - 1);
    std::size_t i = static_cast<std::size_t>(std::floor((t - x_.front()) / h));
    i = std::min(i, x_.size() - 2);
    const double hi = x_[i + 1] - x_[i];
    const double s = (t - x_[i]) / hi;
    const double s2 = s * s, s3 = s2 * s;
    const double v = (2.0 * s3 - 3.0 * s2 + 1.0) * y_[i] +
                     (s3 - 2.0 * s2 + s) * hi * d_[i] +
                     (-2.0 * s3 + 3.0 * s2) * y_[i + 1] +
                     (s3 - s2) * hi * d_[i + 1];
    return std::max(v, 0.0);
  }

 private:
  const std::vector<double>& x_;
  const std::vector<double>& y_;
  std::vector<double> d_;
};

void require_dimension(int grid_n, const ExponentSet& exps, const char* who) {
  if (grid_n != exps.n)
    throw std::invalid_argument(std::string(who) + ": exponent set dimension mismatch");
}

}  // namespace

KelvinParams::KelvinParams(std::vector<double> c, double l)
    : center(std::move(c)), lambda(l) {
  if (!(lambda > 0.0)) throw std::invalid_argument("KelvinParams: radius must be positive");
}

bool KelvinParams::centered_at_origin() const {
  for (double c : center)
    if (c != 0.0) return false;
  return true;
}

std::vector<double> stereo_lift_point(const std::vector<double>& x) {
  const double r2 = sq_norm(x);
  std::vector<double> xi(x.size() + 1);
  for (std::size_t i = 0; i < x.size(); ++i) xi[i] = 2.0 * x[i] / (1.0 + r2);
  xi[x.size()] = (1.0 - r2) / (1.0 + r2);
  return xi;
}

std::vector<double> stereo_drop_point(const std::vector<double>& xi) {
  if (xi.size() < 2)
    throw std::invalid_argument("stereo_drop_point: need a point on S^n, n >= 1");
  const double last = xi.back();
  if (last <= -1.0 + 1e-15)
    throw std::invalid_argument("stereo_drop_point: south pole has no finite preimage");
  std::vector<double> x(xi.size() - 1);
  for (std::size_t i = 0; i + 1 < xi.size(); ++i) x[i] = xi[i] / (1.0 + last);
  return x;
}

double chordal_distance(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size())
    throw std::invalid_argument("chordal_distance: dimension mismatch");
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double t = x[i] - y[i];
    d2 += t * t;
  }
  return 2.0 * std::sqrt(d2) / std::sqrt((1.0 + sq_norm(x)) * (1.0 + sq_norm(y)));
}

std::vector<double> kelvin_point(const std::vector<double>& x, const KelvinParams& kp) {
  if (!kp.center.empty() && kp.center.size() != x.size())
    throw std::invalid_argument("kelvin_point: center dimension mismatch");
  std::vector<double> y(x.size());
  double d2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[i] - (i < kp.center.size() ? kp.center[i] : 0.0);
    d2 += y[i] * y[i];
  }
  if (d2 == 0.0) throw std::invalid_argument("kelvin_point: the center is not invertible");
  const double c = kp.lambda * kp.lambda / d2;
  for (std::size_t i = 0; i < x.size(); ++i)
    y[i] = (i < kp.center.size() ? kp.center[i] : 0.0) + c * y[i];
  return y;
}

double lift_angle(double u) { return 2.0 * std::atan(std::exp(u)); }

double drop_log_radius(double theta) {
  if (!(theta > 0.0 && theta < 3.141592653589793238463))
    throw std::invalid_argument("drop_log_radius: angle must lie in (0, pi)");
  return std::log(std::tan(0.5 * theta));
}

ZonalFn lift_function(const RadialFn& f, const ExponentSet& exps) {
  require_dimension(f.n, exps, "lift_function");
  const std::size_t m = f.size();
  const double h = f.step();
  const double area = sphere_area(f.n - 1);
  std::vector<double> angles(m), weights(m), values(m);
  for (std::size_t k = 0; k < m; ++k) {
    const double u = f.log_radii[k];
    angles[k] = lift_angle(u);
    double w = area * std::pow(1.0 / std::cosh(u), f.n) * h;
    if (k == 0 || k + 1 == m) w *= 0.5;
    weights[k] = w;
    const double r2 = std::exp(2.0 * u);
    values[k] = std::pow(0.5 * (1.0 + r2), 0.5 * (f.n + exps.alpha)) * f.values[k];
  }
  return ZonalFn(std::move(angles), std::move(weights), std::move(values), f.n);
}

RadialFn drop_function(const ZonalFn& F, const ExponentSet& exps) {
  require_dimension(F.n, exps, "drop_function");
  const std::size_t m = F.size();
  if (m < 2) throw std::invalid_argument("drop_function: need at least two nodes");
  std::vector<double> u(m), values(m);
  for (std::size_t k = 0; k < m; ++k) u[k] = drop_log_radius(F.angles[k]);
  if (!(u.back() > u.front()))
    throw std::invalid_argument("drop_function: angles must increase");
  // An angle near a pole carries O(eps * cosh u) noise in its log radius, so
  // the step comes from the well-conditioned central span and gaps are
  // compared against that envelope; the lattice is then rebuilt exactly
  // uniform, which makes lift -> drop an identity on the grid.
  const std::size_t third = m / 3;
  const std::size_t k0 = third, k1 = m - 1 - third;
  const double h = k1 > k0 ? (u[k1] - u[k0]) / static_cast<double>(k1 - k0)
                           : (u.back() - u.front()) / static_cast<double>(m - 1);
  if (!(h > 0.0)) throw std::invalid_argument("drop_function: angles must increase");
  for (std::size_t k = 0; k + 1 < m; ++k) {
    const double envelope =
        2e-14 * (std::cosh(u[k]) + std::cosh(u[k + 1]));
    if (std::fabs(u[k + 1] - u[k] - h) >
        std::max(1e-9 * std::max(1.0, std::fabs(u.back())), envelope))
      throw std::invalid_argument("drop_function: grid is not uniform in log radius");
  }
  const std::size_t im = m / 2;
  const double mid = u[im];
  for (std::size_t k = 0; k < m; ++k)
    u[k] = mid + (static_cast<double>(k) - static_cast<double>(im)) * h;
  for (std::size_t k = 0; k < m; ++k) {
    const double r2 = std::exp(2.0 * u[k]);
    values[k] = std::pow(2.0 / (1.0 + r2), 0.5 * (F.n + exps.alpha)) * F.values[k];
  }
  return RadialFn(std::move(u), std::move(values), F.n);
}

DilationResult dilate(const RadialFn& g, double lambda, const ExponentSet& exps) {
  require_dimension(g.n, exps, "dilate");
  if (!(lambda > 0.0)) throw std::invalid_argument("dilate: lambda must be positive");
  const std::size_t m = g.size();
  const double h = g.step();
  const double shift = std::log(lambda);
  const double factor = std::pow(lambda, -static_cast<double>(g.n) / exps.p);
  const double U_lo = g.log_radii.front(), U_hi = g.log_radii.back();

  DilationResult out;
  const double steps = shift / h;
  const long j = std::lround(steps);
  out.aligned = std::fabs(steps - static_cast<double>(j)) < 1e-9;

  std::vector<double> values(m, 0.0);
  if (out.aligned) {
    for (std::size_t k = 0; k < m; ++k) {
      const long src = static_cast<long>(k) - j;
      if (src >= 0 && src < static_cast<long>(m))
        values[k] = factor * g.values[static_cast<std::size_t>(src)];
    }
  } else {
    PchipOnGrid interp(g.log_radii, g.values);
    for (std::size_t k = 0; k < m; ++k)
      values[k] = factor * interp(g.log_radii[k] - shift);
  }

  // Mass (w.r.t. Lebesgue measure on R^n) carried by source nodes whose
  // image u + ln(lambda) leaves the stored window.
  const std::vector<double> w = g.measure_weights();
  double total = 0.0, clipped = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double mk = w[k] * g.values[k];
    total += mk;
    const double image = g.log_radii[k] + shift;
    if (image < U_lo - 1e-12 || image > U_hi + 1e-12) clipped += mk;
  }
  out.clipped_mass_fraction = total > 0.0 ? clipped / total : 0.0;
  out.fn = RadialFn(g.log_radii, std::move(values), g.n);
  return out;
}

RadialFn kelvin_transform(const RadialFn& w, const KelvinParams& kp,
                          const ExponentSet& exps) {
  require_dimension(w.n, exps, "kelvin_transform");
  if (!kp.centered_at_origin())
    throw std::invalid_argument(
        "kelvin_transform: radial representation requires the center at the origin");
  const std::size_t m = w.size();
  const double h = w.step();
  const double c = 2.0 * std::log(kp.lambda);
  // Reflection u -> c - u maps node k to lattice position base - k.
  const double steps = (c - 2.0 * w.log_radii.front()) / h;
  const long base = std::lround(steps);
  const bool aligned = std::fabs(steps - static_cast<double>(base)) < 1e-9;

  // (lambda / e^u)^{n - alpha} = e^{lambda_exponent * (ln lambda - u)}
  const double sigma = exps.lambda;
  std::vector<double> values(m, 0.0);
  if (aligned) {
    for (std::size_t k = 0; k < m; ++k) {
      const long src = base - static_cast<long>(k);
      if (src >= 0 && src < static_cast<long>(m))
        values[k] = std::exp(sigma * (0.5 * c - w.log_radii[k])) *
                    w.values[static_cast<std::size_t>(src)];
    }
  } else {
    PchipOnGrid interp(w.log_radii, w.values);
    for (std::size_t k = 0; k < m; ++k)
      values[k] =
          std::exp(sigma * (0.5 * c - w.log_radii[k])) * interp(c - w.log_radii[k]);
  }
  return RadialFn(w.log_radii, std::move(values), w.n);
}

}  // namespace rhls
