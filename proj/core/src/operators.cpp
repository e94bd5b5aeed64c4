#include "rhls/operators.hpp"

#include "rhls/parallel.hpp"
#include "rhls/quadrature.hpp"
#include "rhls/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace rhls {

namespace {

constexpr double kPi = 3.141592653589793238463;

// Zonal orthogonal polynomials for the (1-x^2)^{(n-2)/2} weight, normalized
// to G_l(1) = 1 (Chebyshev for n = 1, Legendre for n = 2); |G_l| <= 1 on
// [-1, 1], so the recurrence cannot overflow.  Row l holds the values at all
// nodes.  G_1 = x is seeded explicitly: the generic step is 0/0 at n = 1.
std::vector<std::vector<double>> zonal_poly_table(int n, const std::vector<double>& x,
                                                  std::size_t L) {
  const double nu = 0.5 * (n - 1);
  std::vector<std::vector<double>> g(L + 1, std::vector<double>(x.size()));
  for (std::size_t k = 0; k < x.size(); ++k) g[0][k] = 1.0;
  if (L >= 1)
    for (std::size_t k = 0; k < x.size(); ++k) g[1][k] = x[k];
  for (std::size_t l = 1; l < L; ++l) {
    const double a = 2.0 * (static_cast<double>(l) + nu);
    const double b = static_cast<double>(l);
    const double c = static_cast<double>(l) + 2.0 * nu;
    for (std::size_t k = 0; k < x.size(); ++k)
      g[l + 1][k] = (a * x[k] * g[l][k] - b * g[l - 1][k]) / c;
  }
  return g;
}

void require_matching_grid(const ZonalFn& F, const ZonalFn& ref, const char* who) {
  if (F.size() != ref.size())
    throw std::invalid_argument(std::string(who) + ": grid size mismatch");
  for (std::size_t k = 0; k < F.size(); ++k)
    if (std::fabs(F.angles[k] - ref.angles[k]) > 1e-12)
      throw std::invalid_argument(std::string(who) +
                                  ": zonal function must live on the Gauss grid");
}

}  // namespace

double ZonalKernelMatrix::row_sum(std::size_t j) const {
  const std::size_t m = size();
  double s = 0.0;
  for (std::size_t k = 0; k < m; ++k) s += kernel[j * m + k] * grid.weights[k];
  return s;
}

std::vector<double> ZonalKernelMatrix::row_sums() const {
  std::vector<double> out(size());
  for (std::size_t j = 0; j < size(); ++j) out[j] = row_sum(j);
  return out;
}

std::vector<double> ZonalKernelMatrix::apply(const std::vector<double>& values) const {
  const std::size_t m = size();
  if (values.size() != m)
    throw std::invalid_argument("ZonalKernelMatrix::apply: size mismatch");
  std::vector<double> out(m);
  parallel_for(m, [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < m; ++k)
      s += kernel[j * m + k] * grid.weights[k] * values[k];
    out[j] = s;
  });
  return out;
}

ZonalKernelMatrix make_kernel_matrix(int n, double alpha, std::size_t m) {
  if (n < 1) throw std::invalid_argument("make_kernel_matrix: need n >= 1");
  if (!(alpha > n)) throw std::invalid_argument("make_kernel_matrix: need alpha > n");
  if (m < 4) throw std::invalid_argument("make_kernel_matrix: need at least 4 nodes");

  ZonalKernelMatrix K;
  K.n = n;
  K.alpha = alpha;
  K.grid = make_zonal_grid(n, m);
  K.degree = m - 1;

  std::vector<double> x(m);
  for (std::size_t k = 0; k < m; ++k) x[k] = std::cos(K.grid.angles[k]);
  const auto g = zonal_poly_table(n, x, K.degree);
  const auto mu = kernel_eigenvalues(n, alpha, K.degree);

  // mu_l / (discrete |G_l|^2): the discrete norm (not the continuum one)
  // is what makes sum_k kernel[j][k] w_k collapse to mu_0 exactly.
  std::vector<double> scale(K.degree + 1);
  for (std::size_t l = 0; l <= K.degree; ++l) {
    double nrm = 0.0;
    for (std::size_t k = 0; k < m; ++k) nrm += K.grid.weights[k] * g[l][k] * g[l][k];
    scale[l] = mu[l] / nrm;
  }

  K.kernel.assign(m * m, 0.0);
  parallel_for(m, [&](std::size_t j) {
    for (std::size_t k = j; k < m; ++k) {
      double s = 0.0;
      for (std::size_t l = 0; l <= K.degree; ++l) s += scale[l] * g[l][j] * g[l][k];
      K.kernel[j * m + k] = s;
    }
  });
  for (std::size_t j = 1; j < m; ++j)
    for (std::size_t k = 0; k < j; ++k) K.kernel[j * m + k] = K.kernel[k * m + j];

  K.min_entry = *std::min_element(K.kernel.begin(), K.kernel.end());
  return K;
}

double zonal_kernel_direct(int n, double alpha, double theta, double theta_p) {
  const double s = 0.5 * (alpha - n);
  if (n == 1) {
    const double d1 = std::max(2.0 - 2.0 * std::cos(theta - theta_p), 0.0);
    const double d2 = std::max(2.0 - 2.0 * std::cos(theta + theta_p), 0.0);
    return 0.5 * (std::pow(d1, s) + std::pow(d2, s));
  }
  static const QuadratureRule rule = gauss_legendre(128);
  const double ct = std::cos(theta), st = std::sin(theta);
  const double cp = std::cos(theta_p), sp = std::sin(theta_p);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double phi = 0.5 * kPi * (rule.nodes[i] + 1.0);
    const double w = 0.5 * kPi * rule.weights[i];
    const double cg = ct * cp + st * sp * std::cos(phi);
    const double d = std::max(2.0 - 2.0 * cg, 0.0);
    double v = std::pow(d, s);
    if (n > 2) v *= std::pow(std::sin(phi), n - 2);
    acc += w * v;
  }
  return acc * sphere_area(n - 2) / sphere_area(n - 1);
}

ZonalFn sphere_operator(const ZonalKernelMatrix& K, const ZonalFn& F) {
  if (F.n != K.n) throw std::invalid_argument("sphere_operator: dimension mismatch");
  require_matching_grid(F, K.grid, "sphere_operator");
  std::vector<double> out = K.apply(F.values);
  // Truncating the expansion can leave values a hair below zero when the
  // kernel entries themselves dip negative (alpha close to n); clamp so the
  // output remains a valid zonal function.
  for (double& v : out) v = std::max(v, 0.0);
  return ZonalFn(F.angles, F.weights, std::move(out), F.n);
}

ZonalFn sphere_operator(const ZonalFn& F, const ExponentSet& exps) {
  if (F.n != exps.n) throw std::invalid_argument("sphere_operator: dimension mismatch");
  return sphere_operator(make_kernel_matrix(exps.n, exps.alpha, F.size()), F);
}

std::vector<double> sphere_operator_at(const ZonalFn& F, double alpha,
                                       const std::vector<double>& thetas) {
  const std::size_t m = F.size();
  const ZonalFn ref = make_zonal_grid(F.n, m);
  require_matching_grid(F, ref, "sphere_operator_at");

  std::vector<double> x(m);
  for (std::size_t k = 0; k < m; ++k) x[k] = std::cos(F.angles[k]);
  const std::size_t L = m - 1;
  const auto g = zonal_poly_table(F.n, x, L);
  const auto mu = kernel_eigenvalues(F.n, alpha, L);

  std::vector<double> coef(L + 1);
  for (std::size_t l = 0; l <= L; ++l) {
    double num = 0.0, den = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      num += F.weights[k] * g[l][k] * F.values[k];
      den += F.weights[k] * g[l][k] * g[l][k];
    }
    coef[l] = mu[l] * num / den;
  }

  const double nu = 0.5 * (F.n - 1);
  std::vector<double> out(thetas.size());
  parallel_for(thetas.size(), [&](std::size_t i) {
    const double xi = std::cos(thetas[i]);
    double p_prev = 1.0, p_cur = xi;
    double acc = coef[0];
    if (L >= 1) acc += coef[1] * xi;
    for (std::size_t l = 1; l < L; ++l) {
      const double p_next = (2.0 * (static_cast<double>(l) + nu) * xi * p_cur -
                             static_cast<double>(l) * p_prev) /
                            (static_cast<double>(l) + 2.0 * nu);
      acc += coef[l + 1] * p_next;
      p_prev = p_cur;
      p_cur = p_next;
    }
    out[i] = acc;
  });
  return out;
}

RadialOpResult radial_operator(const RadialFn& f, const ExponentSet& exps) {
  if (f.n != exps.n) throw std::invalid_argument("radial_operator: dimension mismatch");
  const std::size_t m = f.size();
  const double h = f.step();
  const double n = exps.n;

  RadialOpResult res;
  if (std::all_of(f.values.begin(), f.values.end(), [](double v) { return v == 0.0; })) {
    res.fn = RadialFn(f.log_radii, std::vector<double>(m, 0.0), f.n);
    res.degenerate = true;
    return res;
  }

  std::vector<double> F(m);
  for (std::size_t k = 0; k < m; ++k)
    F[k] = std::exp(f.log_radii[k] * n / exps.p) * f.values[k];

  // Convolution kernel sampled at every node offset (j - k) h.
  std::vector<double> Ltab(2 * m - 1);
  parallel_for(2 * m - 1, [&](std::size_t i) {
    const double u = (static_cast<double>(i) - static_cast<double>(m - 1)) * h;
    Ltab[i] = ln_kernel(f.n, exps.alpha, u, exps);
  });

  std::vector<double> H(m);
  parallel_for(m, [&](std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double c = (k == 0 || k + 1 == m) ? 0.5 : 1.0;
      acc += c * Ltab[j - k + m - 1] * F[k];
    }
    H[j] = acc * h;
  });

  std::vector<double> values(m);
  for (std::size_t j = 0; j < m; ++j)
    values[j] = std::exp(-f.log_radii[j] * n / exps.q) * H[j];

  // Window-truncation diagnostic: continue F past each end at its empirical
  // log slope and integrate against the asymptotic kernel rates
  //   L(u) ~ e^{u n/q} (u -> -inf),   L(u) ~ e^{u (n/q + alpha - n)} (u -> +inf).
  const double rate_minus = n / exps.q;
  const double rate_plus = n / exps.q + (exps.alpha - n);
  const double inf = std::numeric_limits<double>::infinity();
  double tail_right_unit = 0.0, tail_left_unit = 0.0;
  double slope_right = 0.0, slope_left = 0.0;
  if (F[m - 1] > 0.0 && F[m - 2] > 0.0) {
    slope_right = std::log(F[m - 1] / F[m - 2]) / h;
    tail_right_unit = (rate_minus - slope_right > 0.0)
                          ? F[m - 1] / (rate_minus - slope_right)
                          : inf;
  }
  if (F[0] > 0.0 && F[1] > 0.0) {
    slope_left = std::log(F[1] / F[0]) / h;
    tail_left_unit =
        (slope_left - rate_plus > 0.0) ? F[0] / (slope_left - rate_plus) : inf;
  }
  double worst = 0.0;
  for (std::size_t j = 0; j < m; ++j) {
    // L(u_j - U_hi) sits at table index j; L(u_j - U_lo) at index j + m - 1.
    const double tails = tail_right_unit * Ltab[j] + tail_left_unit * Ltab[j + m - 1];
    const double rel = H[j] > 0.0 ? tails / H[j] : (tails > 0.0 ? inf : 0.0);
    worst = std::max(worst, rel);
  }
  res.truncation_estimate = worst;
  res.truncation_warning = worst > 1e-8;
  res.fn = RadialFn(f.log_radii, std::move(values), f.n);
  return res;
}

namespace {

// Angular kernel between radii, cut at the indicator boundary
// |y - x| <= rho, i.e. cos(gamma) >= (r^2 + z^2 - rho^2) / (2 r z).
double split_kernel(int n, double alpha, double r, double z, double rho,
                    SplitPart part) {
  if (n == 1) {
    const double a = alpha - 1.0;
    const double d1 = std::fabs(r - z), d2 = r + z;
    const double b1 = std::pow(d1, a), b2 = std::pow(d2, a);
    const double near = (d1 <= rho ? b1 : 0.0) + (d2 <= rho ? b2 : 0.0);
    return part == SplitPart::near ? near : b1 + b2 - near;
  }
  static const QuadratureRule rule = gauss_legendre(128);
  const double s = 0.5 * (alpha - n);
  const double cmin = (r * r + z * z - rho * rho) / (2.0 * r * z);
  double gamma_cut;
  if (cmin <= -1.0)
    gamma_cut = kPi;
  else if (cmin >= 1.0)
    gamma_cut = 0.0;
  else
    gamma_cut = std::acos(cmin);

  const double lo = part == SplitPart::near ? 0.0 : gamma_cut;
  const double hi = part == SplitPart::near ? gamma_cut : kPi;
  if (hi <= lo) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double gmm = 0.5 * (hi - lo) * (rule.nodes[i] + 1.0) + lo;
    const double w = 0.5 * (hi - lo) * rule.weights[i];
    const double d = std::max(r * r + z * z - 2.0 * r * z * std::cos(gmm), 0.0);
    double v = std::pow(d, s);
    if (n > 2) v *= std::pow(std::sin(gmm), n - 2);
    acc += w * v;
  }
  return acc * sphere_area(n - 2);
}

}  // namespace

RadialFn split_operator(const RadialFn& f, double rho, SplitPart part,
                        const ExponentSet& exps) {
  if (f.n != exps.n) throw std::invalid_argument("split_operator: dimension mismatch");
  if (!(rho > 0.0)) throw std::invalid_argument("split_operator: need rho > 0");
  const std::size_t m = f.size();
  const double h = f.step();

  std::vector<double> radii(m);
  for (std::size_t k = 0; k < m; ++k) radii[k] = std::exp(f.log_radii[k]);

  std::vector<double> out(m);
  parallel_for(m, [&](std::size_t j) {
    double acc = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (f.values[k] == 0.0) continue;
      const double c = (k == 0 || k + 1 == m) ? 0.5 : 1.0;
      const double zmeas = std::exp(f.n * f.log_radii[k]) * h * c;
      acc += zmeas * f.values[k] *
             split_kernel(f.n, exps.alpha, radii[j], radii[k], rho, part);
    }
    out[j] = acc;
  });
  return RadialFn(f.log_radii, std::move(out), f.n);
}

McResult mc_operator(const std::function<double(const std::vector<double>&)>& f,
                     int n, double alpha,
                     const std::vector<std::vector<double>>& points,
                     std::size_t samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("mc_operator: need n >= 1");
  if (samples == 0) throw std::invalid_argument("mc_operator: need samples > 0");
  for (const auto& p : points)
    if (p.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("mc_operator: evaluation point dimension mismatch");

  // Normalizer of (1 + |y|^2)^{-n}: |S^{n-1}| B(n/2, n/2) / 2.
  const double Cg = sphere_area(n - 1) * 0.5 *
                    std::exp(2.0 * log_gamma(0.5 * n) - log_gamma(static_cast<double>(n)));

  McResult res;
  res.values.assign(points.size(), 0.0);
  res.stderrs.assign(points.size(), 0.0);

  parallel_for(points.size(), [&](std::size_t i) {
    std::mt19937_64 rng(seed + 0x9E3779B97F4A7C15ULL * (i + 1));
    std::gamma_distribution<double> gamma_half_n(0.5 * n, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<double> y(n);

    double mean = 0.0, M2 = 0.0;
    for (std::size_t sidx = 0; sidx < samples; ++sidx) {
      // radius: r^2/(1+r^2) ~ Beta(n/2, n/2)
      double t;
      do {
        const double g1 = gamma_half_n(rng);
        const double g2 = gamma_half_n(rng);
        t = (g1 + g2) > 0.0 ? g1 / (g1 + g2) : 0.0;
      } while (!(t > 0.0 && t < 1.0));
      const double r = std::sqrt(t / (1.0 - t));

      double norm2;
      do {
        norm2 = 0.0;
        for (int d = 0; d < n; ++d) {
          y[d] = gauss(rng);
          norm2 += y[d] * y[d];
        }
      } while (norm2 == 0.0);
      const double scl = r / std::sqrt(norm2);
      for (int d = 0; d < n; ++d) y[d] *= scl;

      double dist2 = 0.0;
      for (int d = 0; d < n; ++d) {
        const double t2 = points[i][d] - y[d];
        dist2 += t2 * t2;
      }
      const double w = f(y) * std::pow(dist2, 0.5 * (alpha - n)) * Cg *
                       std::pow(1.0 + r * r, static_cast<double>(n));

      const double delta = w - mean;
      mean += delta / static_cast<double>(sidx + 1);
      M2 += delta * (w - mean);
    }
    res.values[i] = mean;
    res.stderrs[i] = samples > 1
                         ? std::sqrt(M2 / (static_cast<double>(samples) *
                                           static_cast<double>(samples - 1)))
                         : 0.0;
  });
  return res;
}

}  // namespace rhls
