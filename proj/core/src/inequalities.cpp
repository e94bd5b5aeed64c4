#include "rhls/inequalities.hpp"

#include "rhls/norms.hpp"
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
constexpr double kExactTol = 1e-12;  // identities that hold to round-off
constexpr double kModelTol = 1e-3;   // discretized functional inequalities

CheckResult make_check(double lhs, double rhs, double tol, bool degenerate) {
  CheckResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.margin = lhs - rhs;
  const double scale = std::max(std::fabs(lhs), std::fabs(rhs));
  r.rel_margin = scale > 0.0 ? r.margin / scale : 0.0;
  r.holds = r.margin >= -tol * scale;
  r.degenerate = degenerate;
  return r;
}

void require_nonnegative(const std::vector<double>& v, const char* who) {
  for (double x : v)
    if (!(x >= 0.0)) throw std::invalid_argument(std::string(who) + ": need values >= 0");
}

}  // namespace

CheckResult reversed_holder_check(const std::vector<double>& f,
                                  const std::vector<double>& g,
                                  const std::vector<double>& weights, double p) {
  if (f.size() != g.size() || f.size() != weights.size())
    throw std::invalid_argument("reversed_holder_check: size mismatch");
  if (!(p > 0.0 && p < 1.0))
    throw std::invalid_argument("reversed_holder_check: need p in (0,1)");
  require_nonnegative(f, "reversed_holder_check");
  require_nonnegative(g, "reversed_holder_check");

  double lhs = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) lhs += weights[i] * f[i] * g[i];
  const double pc = p / (p - 1.0);
  const double rhs = lp_quasi_norm(f, weights, p) * lp_quasi_norm(g, weights, pc);
  return make_check(lhs, rhs, kExactTol, rhs == 0.0);
}

CheckResult reversed_minkowski_check(const std::vector<double>& F,
                                     const std::vector<double>& wx,
                                     const std::vector<double>& wy, double q) {
  const std::size_t nx = wx.size(), ny = wy.size();
  if (F.size() != nx * ny)
    throw std::invalid_argument("reversed_minkowski_check: size mismatch");
  if (!(q < 1.0) || q == 0.0)
    throw std::invalid_argument("reversed_minkowski_check: need q < 1, q != 0");
  require_nonnegative(F, "reversed_minkowski_check");

  std::vector<double> row_integrals(nx, 0.0);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) row_integrals[i] += F[i * ny + j] * wy[j];
  const double lhs = lp_quasi_norm(row_integrals, wx, q);

  double rhs = 0.0;
  std::vector<double> column(nx);
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) column[i] = F[i * ny + j];
    rhs += lp_quasi_norm(column, wx, q) * wy[j];
  }
  return make_check(lhs, rhs, kExactTol, rhs == 0.0);
}

YoungTriple::YoungTriple(double p_, double q_, double r_) : p(p_), q(q_), r(r_) {
  if (!(p > 0.0 && p < 1.0) || !(q < 0.0) || !(r < 0.0))
    throw std::invalid_argument("YoungTriple: need p in (0,1) and q, r < 0");
  const double defect = 1.0 / p + 1.0 / q - 1.0 - 1.0 / r;
  if (std::fabs(defect) > 1e-9)
    throw std::invalid_argument("YoungTriple: 1/p + 1/q must equal 1 + 1/r");
}

CheckResult converse_young_check(const std::vector<double>& f,
                                 const std::vector<double>& g,
                                 const YoungTriple& triple) {
  const std::size_t N = f.size();
  if (N < 2 || g.size() != N)
    throw std::invalid_argument("converse_young_check: need matching cells, N >= 2");
  require_nonnegative(f, "converse_young_check");
  require_nonnegative(g, "converse_young_check");

  const double delta = 2.0 * kPi / static_cast<double>(N);
  const std::vector<double> cellw(N, delta);
  const double rhs =
      lp_quasi_norm(f, cellw, triple.p) * lp_quasi_norm(g, cellw, triple.q);

  // Circular correlation sums: conv((i+s) delta) = delta (s c_i + (1-s) c_{i-1}).
  std::vector<double> c(N, 0.0);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) c[i] += f[(i + N - k) % N] * g[k];

  constexpr std::size_t M = 16;  // exact samples per cell of the piecewise-linear conv
  std::vector<double> samples(N * M);
  for (std::size_t i = 0; i < N; ++i) {
    const double c_prev = c[(i + N - 1) % N];
    for (std::size_t t = 0; t < M; ++t) {
      const double s = (static_cast<double>(t) + 0.5) / static_cast<double>(M);
      samples[i * M + t] = delta * (s * c[i] + (1.0 - s) * c_prev);
    }
  }
  const std::vector<double> sw(N * M, delta / static_cast<double>(M));
  const double lhs = lp_quasi_norm(samples, sw, triple.r);
  return make_check(lhs, rhs, kModelTol, rhs == 0.0);
}

std::vector<double> decreasing_rearrangement(std::vector<double> values) {
  require_nonnegative(values, "decreasing_rearrangement");
  std::sort(values.begin(), values.end(), std::greater<double>());
  return values;
}

std::vector<double> increasing_rearrangement(std::vector<double> values) {
  for (double x : values)
    if (!(x > 0.0))
      throw std::invalid_argument("increasing_rearrangement: need values > 0");
  std::sort(values.begin(), values.end());
  return values;
}

namespace {

// integral of |r - z|^a over [z1, z2], a > 0
double abs_power_integral(double r, double a, double z1, double z2) {
  const double ap = a + 1.0;
  auto left = [&](double z) { return std::pow(r - z, ap) / ap; };   // z <= r
  auto right = [&](double z) { return std::pow(z - r, ap) / ap; };  // z >= r
  if (z2 <= r) return left(z1) - left(z2);
  if (z1 >= r) return right(z2) - right(z1);
  return left(z1) + right(z2);
}

// sum over the sphere's two "poles" for n = 1, angular integral otherwise;
// the z-cell integrals below integrate this against the volume element.
double radial_kernel(int n, double alpha, double r, double z,
                     const QuadratureRule& rule) {
  if (n == 1)
    return std::pow(std::fabs(r - z), alpha - 1.0) + std::pow(r + z, alpha - 1.0);
  const double s = 0.5 * (alpha - n);
  double acc = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double gmm = 0.5 * kPi * (rule.nodes[i] + 1.0);
    const double w = 0.5 * kPi * rule.weights[i];
    const double d = std::max(r * r + z * z - 2.0 * r * z * std::cos(gmm), 0.0);
    double v = std::pow(d, s);
    if (n > 2) v *= std::pow(std::sin(gmm), n - 2);
    acc += w * v;
  }
  return acc * sphere_area(n - 2);
}

// integral of the kernel against the volume element over one cell
// s in [s1, s2] of the equal-volume partition (s = z^n, ds = n z^{n-1} dz)
double cell_kernel_integral(int n, double alpha, double r, double s1, double s2,
                            const QuadratureRule& gl, const QuadratureRule& ang) {
  if (n == 1)
    return abs_power_integral(r, alpha - 1.0, s1, s2) +
           (std::pow(r + s2, alpha) - std::pow(r + s1, alpha)) / alpha;
  auto panel = [&](double a, double b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < gl.nodes.size(); ++i) {
      const double s = 0.5 * (b - a) * (gl.nodes[i] + 1.0) + a;
      const double w = 0.5 * (b - a) * gl.weights[i];
      acc += w * radial_kernel(n, alpha, r, std::pow(s, 1.0 / n), ang);
    }
    return acc / static_cast<double>(n);
  };
  const double kink = std::pow(r, n);  // |r - z| loses smoothness at z = r
  if (kink > s1 && kink < s2) return panel(s1, kink) + panel(kink, s2);
  return panel(s1, s2);
}

}  // namespace

CheckResult riesz_reversed_check(const std::vector<double>& cell_values, double S,
                                 const ExponentSet& exps, std::size_t log_nodes,
                                 double window) {
  if (cell_values.empty())
    throw std::invalid_argument("riesz_reversed_check: need at least one cell");
  if (!(S > 0.0)) throw std::invalid_argument("riesz_reversed_check: need S > 0");
  require_nonnegative(cell_values, "riesz_reversed_check");
  if (!((exps.alpha - exps.n) * exps.q < -static_cast<double>(exps.n)))
    throw std::invalid_argument(
        "riesz_reversed_check: output power is not integrable at infinity");

  const std::size_t N = cell_values.size();
  const RadialFn grid = make_log_grid(exps.n, window, log_nodes);
  const std::size_t m = grid.size();
  static const QuadratureRule gl = gauss_legendre(16);
  static const QuadratureRule ang = gauss_legendre(64);

  // A[j][c]: operator response at radius r_j to the indicator of cell c.
  std::vector<double> A(m * N);
  parallel_for(m, [&](std::size_t j) {
    const double r = std::exp(grid.log_radii[j]);
    for (std::size_t c = 0; c < N; ++c) {
      const double s1 = S * static_cast<double>(c) / static_cast<double>(N);
      const double s2 = S * static_cast<double>(c + 1) / static_cast<double>(N);
      A[j * N + c] = cell_kernel_integral(exps.n, exps.alpha, r, s1, s2, gl, ang);
    }
  });

  auto output_norm = [&](const std::vector<double>& vals) {
    std::vector<double> out(m, 0.0);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t c = 0; c < N; ++c) out[j] += A[j * N + c] * vals[c];
    return lp_quasi_norm(RadialFn(grid.log_radii, std::move(out), exps.n), exps.q);
  };

  const double lhs = output_norm(cell_values);
  const double rhs = output_norm(decreasing_rearrangement(cell_values));
  return make_check(lhs, rhs, kModelTol, rhs == 0.0);
}

QuotientResult hls_quotient(const ZonalKernelMatrix& K, const ZonalFn& F) {
  const double p = 2.0 * K.n / (K.n + K.alpha);
  const ZonalFn TF = sphere_operator(K, F);
  double num = 0.0;
  for (std::size_t j = 0; j < F.size(); ++j)
    num += F.weights[j] * TF.values[j] * F.values[j];
  const double den = lp_quasi_norm(F, p);
  if (!(den > 0.0))
    throw std::invalid_argument("hls_quotient: need a nonzero input");

  QuotientResult r;
  r.quotient = num / (den * den);
  r.sharp = sharp_constant(K.n, K.alpha);
  r.margin = r.quotient - r.sharp;
  r.rel_margin = r.margin / r.sharp;
  return r;
}

QuotientResult hls_quotient(const ZonalFn& F, const ExponentSet& exps) {
  if (F.n != exps.n) throw std::invalid_argument("hls_quotient: dimension mismatch");
  if (!is_critical_pair(exps))
    throw std::invalid_argument("hls_quotient: requires the critical exponent set");
  return hls_quotient(make_kernel_matrix(exps.n, exps.alpha, F.size()), F);
}

CheckResult bilinear_form_check(const ZonalKernelMatrix& K, const ZonalFn& F,
                                const ZonalFn& G) {
  if (F.size() != G.size() || F.size() != K.size())
    throw std::invalid_argument("bilinear_form_check: size mismatch");
  for (std::size_t j = 0; j < K.size(); ++j)
    if (std::fabs(F.angles[j] - K.grid.angles[j]) > 1e-12 ||
        std::fabs(G.angles[j] - K.grid.angles[j]) > 1e-12)
      throw std::invalid_argument(
          "bilinear_form_check: inputs must live on the kernel's Gauss grid");
  const std::vector<double> TF = K.apply(F.values);
  const std::vector<double> TG = K.apply(G.values);
  double b_fg = 0.0, b_gf = 0.0;
  for (std::size_t j = 0; j < K.size(); ++j) {
    b_fg += F.weights[j] * TF[j] * G.values[j];
    b_gf += F.weights[j] * F.values[j] * TG[j];
  }
  if (std::fabs(b_fg - b_gf) > 1e-12 * std::max(std::fabs(b_fg), std::fabs(b_gf)))
    throw std::logic_error("bilinear_form_check: symmetry defect");

  const double p = 2.0 * K.n / (K.n + K.alpha);
  const double rhs = sharp_constant(K.n, K.alpha) * lp_quasi_norm(F, p) *
                     lp_quasi_norm(G, p);
  return make_check(0.5 * (b_fg + b_gf), rhs, kExactTol, rhs == 0.0);
}

WeakTypeResult weak_type_constant(const RadialFn& f, const ExponentSet& exps) {
  WeakTypeResult res;
  const RadialOpResult op = radial_operator(f, exps);
  if (op.degenerate) {
    res.split_consistent = true;
    return res;
  }
  const RadialFn& h = op.fn;
  const std::vector<double> weights = h.measure_weights();
  res.constant = weak_quasi_norm(h.values, weights, exps.q) /
                 lp_quasi_norm(f, exps.p);

  // Recover the threshold that achieves the weak norm: maximize m~(tau) tau^q
  // over sample values and midpoints (closed sub-level measure).
  std::vector<double> sorted(h.values);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<double> candidates;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] > 0.0) candidates.push_back(sorted[i]);
    if (i + 1 < sorted.size()) {
      const double mid = 0.5 * (sorted[i] + sorted[i + 1]);
      if (mid > 0.0) candidates.push_back(mid);
    }
  }
  double best = -1.0;
  for (double tau : candidates) {
    double meas = 0.0;
    for (std::size_t j = 0; j < h.size(); ++j)
      if (h.values[j] <= tau) meas += weights[j];
    const double score = meas * std::pow(tau, exps.q);
    if (score > best) {
      best = score;
      res.tau_star = tau;
    }
  }

  res.rho_star = std::pow(res.tau_star, exps.p / (exps.p * exps.alpha - exps.n));
  const RadialFn near = split_operator(f, res.rho_star, SplitPart::near, exps);
  const RadialFn far = split_operator(f, res.rho_star, SplitPart::far, exps);
  const double rho_all =
      4.0 * std::exp(f.log_radii.back()) + res.rho_star;  // covers every pair
  const RadialFn full = split_operator(f, rho_all, SplitPart::near, exps);

  double worst = 0.0, scale = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    worst = std::max(worst,
                     std::fabs(near.values[j] + far.values[j] - full.values[j]));
    scale = std::max(scale, full.values[j]);
  }
  res.split_residual = scale > 0.0 ? worst / scale : 0.0;
  res.split_consistent = res.split_residual <= 1e-10;
  return res;
}

std::vector<double> random_positive_values(std::size_t count, std::uint64_t seed,
                                           double sigma) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i)
    out[i] = std::max(std::exp(sigma * gauss(rng)), 1e-6);
  return out;
}

}  // namespace rhls
