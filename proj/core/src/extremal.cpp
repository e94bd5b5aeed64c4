#include "rhls/extremal.hpp"

#include "rhls/geometry.hpp"
#include "rhls/norms.hpp"
#include "rhls/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace rhls {

namespace {

void require_critical(const ExponentSet& exps, const char* who) {
  if (!is_critical_pair(exps))
    throw std::invalid_argument(std::string(who) +
                                ": requires the critical exponent set");
}

std::size_t origin_index(const RadialFn& f) {
  const double steps = -f.log_radii.front() / f.step();
  const long j = std::lround(steps);
  if (j < 0 || static_cast<std::size_t>(j) >= f.size() ||
      std::fabs(steps - static_cast<double>(j)) > 1e-9)
    throw std::invalid_argument("grid does not contain the unit radius");
  return static_cast<std::size_t>(j);
}

}  // namespace

ZonalFn extremal_sphere(const ExtremalParamsSphere& params, const ExponentSet& exps,
                        std::size_t nodes) {
  if (!(params.a > 0.0)) throw std::invalid_argument("extremal_sphere: need a > 0");
  if (!(std::fabs(params.eta) < 1.0))
    throw std::invalid_argument("extremal_sphere: need |eta| < 1");
  ZonalFn grid = make_zonal_grid(exps.n, nodes);
  const double power = -0.5 * (exps.n + exps.alpha);
  for (std::size_t k = 0; k < grid.size(); ++k)
    grid.values[k] =
        params.a * std::pow(1.0 - params.eta * std::cos(grid.angles[k]), power);
  return grid;
}

RadialFn extremal_rn(const ExtremalParamsRn& params, const ExponentSet& exps,
                     double window, std::size_t nodes) {
  if (!(params.c > 0.0) || !(params.d > 0.0))
    throw std::invalid_argument("extremal_rn: need c > 0 and d > 0");
  RadialFn grid = make_log_grid(exps.n, window, nodes);
  const double power = -0.5 * (exps.n + exps.alpha);
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double r2 = std::exp(2.0 * grid.log_radii[k]);
    grid.values[k] = params.c * std::pow(r2 + params.d * params.d, power);
  }
  return grid;
}

ExtremalParamsSphere lift_params(const ExtremalParamsRn& params,
                                 const ExponentSet& exps) {
  if (!(params.c > 0.0) || !(params.d > 0.0))
    throw std::invalid_argument("lift_params: need c > 0 and d > 0");
  const double d2 = params.d * params.d;
  ExtremalParamsSphere out;
  out.eta = (1.0 - d2) / (1.0 + d2);
  out.a = params.c * std::pow(1.0 + d2, -0.5 * (exps.n + exps.alpha));
  return out;
}

ExtremalParamsRn drop_params(const ExtremalParamsSphere& params,
                             const ExponentSet& exps) {
  if (!(params.a > 0.0) || !(std::fabs(params.eta) < 1.0))
    throw std::invalid_argument("drop_params: need a > 0 and |eta| < 1");
  ExtremalParamsRn out;
  out.d = std::sqrt((1.0 - params.eta) / (1.0 + params.eta));
  out.c = params.a * std::pow(1.0 + out.d * out.d, 0.5 * (exps.n + exps.alpha));
  return out;
}

ELConstants derive_el_constants(double d, const ExponentSet& exps, double window,
                                std::size_t nodes) {
  if (!(d > 0.0)) throw std::invalid_argument("derive_el_constants: need d > 0");
  require_critical(exps, "derive_el_constants");

  RadialFn grid = make_log_grid(exps.n, window, nodes);
  const double half = 0.5 * (exps.alpha - exps.n);
  std::vector<double> profile(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double r2 = std::exp(2.0 * grid.log_radii[k]);
    profile[k] = std::pow(r2 + d * d, half);
  }
  std::vector<double> powered(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    powered[k] = std::pow(profile[k], exps.kappa);

  const RadialOpResult op =
      radial_operator(RadialFn(grid.log_radii, powered, exps.n), exps);
  // Smallest radius: the window truncation is weakest there and the profile
  // is flattest, so the measured response is cleanest.
  const double phi = op.fn.values[0] / profile[0];
  if (!(phi > 0.0)) throw std::runtime_error("derive_el_constants: lost positivity");

  // Amplitude ratio rho = (amplitude of u)/(amplitude of v) solves
  // (1 + theta) log rho = 0; bisection on a bracketing interval.
  const double slope = 1.0 + exps.theta;
  double lo = 0.5, hi = 2.0;
  auto g = [&](double rho) { return slope * std::log(rho); };
  if (g(lo) * g(hi) > 0.0)
    throw std::runtime_error("derive_el_constants: ratio root not bracketed");
  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(lo) * g(mid) <= 0.0)
      hi = mid;
    else
      lo = mid;
  }

  ELConstants out;
  out.ratio = 0.5 * (lo + hi);
  out.phi = phi;
  out.c1 = std::exp(std::log(phi) / (1.0 - exps.kappa));
  out.c2 = out.c1 / out.ratio;
  return out;
}

ELPair make_el_pair(double d, const ExponentSet& exps, double window,
                    std::size_t nodes) {
  const ELConstants consts = derive_el_constants(d, exps, window, nodes);
  RadialFn grid = make_log_grid(exps.n, window, nodes);
  const double half = 0.5 * (exps.alpha - exps.n);
  std::vector<double> uv(grid.size()), vv(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double r2 = std::exp(2.0 * grid.log_radii[k]);
    const double profile = std::pow(r2 + d * d, half);
    uv[k] = consts.c1 * profile;
    vv[k] = consts.c2 * profile;
  }
  ELPair pair;
  pair.u = RadialFn(grid.log_radii, std::move(uv), exps.n);
  pair.v = RadialFn(grid.log_radii, std::move(vv), exps.n);
  pair.exps = exps;
  pair.a = consts.c1;
  pair.b = consts.c2;
  pair.d = d;
  return pair;
}

ELReport el_residual(const ELPair& pair) {
  const ExponentSet& exps = pair.exps;
  require_critical(exps, "el_residual");
  const std::size_t m = pair.u.size();
  if (pair.v.size() != m) throw std::invalid_argument("el_residual: size mismatch");

  auto apply_power = [&](const RadialFn& f, double power) {
    std::vector<double> vals(m);
    for (std::size_t k = 0; k < m; ++k) {
      if (!(f.values[k] > 0.0))
        throw std::invalid_argument("el_residual: need strictly positive pair");
      vals[k] = std::pow(f.values[k], power);
    }
    return radial_operator(RadialFn(f.log_radii, std::move(vals), f.n), exps).fn;
  };
  const RadialFn Tu = apply_power(pair.v, exps.kappa);
  const RadialFn Tv = apply_power(pair.u, exps.theta);

  ELReport rep;
  for (std::size_t k = 0; k < m; ++k) {
    rep.residual_u =
        std::max(rep.residual_u, std::fabs(Tu.values[k] - pair.u.values[k]) /
                                     pair.u.values[k]);
    rep.residual_v =
        std::max(rep.residual_v, std::fabs(Tv.values[k] - pair.v.values[k]) /
                                     pair.v.values[k]);
  }

  const double half = 0.5 * (exps.alpha - exps.n);
  double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
  for (std::size_t k = 0; k < m; ++k) {
    const double r2 = std::exp(2.0 * pair.u.log_radii[k]);
    const double ratio =
        pair.u.values[k] / std::pow(r2 + pair.d * pair.d, half);
    rmin = std::min(rmin, ratio);
    rmax = std::max(rmax, ratio);
  }
  rep.bound_factor = std::sqrt(rmax / rmin);
  rep.within_bounds = rep.bound_factor <= 10.0;
  return rep;
}

AsymptoticResult asymptotic_coeffs(const ELPair& pair) {
  const ExponentSet& exps = pair.exps;
  require_critical(exps, "asymptotic_coeffs");
  const double decade = std::log(10.0);

  // plateau of r^{n-alpha} f over the last decade of the window
  auto plateau = [&](const RadialFn& f, bool& flat) {
    const double top = f.log_radii.back();
    double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
    std::size_t count = 0;
    for (std::size_t k = 0; k < f.size(); ++k) {
      if (f.log_radii[k] < top - decade) continue;
      const double y =
          std::exp((exps.n - exps.alpha) * f.log_radii[k]) * f.values[k];
      lo = std::min(lo, y);
      hi = std::max(hi, y);
      sum += y;
      ++count;
    }
    const double mean = sum / static_cast<double>(count);
    flat = (hi - lo) <= 1e-4 * mean;
    return mean;
  };
  auto total_integral = [&](const RadialFn& f, double power) {
    const std::vector<double> mw = f.measure_weights();
    double acc = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k)
      acc += mw[k] * std::pow(f.values[k], power);
    return acc;
  };

  AsymptoticResult res;
  bool flat_u = false, flat_v = false;
  res.a_limit = plateau(pair.u, flat_u);
  res.b_limit = plateau(pair.v, flat_v);
  res.a_integral = total_integral(pair.v, exps.kappa);
  res.b_integral = total_integral(pair.u, exps.theta);
  res.stabilized = flat_u && flat_v;
  res.rel_gap =
      std::max(std::fabs(res.a_limit - res.a_integral) / res.a_integral,
               std::fabs(res.b_limit - res.b_integral) / res.b_integral);
  return res;
}

MinimizeResult fixed_point_minimize(const ZonalFn& F0, const ExponentSet& exps,
                                    double damping, double tol,
                                    std::size_t max_iters) {
  require_critical(exps, "fixed_point_minimize");
  if (F0.n != exps.n)
    throw std::invalid_argument("fixed_point_minimize: dimension mismatch");
  if (!(damping > 0.0 && damping <= 1.0))
    throw std::invalid_argument("fixed_point_minimize: need damping in (0,1]");
  for (double v : F0.values)
    if (!(v > 0.0))
      throw std::invalid_argument("fixed_point_minimize: need a positive start");

  const ZonalKernelMatrix K = make_kernel_matrix(exps.n, exps.alpha, F0.size());
  for (std::size_t k = 0; k < F0.size(); ++k)
    if (std::fabs(F0.angles[k] - K.grid.angles[k]) > 1e-12)
      throw std::invalid_argument(
          "fixed_point_minimize: start must live on the Gauss grid");

  const std::size_t m = F0.size();
  const std::vector<double>& w = K.grid.weights;
  std::vector<double> F = F0.values;

  auto normalize = [&](std::vector<double>& v) {
    const double nrm = lp_quasi_norm(v, w, exps.p);
    if (!(nrm > 0.0))
      throw std::runtime_error("fixed_point_minimize: norm collapsed");
    for (double& x : v) x /= nrm;
  };
  normalize(F);

  MinimizeResult res;
  double prev_q = 0.0;
  std::size_t it = 0;
  for (; it < max_iters; ++it) {
    const std::vector<double> G = K.apply(F);
    double q = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      if (!(G[k] > 0.0))
        throw std::runtime_error("fixed_point_minimize: lost positivity");
      q += w[k] * F[k] * G[k];
    }
    res.trace.push_back(q);
    if (it > 0 && std::fabs(q - prev_q) < tol) {
      res.converged = true;
      break;
    }
    prev_q = q;

    std::vector<double> W(m);
    for (std::size_t k = 0; k < m; ++k) W[k] = std::pow(G[k], exps.kappa);
    std::vector<double> H = K.apply(W);
    std::vector<double> next(m);
    for (std::size_t k = 0; k < m; ++k) {
      if (!(H[k] > 0.0))
        throw std::runtime_error("fixed_point_minimize: lost positivity");
      next[k] = std::pow(H[k], exps.theta);
    }
    normalize(next);
    for (std::size_t k = 0; k < m; ++k)
      F[k] = (1.0 - damping) * F[k] + damping * next[k];
    normalize(F);
  }
  res.iterations = it;
  res.F = ZonalFn(F0.angles, F0.weights, std::move(F), F0.n);
  return res;
}

std::vector<ConcentrationRow> concentration_demo(const ExponentSet& exps,
                                                 const std::vector<double>& epsilons,
                                                 double window,
                                                 std::size_t nodes) {
  require_critical(exps, "concentration_demo");
  std::vector<ConcentrationRow> rows;
  rows.reserve(epsilons.size());
  for (double eps : epsilons) {
    if (!(eps > 0.0))
      throw std::invalid_argument("concentration_demo: need eps > 0");
    ExtremalParamsRn params;
    params.d = eps;
    params.c = std::pow(eps, 0.5 * (exps.n + exps.alpha));
    const RadialFn f = extremal_rn(params, exps, window, nodes);
    const RadialFn Tf = radial_operator(f, exps).fn;
    const std::vector<double> mw = f.measure_weights();

    ConcentrationRow row;
    row.eps = eps;
    row.norm_p = lp_quasi_norm(f, exps.p);
    double ip = 0.0;
    for (std::size_t k = 0; k < f.size(); ++k) ip += mw[k] * f.values[k] * Tf.values[k];
    row.quotient = ip / (row.norm_p * row.norm_p);
    const std::size_t j0 = origin_index(f);
    row.value_at_one = f.values[j0];
    row.image_at_one = Tf.values[j0];
    rows.push_back(row);
  }
  return rows;
}

MovingSphereResult moving_sphere_check(const RadialFn& u, double lam,
                                       const ExponentSet& exps) {
  if (!(lam > 0.0)) throw std::invalid_argument("moving_sphere_check: need lam > 0");
  const KelvinParams kp(std::vector<double>(u.n, 0.0), lam);
  const RadialFn reflected = kelvin_transform(u, kp, exps);

  const double log_lam = std::log(lam);
  const double lo = u.log_radii.front();
  MovingSphereResult res;
  res.min_gap = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < u.size(); ++k) {
    const double uk = u.log_radii[k];
    // only radii beyond lam whose reflection stays inside the window
    if (!(uk > log_lam + 1e-12)) continue;
    if (2.0 * log_lam - uk < lo - 1e-12) continue;
    const double gap = reflected.values[k] - u.values[k];
    if (gap < res.min_gap) {
      res.min_gap = gap;
      res.at_radius = std::exp(uk);
    }
    ++res.compared;
  }
  if (res.compared == 0)
    throw std::invalid_argument("moving_sphere_check: window excludes every radius");
  return res;
}

}  // namespace rhls
