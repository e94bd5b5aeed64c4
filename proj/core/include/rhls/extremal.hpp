#pragma once

#include "rhls/exponents.hpp"
#include "rhls/grids.hpp"

#include <cstddef>
#include <vector>

namespace rhls {

// Sphere-side family a (1 - eta cos theta)^{-(n+alpha)/2}, |eta| < 1.
struct ExtremalParamsSphere {
  double a = 1.0;
  double eta = 0.0;
};

// Flat-side family c (r^2 + d^2)^{-(n+alpha)/2}, d > 0.
struct ExtremalParamsRn {
  double c = 1.0;
  double d = 1.0;
};

ZonalFn extremal_sphere(const ExtremalParamsSphere& params, const ExponentSet& exps,
                        std::size_t nodes = 256);
RadialFn extremal_rn(const ExtremalParamsRn& params, const ExponentSet& exps,
                     double window = 12.0, std::size_t nodes = 1025);

// Parameter correspondence under the conformal lift:
//   eta = (1 - d^2) / (1 + d^2),   a = c (1 + d^2)^{-(n+alpha)/2}.
ExtremalParamsSphere lift_params(const ExtremalParamsRn& params,
                                 const ExponentSet& exps);
ExtremalParamsRn drop_params(const ExtremalParamsSphere& params,
                             const ExponentSet& exps);

// Amplitudes (c1, c2) making u = c1 (r^2+d^2)^{(alpha-n)/2} and
// v = c2 (r^2+d^2)^{(alpha-n)/2} solve u = T(v^kappa), v = T(u^theta).
// The ratio c1/c2 is pinned to 1 by a sign-definite root equation (bisection)
// and the common amplitude follows from the numerically measured linear
// response phi = T(profile^kappa) / profile.
struct ELConstants {
  double c1 = 0.0;
  double c2 = 0.0;
  double ratio = 0.0;  // c1/c2 from the root solve (1 exactly)
  double phi = 0.0;    // measured response of the profile
};

ELConstants derive_el_constants(double d, const ExponentSet& exps,
                                double window = 16.0, std::size_t nodes = 1025);

// Discretized solution pair of the integral system, with its asymptotic
// coefficients a = lim r^{n-alpha} u and b = lim r^{n-alpha} v.
struct ELPair {
  RadialFn u;
  RadialFn v;
  ExponentSet exps;
  double a = 0.0;
  double b = 0.0;
  double d = 0.0;
};

ELPair make_el_pair(double d, const ExponentSet& exps, double window = 16.0,
                    std::size_t nodes = 1025);

// Residuals of the system equations and the two-sided profile bound:
// bound_factor = C means C^{-1} <= u / (amp * profile) <= C on the grid
// for the best constant amplitude amp.
struct ELReport {
  double residual_u = 0.0;  // max_j |T(v^kappa) - u| / u
  double residual_v = 0.0;  // max_j |T(u^theta) - v| / v
  double bound_factor = 0.0;
  bool within_bounds = false;  // bound_factor <= 10
};

ELReport el_residual(const ELPair& pair);

// Boundary coefficients of a solution pair: r^{n-alpha} u(r) must stabilize
// at large r to the total integral of v^kappa (and symmetrically for v).
struct AsymptoticResult {
  double a_limit = 0.0;     // plateau of r^{n-alpha} u over the last decade
  double a_integral = 0.0;  // quadrature of v^kappa over the whole space
  double b_limit = 0.0;     // plateau of r^{n-alpha} v
  double b_integral = 0.0;  // quadrature of u^theta
  double rel_gap = 0.0;     // worst |limit - integral| / integral
  bool stabilized = false;  // both plateaus flat to 1e-4 relative
};

AsymptoticResult asymptotic_coeffs(const ELPair& pair);

// Damped double-application iteration for the sphere quotient at critical
// exponents: F <- normalize_p((1-damping) F + damping (T[(T F)^kappa])^theta).
// The trace records the quotient before each update.
struct MinimizeResult {
  ZonalFn F;
  std::vector<double> trace;
  bool converged = false;
  std::size_t iterations = 0;
};

MinimizeResult fixed_point_minimize(const ZonalFn& F0, const ExponentSet& exps,
                                    double damping = 0.5, double tol = 1e-10,
                                    std::size_t max_iters = 500);

// Concentration family: the eps-dilate of the unit extremal.  Each row keeps
// the conserved norm, the quotient, and the pointwise collapse/blow-up pair
// at |x| = 1.
struct ConcentrationRow {
  double eps = 0.0;
  double norm_p = 0.0;
  double quotient = 0.0;
  double value_at_one = 0.0;  // f_eps(e_1) -> 0
  double image_at_one = 0.0;  // (T f_eps)(e_1), increasing as eps -> 0
};

std::vector<ConcentrationRow> concentration_demo(const ExponentSet& exps,
                                                 const std::vector<double>& epsilons =
                                                     {1.0, 0.1, 0.01},
                                                 double window = 20.0,
                                                 std::size_t nodes = 1025);

// Inversion comparison for the sliding-sphere argument: minimum of
// u_lam - u over grid radii r > lam whose reflected point stays inside the
// window (u_lam is the inversion of u in the sphere of radius lam).
struct MovingSphereResult {
  double min_gap = 0.0;
  double at_radius = 0.0;
  std::size_t compared = 0;
};

MovingSphereResult moving_sphere_check(const RadialFn& u, double lam,
                                       const ExponentSet& exps);

}  // namespace rhls
