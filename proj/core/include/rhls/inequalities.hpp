#pragma once

#include "rhls/exponents.hpp"
#include "rhls/grids.hpp"
#include "rhls/operators.hpp"

#include <cstdint>
#include <vector>

namespace rhls {

// Outcome of a single two-sided comparison lhs >= rhs.  margin = lhs - rhs;
// rel_margin is the margin divided by max(|lhs|, |rhs|) (0 if both vanish).
// degenerate marks cases where one side collapsed to zero and the comparison
// holds vacuously.
struct CheckResult {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  double rel_margin = 0.0;
  bool holds = false;
  bool degenerate = false;
};

// sum w f g  >=  ||f||_p ||g||_{p'} with p in (0,1), p' = p/(p-1) < 0.
// Requires f, g >= 0; any zero of g kills the right side (degenerate).
CheckResult reversed_holder_check(const std::vector<double>& f,
                                  const std::vector<double>& g,
                                  const std::vector<double>& weights, double p);

// || sum_y F(.,y) w_y ||_q  >=  sum_y ||F(.,y)||_q w_y for q < 1, q != 0.
// F is row-major: F[i*ny + j] = F(x_i, y_j), all entries >= 0.
CheckResult reversed_minkowski_check(const std::vector<double>& F,
                                     const std::vector<double>& wx,
                                     const std::vector<double>& wy, double q);

// Conjugate triple for the convolution inequality: p in (0,1), q < 0, r < 0
// with 1/p + 1/q = 1 + 1/r.  Throws on an inconsistent triple.
struct YoungTriple {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  YoungTriple(double p_, double q_, double r_);
};

// ||f * g||_r >= ||f||_p ||g||_q on the circle of circumference 2 pi.
// f and g are cell values of step functions on the same uniform partition;
// the convolution (piecewise linear) is evaluated exactly and all three
// quasi-norms use matching midpoint samples.  Constants give equality.
CheckResult converse_young_check(const std::vector<double>& f,
                                 const std::vector<double>& g,
                                 const YoungTriple& triple);

// Sort descending / ascending; equal-weight rearrangements for values on
// cells of equal measure.  The increasing variant is the natural companion
// for negative exponents and therefore rejects non-positive entries.
std::vector<double> decreasing_rearrangement(std::vector<double> values);
std::vector<double> increasing_rearrangement(std::vector<double> values);

// Rearrangement comparison for the reversed convolution functional:
//   || I_alpha f ||_q  >=  || I_alpha f* ||_q,
// where f is the radial step function taking cell_values on N cells of equal
// volume filling the ball |y|^n <= S and f* is its decreasing rearrangement.
// Evaluated on a log-radius grid wide enough that both tails match.
CheckResult riesz_reversed_check(const std::vector<double>& cell_values, double S,
                                 const ExponentSet& exps,
                                 std::size_t log_nodes = 513, double window = 10.0);

// Rayleigh-type quotient Q(F) = <T F, F> / ||F||_p^2 at the critical p for
// (n, alpha); the reversed inequality says Q >= sharp for every F >= 0.
struct QuotientResult {
  double quotient = 0.0;
  double sharp = 0.0;
  double margin = 0.0;      // quotient - sharp
  double rel_margin = 0.0;  // margin / sharp
};

QuotientResult hls_quotient(const ZonalKernelMatrix& K, const ZonalFn& F);
QuotientResult hls_quotient(const ZonalFn& F, const ExponentSet& exps);

// Two-function form <T F, G> >= sharp ||F||_p ||G||_p (critical exponents).
// Also verifies <T F, G> = <F, T G> to round-off as a symmetry sanity check.
CheckResult bilinear_form_check(const ZonalKernelMatrix& K, const ZonalFn& F,
                                const ZonalFn& G);

// Weak-type constant of the operator output on the radial grid:
//   C = weak_q(T f) / ||f||_p,
// together with a consistency probe: at the threshold tau* achieving the
// weak norm, splitting the kernel at radius rho(tau*) = tau*^{p/(p alpha - n)}
// and re-summing near + far must reproduce the unsplit operator.
struct WeakTypeResult {
  double constant = 0.0;
  double tau_star = 0.0;
  double rho_star = 0.0;
  double split_residual = 0.0;  // max pointwise |near+far-full| / scale
  bool split_consistent = false;
};

WeakTypeResult weak_type_constant(const RadialFn& f, const ExponentSet& exps);

// Log-normal positive samples, deterministic in the seed; values are
// exp(sigma * z) clipped below at 1e-6.
std::vector<double> random_positive_values(std::size_t count, std::uint64_t seed,
                                           double sigma = 0.3);

}  // namespace rhls
