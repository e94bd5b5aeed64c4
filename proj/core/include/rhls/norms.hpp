#pragma once

#include "rhls/grids.hpp"

#include <span>

namespace rhls {

// (sum_k w_k v_k^r)^{1/r} for r in (0,1) or r < 0.  These are quasi-norms:
// no triangle inequality is implied.  Convention for r < 0: any vanishing
// value makes the norm 0 (the degenerate limit).
double lp_quasi_norm(std::span<const double> values,
                     std::span<const double> weights, double r);
double lp_quasi_norm(const SampledFn1D& g, double r);
double lp_quasi_norm(const ZonalFn& f, double r);
double lp_quasi_norm(const RadialFn& f, double r);

// Sub-level measure m~(tau) = meas{ g < tau } (strict inequality).
double distribution_lt(std::span<const double> values,
                       std::span<const double> weights, double tau);
double distribution_lt(const SampledFn1D& g, double tau);

// Layer-cake route to the r-th power norm for r < 0:
//   ||g||_r^r = |r| int_0^inf t^{r-1} m~(t) dt,
// integrated algebraically between the breakpoints of m~ with the exact
// algebraic tail beyond the largest sample.  Returns the norm (power 1/r).
double lr_norm_via_layer_cake(const SampledFn1D& g, double r);

// Weak quasi-norm.  r > 0: sup_t t * meas{g > t}^{1/r}.  r < 0: the
// inf-of-bounds convention, equal to (sup_t m~(t) t^r)^{1/r}.  The sup runs
// over the sample values and midpoints of consecutive distinct values, with
// the closed sub/super-level measure at the candidate point.
double weak_quasi_norm(std::span<const double> values,
                       std::span<const double> weights, double r);
double weak_quasi_norm(const SampledFn1D& g, double r);

}  // namespace rhls
