#pragma once

#include "rhls/exponents.hpp"
#include "rhls/grids.hpp"

#include <vector>

namespace rhls {

// Stereographic correspondence between R^n and the unit sphere S^n in
// R^{n+1}, projecting from the south pole: the origin maps to the north
// pole and |x| -> infinity approaches the south pole.

std::vector<double> stereo_lift_point(const std::vector<double>& x);
std::vector<double> stereo_drop_point(const std::vector<double>& xi);
double chordal_distance(const std::vector<double>& x, const std::vector<double>& y);

// Inversion in the sphere of radius lambda about a center.
struct KelvinParams {
  std::vector<double> center;  // empty means the origin
  double lambda = 1.0;

  KelvinParams() = default;
  KelvinParams(std::vector<double> center, double lambda);
  bool centered_at_origin() const;
};

std::vector<double> kelvin_point(const std::vector<double>& x, const KelvinParams& kp);

// Polar angle on S^n of the lifted point with log radius u = ln|x|.
// Equals arccos(-tanh u); evaluated as 2*atan(e^u) which stays strictly
// inside (0, pi) even for |u| ~ 20 where cos(theta) rounds to +-1.
double lift_angle(double u);
double drop_log_radius(double theta);  // inverse: ln tan(theta/2)

// Transport a radial function on the log grid to a zonal function on the
// lifted grid (and back).  The conformal weight ((1+r^2)/2)^{(n+alpha)/2}
// makes the bilinear kernel form invariant; at the critical exponent the
// L^p quasi-norm is preserved node-by-node.
ZonalFn lift_function(const RadialFn& f, const ExponentSet& exps);
RadialFn drop_function(const ZonalFn& F, const ExponentSet& exps);

struct DilationResult {
  RadialFn fn;
  bool aligned;                  // true when ln(lambda) hit the grid lattice
  double clipped_mass_fraction;  // share of mass pushed outside the window
};

// g^lambda(x) = lambda^{-n/p} g(x / lambda) on the same log grid.  A shift
// by ln(lambda) that lands on the lattice is applied exactly; otherwise
// values are resampled with a monotone (shape-preserving) cubic.
DilationResult dilate(const RadialFn& g, double lambda, const ExponentSet& exps);

// w_{0,lambda}(x) = (lambda/|x|)^{n-alpha} w(lambda^2 x / |x|^2) on the same
// log grid (center must be the origin for the radial representation).  In
// log coordinates this is the reflection u -> 2 ln(lambda) - u; sources
// reflected outside the stored window read as zero.
RadialFn kelvin_transform(const RadialFn& w, const KelvinParams& kp, const ExponentSet& exps);

}  // namespace rhls
