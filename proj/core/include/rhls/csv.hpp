#pragma once

#include "rhls/grids.hpp"

#include <string>
#include <vector>

namespace rhls {

// All containers serialize to three CSV columns: grid coordinate, weight,
// value.  Zonal: (theta, quadrature weight, value).  Radial: (ln r, measure
// weight, value).  Sampled: (cell midpoint, cell width, value).

void write_zonal_csv(const ZonalFn& f, const std::string& path);
void write_radial_csv(const RadialFn& f, const std::string& path);
void write_sampled_csv(const SampledFn1D& f, const std::string& path);

ZonalFn read_zonal_csv(const std::string& path, int n);
RadialFn read_radial_csv(const std::string& path, int n);
SampledFn1D read_sampled_csv(const std::string& path);

// Column-agnostic load for norm evaluation on any of the three layouts.
struct WeightedSamples {
  std::vector<double> coords, weights, values;
};
WeightedSamples read_weighted_csv(const std::string& path);

}  // namespace rhls
