#include "rhls/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rhls {

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

void write_rows(const std::string& path, const char* header,
                const std::vector<double>& a, const std::vector<double>& b,
                const std::vector<double>& c) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  os << header << "\n";
  for (std::size_t k = 0; k < a.size(); ++k)
    os << fmt(a[k]) << ',' << fmt(b[k]) << ',' << fmt(c[k]) << "\n";
  if (!os) throw std::runtime_error("write failed: " + path);
}

// Read-side problems are invalid_argument: the caller named the file.
WeightedSamples read_rows(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("cannot open: " + path);
  WeightedSamples out;
  std::string line;
  bool first = true;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (first) {
      first = false;
      if (!line.empty() && !(std::isdigit((unsigned char)line[0]) ||
                             line[0] == '-' || line[0] == '+'))
        continue;  // header row
    }
    std::istringstream ls(line);
    double v[3];
    char comma;
    if (!(ls >> v[0] >> comma >> v[1] >> comma >> v[2]))
      throw std::invalid_argument("malformed CSV row in " + path + ": " + line);
    out.coords.push_back(v[0]);
    out.weights.push_back(v[1]);
    out.values.push_back(v[2]);
  }
  if (out.coords.empty()) throw std::invalid_argument("no data rows in " + path);
  return out;
}

}  // namespace

void write_zonal_csv(const ZonalFn& f, const std::string& path) {
  write_rows(path, "theta,weight,value", f.angles, f.weights, f.values);
}
void write_radial_csv(const RadialFn& f, const std::string& path) {
  write_rows(path, "log_r,weight,value", f.log_radii, f.measure_weights(),
             f.values);
}
void write_sampled_csv(const SampledFn1D& f, const std::string& path) {
  write_rows(path, "mid,width,value", f.midpoints(), f.widths(), f.values);
}

ZonalFn read_zonal_csv(const std::string& path, int n) {
  WeightedSamples s = read_rows(path);
  return ZonalFn(std::move(s.coords), std::move(s.weights), std::move(s.values), n);
}

RadialFn read_radial_csv(const std::string& path, int n) {
  WeightedSamples s = read_rows(path);
  return RadialFn(std::move(s.coords), std::move(s.values), n);
}

SampledFn1D read_sampled_csv(const std::string& path) {
  WeightedSamples s = read_rows(path);
  std::vector<double> edges(s.coords.size() + 1);
  for (std::size_t k = 0; k < s.coords.size(); ++k) {
    edges[k] = s.coords[k] - 0.5 * s.weights[k];
    edges[k + 1] = s.coords[k] + 0.5 * s.weights[k];
  }
  for (std::size_t k = 0; k + 1 < s.coords.size(); ++k) {
    const double gap = (s.coords[k + 1] - 0.5 * s.weights[k + 1]) - edges[k + 1];
    if (std::fabs(gap) > 1e-9 * std::max(1.0, std::fabs(edges[k + 1])))
      throw std::invalid_argument("sampled CSV cells are not contiguous: " + path);
  }
  return SampledFn1D(std::move(edges), std::move(s.values));
}

WeightedSamples read_weighted_csv(const std::string& path) { return read_rows(path); }

}  // namespace rhls
