#include "rhls/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rhls {

namespace {

void check_r(double r) {
  if (!(r < 1.0) || r == 0.0)
    throw std::invalid_argument("quasi-norm exponent must lie in (0,1) or be negative");
}

void check_lengths(std::span<const double> v, std::span<const double> w) {
  if (v.size() != w.size())
    throw std::invalid_argument("values/weights length mismatch");
  if (v.empty()) throw std::invalid_argument("empty sample set");
}

// Sorted distinct values with accumulated weights of {g = v}, {g <= v}.
struct Distribution {
  std::vector<double> value;
  std::vector<double> cum_le;  // meas{g <= value[j]}
  double total = 0.0;
};

Distribution build_distribution(std::span<const double> v,
                                std::span<const double> w) {
  check_lengths(v, w);
  std::vector<std::size_t> idx(v.size());
  for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  Distribution d;
  double cum = 0.0;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    const double val = v[idx[k]];
    const double wt = w[idx[k]];
    if (!(wt >= 0.0)) throw std::invalid_argument("negative weight");
    cum += wt;
    if (!d.value.empty() && val == d.value.back())
      d.cum_le.back() = cum;
    else {
      d.value.push_back(val);
      d.cum_le.push_back(cum);
    }
  }
  d.total = cum;
  return d;
}

}  // namespace

double lp_quasi_norm(std::span<const double> values,
                     std::span<const double> weights, double r) {
  check_r(r);
  check_lengths(values, weights);
  double acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k) {
    const double v = values[k];
    if (!(v >= 0.0)) throw std::invalid_argument("lp_quasi_norm: negative value");
    if (v == 0.0) {
      if (r < 0.0) return 0.0;  // degenerate limit
      continue;
    }
    acc += weights[k] * std::pow(v, r);
  }
  if (acc == 0.0) return 0.0;
  return std::pow(acc, 1.0 / r);
}

double lp_quasi_norm(const SampledFn1D& g, double r) {
  return lp_quasi_norm(g.values, g.widths(), r);
}
double lp_quasi_norm(const ZonalFn& f, double r) {
  return lp_quasi_norm(f.values, f.weights, r);
}
double lp_quasi_norm(const RadialFn& f, double r) {
  return lp_quasi_norm(f.values, f.measure_weights(), r);
}

double distribution_lt(std::span<const double> values,
                       std::span<const double> weights, double tau) {
  check_lengths(values, weights);
  double acc = 0.0;
  for (std::size_t k = 0; k < values.size(); ++k)
    if (values[k] < tau) acc += weights[k];
  return acc;
}

double distribution_lt(const SampledFn1D& g, double tau) {
  return distribution_lt(g.values, g.widths(), tau);
}

double lr_norm_via_layer_cake(const SampledFn1D& g, double r) {
  if (!(r < 0.0)) throw std::invalid_argument("layer-cake route requires r < 0");
  const Distribution d = build_distribution(g.values, g.widths());
  if (d.value.front() == 0.0) return 0.0;  // m~ > 0 down to t = 0: divergent power
  // |r| int t^{r-1} m~(t) dt = sum_j M_j (v_j^r - v_{j+1}^r), v_{K+1}^r -> 0.
  double power = 0.0;
  for (std::size_t j = 0; j < d.value.size(); ++j) {
    const double lo = std::pow(d.value[j], r);
    const double hi =
        (j + 1 < d.value.size()) ? std::pow(d.value[j + 1], r) : 0.0;
    power += d.cum_le[j] * (lo - hi);
  }
  return std::pow(power, 1.0 / r);
}

double weak_quasi_norm(std::span<const double> values,
                       std::span<const double> weights, double r) {
  check_r(r);
  const Distribution d = build_distribution(values, weights);
  std::vector<double> cand = d.value;
  for (std::size_t j = 0; j + 1 < d.value.size(); ++j)
    cand.push_back(0.5 * (d.value[j] + d.value[j + 1]));

  auto cum_le_at = [&](double t) {
    // meas{g <= t}
    auto it = std::upper_bound(d.value.begin(), d.value.end(), t);
    if (it == d.value.begin()) return 0.0;
    return d.cum_le[std::size_t(it - d.value.begin()) - 1];
  };

  double best = 0.0;
  if (r > 0.0) {
    for (double t : cand) {
      // meas{g >= t} = total - meas{g < t}; use the closed version at samples
      auto it = std::lower_bound(d.value.begin(), d.value.end(), t);
      const double lt = (it == d.value.begin())
                            ? 0.0
                            : d.cum_le[std::size_t(it - d.value.begin()) - 1];
      const double ge = d.total - lt;
      if (ge > 0.0 && t > 0.0) best = std::max(best, t * std::pow(ge, 1.0 / r));
    }
    return best;
  }
  if (d.value.front() == 0.0) return 0.0;  // sup diverges; degenerate norm
  for (double t : cand) {
    const double le = cum_le_at(t);
    if (le > 0.0) best = std::max(best, le * std::pow(t, r));
  }
  if (best == 0.0) return std::numeric_limits<double>::infinity();
  return std::pow(best, 1.0 / r);
}

double weak_quasi_norm(const SampledFn1D& g, double r) {
  return weak_quasi_norm(g.values, g.widths(), r);
}

}  // namespace rhls
