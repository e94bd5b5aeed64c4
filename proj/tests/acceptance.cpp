// Acceptance gate: ten numbered end-to-end checks, each printing exactly one
// [PASS]/[FAIL] line.  Run with no arguments for the full gate or with
// `--criterion N` for a single one.  Exit status is the number of failures.

#include "rhls/exponents.hpp"
#include "rhls/extremal.hpp"
#include "rhls/geometry.hpp"
#include "rhls/inequalities.hpp"
#include "rhls/norms.hpp"
#include "rhls/operators.hpp"
#include "rhls/special.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

using namespace rhls;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  int id;
  const char* label;
  double time_limit;  // seconds; 0 disables the wall-clock gate
  std::function<bool(std::string&)> body;
};

bool close_rel(double a, double b, double tol) {
  return std::fabs(a - b) <= tol * std::max(std::fabs(a), std::fabs(b));
}

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

// ---- 1: closed-form sharp constants vs the quadrature route ----
bool crit_sharp_constants(std::string& detail) {
  const double oracle12 = 2.0 / (kPi * kPi);
  const double oracle24 = 1.0 / (2.0 * kPi);
  if (!close_rel(sharp_constant(1, 2.0), oracle12, 1e-12) ||
      !close_rel(sharp_constant(2, 4.0), oracle24, 1e-12)) {
    detail = "closed form mismatch";
    return false;
  }
  struct Case {
    int n;
    double alpha, oracle;
  };
  for (const Case& c : {Case{1, 2.0, oracle12}, Case{2, 4.0, oracle24}}) {
    const ZonalKernelMatrix K = make_kernel_matrix(c.n, c.alpha, 256);
    const double front = std::pow(sphere_area(c.n), -c.alpha / c.n);
    double worst = 0.0;
    for (double s : K.row_sums())
      worst = std::max(worst, std::fabs(front * s - c.oracle) / c.oracle);
    if (worst > 1e-8) {
      detail = "quadrature route off by " + fmt(worst);
      return false;
    }
  }
  detail = "closed forms and 256-node quadrature agree";
  return true;
}

// ---- 2: kernel-integral row sums ----
bool crit_row_sums(std::string& detail) {
  struct Case {
    int n;
    double alpha, oracle;
  };
  double worst = 0.0;
  for (const Case& c : {Case{1, 2.0, 8.0}, Case{2, 3.0, 16.0 * kPi / 3.0}}) {
    const ZonalKernelMatrix K = make_kernel_matrix(c.n, c.alpha, 256);
    for (double s : K.row_sums())
      worst = std::max(worst, std::fabs(s - c.oracle) / c.oracle);
  }
  detail = "worst relative row-sum error " + fmt(worst);
  return worst <= 1e-8;
}

// ---- 3: the extremal family attains the sharp constant ----
bool crit_equality_cases(std::string& detail) {
  struct Pair {
    int n;
    double alpha;
  };
  double worst = 0.0;
  for (const Pair& pr : {Pair{1, 2.0}, Pair{1, 3.0}, Pair{2, 3.0}, Pair{2, 4.0}}) {
    const ExponentSet exps = make_critical_exponents(pr.n, pr.alpha);
    const ZonalKernelMatrix K = make_kernel_matrix(pr.n, pr.alpha, 256);
    for (double a : {0.5, 1.0, 2.0})
      for (double eta : {0.0, 0.3, 0.6}) {
        const ZonalFn F = extremal_sphere({a, eta}, exps, 256);
        const QuotientResult q = hls_quotient(K, F);
        worst = std::max(worst, std::fabs(q.rel_margin));
      }
  }
  detail = "worst |Q - N|/N over the (a, eta, n, alpha) table " + fmt(worst);
  return worst <= 1e-4;
}

// ---- 4: direction of the inequality on random inputs ----
bool crit_direction(std::string& detail) {
  struct Pair {
    int n;
    double alpha;
  };
  double worst = 1.0;
  for (const Pair& pr : {Pair{1, 2.0}, Pair{2, 3.0}}) {
    const ZonalKernelMatrix K = make_kernel_matrix(pr.n, pr.alpha, 256);
    for (std::uint64_t s = 0; s < 100; ++s) {
      ZonalFn F = K.grid;
      F.values = random_positive_values(F.size(), 1000 + s);
      worst = std::min(worst, hls_quotient(K, F).rel_margin);
      ZonalFn G = K.grid;
      G.values = random_positive_values(G.size(), 5000 + s);
      const CheckResult b = bilinear_form_check(K, F, G);
      if (!b.holds) {
        detail = "bilinear violation at seed " + std::to_string(s);
        return false;
      }
    }
  }
  detail = "smallest quotient margin " + fmt(worst);
  return worst >= -1e-6;
}

// ---- 5: transform identities ----
bool crit_transforms(std::string& detail) {
  struct Pair {
    int n;
    double alpha;
  };
  for (const Pair& pr : {Pair{1, 2.0}, Pair{2, 3.0}}) {
    const ExponentSet exps = make_critical_exponents(pr.n, pr.alpha);
    for (double d : {0.5, 1.0}) {
      // Norm transport: both sides of the lift compute the same p- and
      // q-norms on the extremal family.
      const ExtremalParamsRn prn{1.0, d};
      const RadialFn f = extremal_rn(prn, exps, 20.0, 2049);
      const ZonalFn F = extremal_sphere(lift_params(prn, exps), exps, 256);
      if (!close_rel(lp_quasi_norm(F, exps.p), lp_quasi_norm(f, exps.p), 1e-5)) {
        detail = "p-norm transport failed (n=" + std::to_string(pr.n) + ")";
        return false;
      }
      const ZonalFn TF = sphere_operator(F, exps);
      const RadialOpResult tf = radial_operator(f, exps);
      if (!close_rel(lp_quasi_norm(TF, exps.q), lp_quasi_norm(tf.fn, exps.q),
                     1e-5)) {
        detail = "q-norm transport failed (n=" + std::to_string(pr.n) + ")";
        return false;
      }
      // Dilation invariance of both quasi-norms.
      for (double lam : {0.5, 2.0}) {
        const DilationResult dil = dilate(f, lam, exps);
        if (!close_rel(lp_quasi_norm(dil.fn, exps.p), lp_quasi_norm(f, exps.p),
                       1e-5)) {
          detail = "dilation p-norm drift at lambda " + fmt(lam);
          return false;
        }
        const RadialOpResult tl = radial_operator(dil.fn, exps);
        if (!close_rel(lp_quasi_norm(tl.fn, exps.q),
                       lp_quasi_norm(tf.fn, exps.q), 1e-5)) {
          detail = "dilation q-norm drift at lambda " + fmt(lam);
          return false;
        }
      }
    }
    // Kelvin self-inversion of the d = 1 solution profile at lambda = 1.
    const RadialFn grid = make_log_grid(pr.n, 16.0, 1025);
    std::vector<double> w(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) {
      const double r = std::exp(grid.log_radii[k]);
      w[k] = std::pow(r * r + 1.0, 0.5 * (pr.alpha - pr.n));
    }
    const RadialFn prof(grid.log_radii, w, pr.n);
    const RadialFn refl = kelvin_transform(prof, KelvinParams({}, 1.0), exps);
    for (std::size_t k = 0; k < prof.size(); ++k)
      if (std::fabs(refl.values[k] - prof.values[k]) >
          1e-12 * prof.values[k]) {
        detail = "self-inversion residual above 1e-12";
        return false;
      }
  }
  detail = "norm transport, dilation invariance, self-inversion all hold";
  return true;
}

// ---- 6: layer-cake identity ----
bool crit_layer_cake(std::string& detail) {
  const SampledFn1D c2({0.0, 1.0}, {2.0});
  double worst = 0.0;
  for (double r : {-0.5, -1.0, -2.0}) {
    const double direct = lp_quasi_norm(c2, r);
    if (!close_rel(direct, 2.0, 1e-12) ||
        !close_rel(lr_norm_via_layer_cake(c2, r), 2.0, 1e-6)) {
      detail = "closed-form case failed";
      return false;
    }
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::vector<double> edges(25), vals = random_positive_values(24, 7000 + seed);
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i] = i * 0.25;
    const SampledFn1D g(std::move(edges), std::move(vals));
    for (double r : {-0.5, -1.0, -2.0}) {
      const double direct = lp_quasi_norm(g, r);
      const double cake = lr_norm_via_layer_cake(g, r);
      worst = std::max(worst, std::fabs(cake - direct) / direct);
    }
  }
  detail = "worst relative gap between the routes " + fmt(worst);
  return worst <= 1e-6;
}

// ---- 7: the discrete inequality suite, 200 seeded cases each ----
bool crit_inequality_suite(std::string& detail) {
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const YoungTriple triple(2.0 / 3.0, -1.0, -2.0);
  const std::vector<double> wx(16, 1.0 / 16.0), wy(24, 1.0 / 24.0);
  // The first pair is evaluated exactly; the second involves quadrature.
  const double exact_slack = 1e-12, quad_slack = 1e-3;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const CheckResult holder = reversed_holder_check(
        random_positive_values(48, 100 + s), random_positive_values(48, 900 + s),
        std::vector<double>(48, 0.05), 0.6);
    if (holder.rel_margin < -exact_slack) {
      detail = "Holder violation at seed " + std::to_string(s);
      return false;
    }
    const CheckResult mink = reversed_minkowski_check(
        random_positive_values(16 * 24, 2000 + s), wx, wy, -1.5);
    if (mink.rel_margin < -exact_slack) {
      detail = "Minkowski violation at seed " + std::to_string(s);
      return false;
    }
    const CheckResult young = converse_young_check(
        random_positive_values(48, 3000 + s), random_positive_values(48, 4000 + s),
        triple);
    if (young.rel_margin < -quad_slack) {
      detail = "Young violation at seed " + std::to_string(s);
      return false;
    }
    const CheckResult riesz = riesz_reversed_check(
        random_positive_values(20, 5000 + s, 0.5), 3.0, exps, 385, 9.0);
    if (riesz.rel_margin < -quad_slack) {
      detail = "Riesz violation at seed " + std::to_string(s);
      return false;
    }
  }
  detail = "zero violations across 4 x 200 seeded cases";
  return true;
}

// ---- 8: the integral system at (1,2), d = 1 ----
bool crit_el_system(std::string& detail) {
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const ELPair pair = make_el_pair(1.0, exps);
  const ELReport rep = el_residual(pair);
  const AsymptoticResult as = asymptotic_coeffs(pair);
  detail = "residuals (" + fmt(rep.residual_u) + ", " + fmt(rep.residual_v) +
           "), asymptotic gap " + fmt(as.rel_gap);
  return rep.residual_u <= 1e-3 && rep.residual_v <= 1e-3 && as.stabilized &&
         as.rel_gap <= 1e-3;
}

// ---- 9: fixed-point minimization from noisy starts ----
bool crit_minimizer(std::string& detail) {
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const ZonalFn grid = make_zonal_grid(1, 256);
  const double nstar = sharp_constant(1, 2.0);
  double worst = 0.0;
  std::size_t most = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    ZonalFn F0 = grid;
    F0.values = random_positive_values(grid.size(), seed);
    const MinimizeResult r = fixed_point_minimize(F0, exps, 0.5, 1e-10, 500);
    if (!r.converged) {
      detail = "no convergence at seed " + std::to_string(seed);
      return false;
    }
    worst = std::max(worst, std::fabs(r.trace.back() - nstar));
    most = std::max(most, r.iterations);
  }
  detail = "worst |Q - N| " + fmt(worst) + ", max iterations " +
           std::to_string(most);
  return worst <= 1e-3;
}

// ---- 10: concentration family ----
bool crit_concentration(std::string& detail) {
  const ExponentSet exps = make_critical_exponents(1, 2.0);
  const std::vector<ConcentrationRow> rows = concentration_demo(exps);
  const double nstar = sharp_constant(1, 2.0);
  double norm_drift = 0.0, q_gap = 0.0;
  for (const ConcentrationRow& r : rows) {
    norm_drift = std::max(
        norm_drift, std::fabs(r.norm_p - rows[0].norm_p) / rows[0].norm_p);
    q_gap = std::max(q_gap, std::fabs(r.quotient - nstar) / nstar);
  }
  bool increasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    increasing = increasing && rows[i].image_at_one > rows[i - 1].image_at_one;
  detail = "norm drift " + fmt(norm_drift) + ", quotient gap " + fmt(q_gap) +
           (increasing ? ", image strictly increasing" : ", image NOT increasing");
  return norm_drift <= 1e-6 && q_gap <= 1e-4 && increasing;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::fprintf(stderr, "usage: %s [--criterion N]\n", argv[0]);
      return 2;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "sharp constants via two routes", 1.0, crit_sharp_constants},
      {2, "kernel-integral row sums", 1.0, crit_row_sums},
      {3, "extremal family equality cases", 30.0, crit_equality_cases},
      {4, "inequality direction on random inputs", 60.0, crit_direction},
      {5, "transform identities", 0.0, crit_transforms},
      {6, "layer-cake identity", 0.0, crit_layer_cake},
      {7, "discrete inequality suite", 0.0, crit_inequality_suite},
      {8, "integral system residuals", 0.0, crit_el_system},
      {9, "fixed-point minimizer", 120.0, crit_minimizer},
      {10, "concentration family", 0.0, crit_concentration},
  };

  int failures = 0;
  bool matched = false;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    matched = true;
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (ok && c.time_limit > 0.0 && secs > c.time_limit) {
      ok = false;
      detail += " [over the " + fmt(c.time_limit) + " s budget]";
    }
    std::printf("[%s] criterion %2d: %s — %s (%.2f s)\n", ok ? "PASS" : "FAIL",
                c.id, c.label, detail.c_str(), secs);
    if (!ok) ++failures;
  }
  if (!matched) {
    std::fprintf(stderr, "no criterion numbered %d\n", only);
    return 2;
  }
  return failures;
}
