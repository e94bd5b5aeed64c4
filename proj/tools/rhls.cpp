// Command-line front end: every subcommand is a thin wrapper over one
// library operation, with JSON/CSV output suitable for scripting.
// Exit codes: 0 all-pass, 1 failed verification, 2 usage/domain error.

#include "CLI11.hpp"
#include "json.hpp"

#include "rhls/csv.hpp"
#include "rhls/exponents.hpp"
#include "rhls/extremal.hpp"
#include "rhls/geometry.hpp"
#include "rhls/grids.hpp"
#include "rhls/inequalities.hpp"
#include "rhls/norms.hpp"
#include "rhls/operators.hpp"
#include "rhls/report.hpp"
#include "rhls/special.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using ordered_json = nlohmann::ordered_json;

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void print_kv(const std::string& key, double v) {
  std::cout << key << " = " << fmt(v) << "\n";
}

std::vector<double> parse_double_list(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    out.push_back(std::stod(tok));
  }
  if (out.empty()) throw std::invalid_argument("empty numeric list");
  return out;
}

// ---------------------------------------------------------------- constant

int run_constant(int n, double alpha, bool as_json, const std::string& sweep) {
  if (!sweep.empty()) {
    std::cout << "alpha,n_star\n";
    for (double a : parse_double_list(sweep))
      std::cout << fmt(a) << "," << fmt(rhls::sharp_constant(n, a)) << "\n";
    return 0;
  }
  const double n_star = rhls::sharp_constant(n, alpha);
  const double ki = rhls::kernel_integral(n, alpha);
  const double area = rhls::sphere_area(n);
  const double via_rows = std::pow(area, -alpha / n) * ki;
  const double residual = std::fabs(n_star - via_rows) / n_star;

  if (as_json) {
    ordered_json j;
    j["schema"] = "rhls/1";
    j["n"] = n;
    j["alpha"] = alpha;
    j["n_star"] = n_star;
    j["kernel_integral"] = ki;
    j["sphere_area"] = area;
    j["cross_check_residual"] = residual;
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv("n_star", n_star);
    print_kv("kernel_integral", ki);
    print_kv("sphere_area", area);
    print_kv("cross_check_residual", residual);
  }
  return residual <= 1e-10 ? 0 : 1;
}

// ------------------------------------------------------------------ kelvin

int run_kelvin(int n, double alpha, double lambda, double d, bool as_json) {
  const rhls::ExponentSet exps = rhls::make_critical_exponents(n, alpha);
  const rhls::ELPair pair = rhls::make_el_pair(d, exps);
  const rhls::KelvinParams kp(std::vector<double>(n, 0.0), lambda);
  const rhls::RadialFn reflected = rhls::kelvin_transform(pair.u, kp, exps);

  const double c = 2.0 * std::log(lambda);
  const double lo = pair.u.log_radii.front(), hi = pair.u.log_radii.back();
  double residual = 0.0;
  std::size_t compared = 0;
  for (std::size_t k = 0; k < pair.u.size(); ++k) {
    const double refl_coord = c - pair.u.log_radii[k];
    if (refl_coord < lo - 1e-12 || refl_coord > hi + 1e-12) continue;
    residual = std::max(residual,
                        std::fabs(reflected.values[k] - pair.u.values[k]) /
                            pair.u.values[k]);
    ++compared;
  }
  const bool self_inversion = std::fabs(lambda - d) < 1e-15;
  const bool passed = !self_inversion || residual <= 1e-12;
  if (as_json) {
    ordered_json j;
    j["schema"] = "rhls/1";
    j["n"] = n;
    j["alpha"] = alpha;
    j["lambda"] = lambda;
    j["d"] = d;
    j["self_inversion_residual"] = residual;
    j["compared_nodes"] = compared;
    j["passed"] = passed;
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv("self_inversion_residual", residual);
    print_kv("compared_nodes", static_cast<double>(compared));
  }
  return passed ? 0 : 1;
}

// -------------------------------------------------------------------- lift

int run_lift(int n, double alpha, const std::string& input,
             const std::string& output, bool as_json) {
  const rhls::ExponentSet exps = rhls::make_critical_exponents(n, alpha);
  const rhls::RadialFn f = rhls::read_radial_csv(input, n);
  const rhls::ZonalFn F = rhls::lift_function(f, exps);
  rhls::write_zonal_csv(F, output);

  const double flat_norm = rhls::lp_quasi_norm(f, exps.p);
  const double sphere_norm = rhls::lp_quasi_norm(F, exps.p);
  const double transport =
      std::fabs(flat_norm - sphere_norm) / std::max(flat_norm, sphere_norm);
  if (as_json) {
    ordered_json j;
    j["schema"] = "rhls/1";
    j["flat_norm_p"] = flat_norm;
    j["sphere_norm_p"] = sphere_norm;
    j["transport_residual"] = transport;
    j["output"] = output;
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv("flat_norm_p", flat_norm);
    print_kv("sphere_norm_p", sphere_norm);
    print_kv("transport_residual", transport);
  }
  return 0;
}

// -------------------------------------------------------------------- norm

int run_norm(double p, const std::string& input, bool as_json) {
  if (p == 0.0 || p >= 1.0)
    throw std::invalid_argument("norm: the exponent domain is r < 1, r != 0");
  const rhls::WeightedSamples ws = rhls::read_weighted_csv(input);
  const double quasi = rhls::lp_quasi_norm(ws.values, ws.weights, p);
  const double weak = rhls::weak_quasi_norm(ws.values, ws.weights, p);
  if (as_json) {
    ordered_json j;
    j["schema"] = "rhls/1";
    j["p"] = p;
    j["quasi_norm"] = quasi;
    j["weak_quasi_norm"] = weak;
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv("quasi_norm", quasi);
    print_kv("weak_quasi_norm", weak);
  }
  return 0;
}

// --------------------------------------------------------------- layercake

int run_layercake(double r, const std::string& input, bool as_json) {
  if (!(r < 0.0))
    throw std::invalid_argument("layercake: the identity is stated for r < 0");
  const rhls::SampledFn1D g = rhls::read_sampled_csv(input);
  const double direct = rhls::lp_quasi_norm(g, r);
  const double layered = rhls::lr_norm_via_layer_cake(g, r);
  const double residual =
      std::fabs(direct - layered) / std::max(direct, layered);
  if (as_json) {
    ordered_json j;
    j["schema"] = "rhls/1";
    j["r"] = r;
    j["direct_norm"] = direct;
    j["layer_cake_norm"] = layered;
    j["residual"] = residual;
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv("direct_norm", direct);
    print_kv("layer_cake_norm", layered);
    print_kv("residual", residual);
  }
  return residual <= 1e-6 ? 0 : 1;
}

// ------------------------------------------------------------------- apply

int run_apply(int n, double alpha, double p, bool has_p, const std::string& input,
              const std::string& output, double rho, bool has_split,
              const std::string& part) {
  const rhls::ExponentSet exps = has_p
                                     ? rhls::make_general_exponents(n, alpha, p)
                                     : rhls::make_critical_exponents(n, alpha);
  const rhls::RadialFn f = rhls::read_radial_csv(input, n);
  rhls::RadialFn out;
  if (has_split) {
    rhls::SplitPart sp;
    if (part == "near")
      sp = rhls::SplitPart::near;
    else if (part == "far")
      sp = rhls::SplitPart::far;
    else
      throw std::invalid_argument("apply: --part must be 'near' or 'far'");
    out = rhls::split_operator(f, rho, sp, exps);
  } else {
    const rhls::RadialOpResult res = rhls::radial_operator(f, exps);
    if (res.truncation_warning)
      std::cerr << "warning: window truncation estimate "
                << fmt(res.truncation_estimate) << " exceeds 1e-08\n";
    out = res.fn;
  }
  rhls::write_radial_csv(out, output);
  return 0;
}

// ------------------------------------------------------------------ verify

struct Worst {
  double lhs = 0.0, rhs = 0.0;
  double rel_margin = std::numeric_limits<double>::infinity();
  std::size_t seed_index = 0;
  void feed(const rhls::CheckResult& r, std::size_t s) {
    if (r.rel_margin < rel_margin) {
      rel_margin = r.rel_margin;
      lhs = r.lhs;
      rhs = r.rhs;
      seed_index = s;
    }
  }
};

rhls::VerificationReport report_from_worst(const std::string& name,
                                           const Worst& w, double tol,
                                           int n, double alpha,
                                           std::size_t seeds) {
  rhls::VerificationReport rep =
      rhls::VerificationReport::inequality(name, w.lhs, w.rhs, tol);
  rep.add_input("n", static_cast<double>(n));
  rep.add_input("alpha", alpha);
  rep.add_input("seeds", static_cast<double>(seeds));
  rep.add_input("worst_seed", static_cast<double>(w.seed_index));
  return rep;
}

int run_verify(int n, double alpha, std::size_t seeds, const std::string& which) {
  const rhls::ExponentSet exps = rhls::make_critical_exponents(n, alpha);
  std::vector<rhls::VerificationReport> reports;
  const bool all = which == "all";

  if (all || which == "holder") {
    Worst w;
    const std::vector<double> weights(64, 1.0 / 64.0);
    for (std::size_t s = 0; s < seeds; ++s) {
      const auto f = rhls::random_positive_values(64, 1000 + 7 * s);
      const auto g = rhls::random_positive_values(64, 2000 + 11 * s);
      w.feed(rhls::reversed_holder_check(f, g, weights, exps.p), s);
    }
    reports.push_back(report_from_worst("reversed_holder", w, 1e-12, n, alpha, seeds));
  }
  if (all || which == "minkowski") {
    Worst w;
    const std::vector<double> cellw(16, 1.0 / 16.0);
    for (std::size_t s = 0; s < seeds; ++s) {
      const auto F = rhls::random_positive_values(256, 3000 + 13 * s);
      w.feed(rhls::reversed_minkowski_check(F, cellw, cellw, exps.q), s);
    }
    reports.push_back(
        report_from_worst("reversed_minkowski", w, 1e-12, n, alpha, seeds));
  }
  if (all || which == "young") {
    Worst w;
    const std::vector<rhls::YoungTriple> triples = {
        rhls::YoungTriple(2.0 / 3.0, -1.0, -2.0),
        rhls::YoungTriple(0.5, -2.0 / 3.0, -2.0)};
    for (std::size_t s = 0; s < seeds; ++s) {
      const auto f = rhls::random_positive_values(32, 4000 + 17 * s);
      const auto g = rhls::random_positive_values(32, 5000 + 19 * s);
      for (const auto& t : triples)
        w.feed(rhls::converse_young_check(f, g, t), s);
    }
    reports.push_back(report_from_worst("converse_young", w, 1e-3, n, alpha, seeds));
  }
  if (all || which == "riesz") {
    Worst w;
    for (std::size_t s = 0; s < seeds; ++s) {
      const auto cells = rhls::random_positive_values(24, 6000 + 23 * s);
      w.feed(rhls::riesz_reversed_check(cells, 2.0, exps), s);
    }
    reports.push_back(report_from_worst("reversed_riesz", w, 1e-3, n, alpha, seeds));
  }
  if (all || which == "hls" || which == "bilinear") {
    const rhls::ZonalKernelMatrix K = rhls::make_kernel_matrix(n, alpha, 128);
    if (all || which == "hls") {
      double worst_q = std::numeric_limits<double>::infinity(), sharp = 0.0;
      std::size_t worst_seed = 0;
      for (std::size_t s = 0; s < seeds; ++s) {
        rhls::ZonalFn F(K.grid.angles, K.grid.weights,
                        rhls::random_positive_values(K.size(), 7000 + 29 * s), n);
        const rhls::QuotientResult q = rhls::hls_quotient(K, F);
        sharp = q.sharp;
        if (q.quotient < worst_q) {
          worst_q = q.quotient;
          worst_seed = s;
        }
      }
      rhls::VerificationReport rep = rhls::VerificationReport::inequality(
          "hls_quotient", worst_q, sharp, 1e-6);
      rep.add_input("n", static_cast<double>(n));
      rep.add_input("alpha", alpha);
      rep.add_input("seeds", static_cast<double>(seeds));
      rep.add_input("worst_seed", static_cast<double>(worst_seed));
      reports.push_back(rep);
    }
    if (all || which == "bilinear") {
      Worst w;
      for (std::size_t s = 0; s < seeds; ++s) {
        rhls::ZonalFn F(K.grid.angles, K.grid.weights,
                        rhls::random_positive_values(K.size(), 8000 + 31 * s), n);
        rhls::ZonalFn G(K.grid.angles, K.grid.weights,
                        rhls::random_positive_values(K.size(), 9000 + 37 * s), n);
        w.feed(rhls::bilinear_form_check(K, F, G), s);
      }
      reports.push_back(
          report_from_worst("bilinear_form", w, 1e-6, n, alpha, seeds));
    }
  }
  if (all || which == "weaktype") {
    double worst_residual = 0.0, min_constant = std::numeric_limits<double>::infinity();
    std::size_t worst_seed = 0;
    rhls::ExtremalParamsRn params;
    const rhls::RadialFn base = rhls::extremal_rn(params, exps, 10.0, 257);
    for (std::size_t s = 0; s < seeds; ++s) {
      const auto noise = rhls::random_positive_values(base.size(), 10000 + 41 * s);
      std::vector<double> vals(base.values);
      for (std::size_t k = 0; k < vals.size(); ++k) vals[k] *= noise[k];
      rhls::RadialFn f(base.log_radii, vals, n);
      const rhls::WeakTypeResult wt = rhls::weak_type_constant(f, exps);
      min_constant = std::min(min_constant, wt.constant);
      if (wt.split_residual > worst_residual) {
        worst_residual = wt.split_residual;
        worst_seed = s;
      }
    }
    const double tol = n == 1 ? 1e-10 : 1e-8;  // angular panels are inexact off n=1
    rhls::VerificationReport rep = rhls::VerificationReport::equality(
        "weaktype_split_consistency", worst_residual, 0.0, tol, "abs");
    rep.add_input("n", static_cast<double>(n));
    rep.add_input("alpha", alpha);
    rep.add_input("seeds", static_cast<double>(seeds));
    rep.add_input("worst_seed", static_cast<double>(worst_seed));
    rep.add_input("min_constant", min_constant);
    reports.push_back(rep);
  }

  if (reports.empty())
    throw std::invalid_argument(
        "verify: --which must be one of "
        "holder|young|minkowski|riesz|hls|bilinear|weaktype|all");

  std::ostringstream cmd;
  cmd << "verify --n " << n << " --alpha " << fmt(alpha) << " --seeds " << seeds
      << " --which " << which;
  std::cout << rhls::reports_to_json(reports, cmd.str()) << "\n";
  for (const auto& r : reports)
    if (!r.passed) return 1;
  return 0;
}

// ---------------------------------------------------------------- minimize

int run_minimize(int n, double alpha, std::uint64_t seed, double damping,
                 double tol, std::size_t maxit, const std::string& trace_path,
                 bool as_json) {
  const rhls::ExponentSet exps = rhls::make_critical_exponents(n, alpha);
  const rhls::ZonalFn grid = rhls::make_zonal_grid(n, 256);
  rhls::ZonalFn F0(grid.angles, grid.weights,
                   rhls::random_positive_values(grid.size(), seed), n);
  const rhls::MinimizeResult res =
      rhls::fixed_point_minimize(F0, exps, damping, tol, maxit);

  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw std::invalid_argument("minimize: cannot open " + trace_path);
    out << "iteration,q\n";
    for (std::size_t i = 0; i < res.trace.size(); ++i)
      out << i << "," << fmt(res.trace[i]) << "\n";
  }

  const double n_star = rhls::sharp_constant(n, alpha);
  const double final_q = res.trace.back();
  const double gap = std::fabs(final_q - n_star);
  if (as_json) {
    ordered_json j;
    j["schema"] = "rhls/1";
    j["n"] = n;
    j["alpha"] = alpha;
    j["seed"] = seed;
    j["damping"] = damping;
    j["final_q"] = final_q;
    j["n_star"] = n_star;
    j["abs_gap"] = gap;
    j["iterations"] = res.iterations;
    j["converged"] = res.converged;
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv("final_q", final_q);
    print_kv("n_star", n_star);
    print_kv("abs_gap", gap);
    print_kv("iterations", static_cast<double>(res.iterations));
    std::cout << "converged = " << (res.converged ? "true" : "false") << "\n";
  }
  return (res.converged && gap <= 1e-3) ? 0 : 1;
}

// --------------------------------------------------- demo-concentration

int run_demo_concentration(int n, double alpha) {
  const rhls::ExponentSet exps = rhls::make_critical_exponents(n, alpha);
  const auto rows = rhls::concentration_demo(exps);
  std::cout << "eps,norm_p,quotient,f_at_e1,op_at_e1\n";
  for (const auto& r : rows)
    std::cout << fmt(r.eps) << "," << fmt(r.norm_p) << "," << fmt(r.quotient)
              << "," << fmt(r.value_at_one) << "," << fmt(r.image_at_one) << "\n";

  const double n_star = rhls::sharp_constant(n, alpha);
  bool ok = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    ok = ok && std::fabs(rows[i].norm_p - rows[0].norm_p) <= 1e-6 * rows[0].norm_p;
    ok = ok && std::fabs(rows[i].quotient - n_star) <= 1e-4 * n_star;
    if (i > 0) ok = ok && rows[i].image_at_one > rows[i - 1].image_at_one;
  }
  return ok ? 0 : 1;
}

// ---------------------------------------------------------------------- el

int run_el(int n, double alpha, double d, bool as_json) {
  const rhls::ExponentSet exps = rhls::make_critical_exponents(n, alpha);
  const rhls::ELConstants consts = rhls::derive_el_constants(d, exps);
  const rhls::ELPair pair = rhls::make_el_pair(d, exps);
  const rhls::ELReport rep = rhls::el_residual(pair);
  const rhls::AsymptoticResult asym = rhls::asymptotic_coeffs(pair);

  const bool passed = rep.residual_u <= 1e-3 && rep.residual_v <= 1e-3 &&
                      rep.within_bounds && asym.rel_gap <= 1e-3;
  if (as_json) {
    ordered_json j;
    j["schema"] = "rhls/1";
    j["n"] = n;
    j["alpha"] = alpha;
    j["d"] = d;
    j["c1"] = consts.c1;
    j["c2"] = consts.c2;
    j["ratio"] = consts.ratio;
    j["residual_u"] = rep.residual_u;
    j["residual_v"] = rep.residual_v;
    j["bound_factor"] = rep.bound_factor;
    j["a_limit"] = asym.a_limit;
    j["a_integral"] = asym.a_integral;
    j["b_limit"] = asym.b_limit;
    j["b_integral"] = asym.b_integral;
    j["asymptotic_gap"] = asym.rel_gap;
    j["passed"] = passed;
    std::cout << j.dump(2) << "\n";
  } else {
    print_kv("c1", consts.c1);
    print_kv("c2", consts.c2);
    print_kv("residual_u", rep.residual_u);
    print_kv("residual_v", rep.residual_v);
    print_kv("bound_factor", rep.bound_factor);
    print_kv("asymptotic_gap", asym.rel_gap);
  }
  return passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"numerical laboratory for a reversed fractional-integral inequality"};
  app.require_subcommand(1);

  int n = 1;
  double alpha = 2.0, p = 0.0, lambda = 1.0, d = 1.0, rho = 1.0;
  double norm_p = -1.0, lc_r = -1.0, damping = 0.5, tol = 1e-10;
  std::uint64_t seed = 1;
  std::size_t seeds = 20, maxit = 500;
  std::string input, output, part, which = "all", sweep, trace_path;
  bool as_json = false;

  auto add_pair = [&](CLI::App* cmd) {
    cmd->add_option("--n", n, "ambient dimension (>= 1)")->required();
    cmd->add_option("--alpha", alpha, "kernel exponent (> n)")->required();
  };

  CLI::App* c_const = app.add_subcommand("constant", "sharp constant and kernel integral");
  add_pair(c_const);
  c_const->add_flag("--json", as_json, "JSON output");
  c_const->add_option("--sweep-alpha", sweep, "comma list of alpha values -> CSV");

  CLI::App* c_kelvin = app.add_subcommand("kelvin", "inversion self-test of the extremal");
  add_pair(c_kelvin);
  c_kelvin->add_option("--lambda", lambda, "inversion radius")->required();
  c_kelvin->add_option("--d", d, "extremal width parameter");
  c_kelvin->add_flag("--json", as_json, "JSON output");

  CLI::App* c_lift = app.add_subcommand("lift", "lift a radial CSV to a sphere CSV");
  add_pair(c_lift);
  c_lift->add_option("--input", input, "radial CSV")->required();
  c_lift->add_option("--output", output, "zonal CSV destination")->required();
  c_lift->add_flag("--json", as_json, "JSON output");

  CLI::App* c_norm = app.add_subcommand("norm", "quasi-norm of weighted samples");
  c_norm->add_option("--p", norm_p, "exponent (< 1, nonzero)")->required();
  c_norm->add_option("--input", input, "three-column CSV")->required();
  c_norm->add_flag("--json", as_json, "JSON output");

  CLI::App* c_lc = app.add_subcommand("layercake", "norm via distribution function");
  c_lc->add_option("--r", lc_r, "negative exponent")->required();
  c_lc->add_option("--input", input, "sampled-function CSV")->required();
  c_lc->add_flag("--json", as_json, "JSON output");

  CLI::App* c_apply = app.add_subcommand("apply", "apply the integral operator");
  add_pair(c_apply);
  c_apply->add_option("--p", p, "non-critical norm exponent");
  c_apply->add_option("--input", input, "radial CSV")->required();
  c_apply->add_option("--output", output, "radial CSV destination")->required();
  CLI::Option* split_opt = c_apply->add_option("--split", rho, "split radius rho");
  c_apply->add_option("--part", part, "near|far (with --split)");

  CLI::App* c_verify = app.add_subcommand("verify", "seeded inequality suite");
  add_pair(c_verify);
  c_verify->add_option("--seeds", seeds, "number of seeded cases");
  c_verify->add_option("--which", which,
                       "holder|young|minkowski|riesz|hls|bilinear|weaktype|all");

  CLI::App* c_min = app.add_subcommand("minimize", "fixed-point quotient minimization");
  add_pair(c_min);
  c_min->add_option("--seed", seed, "start perturbation seed");
  c_min->add_option("--damping", damping, "blend weight in (0,1]");
  c_min->add_option("--tol", tol, "quotient convergence tolerance");
  c_min->add_option("--maxit", maxit, "iteration cap");
  c_min->add_option("--trace", trace_path, "write (iteration, Q) CSV here");
  c_min->add_flag("--json", as_json, "JSON output");

  CLI::App* c_demo = app.add_subcommand("demo-concentration",
                                        "norm-preserving concentration table");
  add_pair(c_demo);

  CLI::App* c_el = app.add_subcommand("el", "integral-system constants and residuals");
  add_pair(c_el);
  c_el->add_option("--d", d, "profile width parameter");
  c_el->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (c_const->parsed()) return run_constant(n, alpha, as_json, sweep);
    if (c_kelvin->parsed()) return run_kelvin(n, alpha, lambda, d, as_json);
    if (c_lift->parsed()) return run_lift(n, alpha, input, output, as_json);
    if (c_norm->parsed()) return run_norm(norm_p, input, as_json);
    if (c_lc->parsed()) return run_layercake(lc_r, input, as_json);
    if (c_apply->parsed())
      return run_apply(n, alpha, p, c_apply->count("--p") > 0, input, output,
                       rho, split_opt->count() > 0, part);
    if (c_verify->parsed()) return run_verify(n, alpha, seeds, which);
    if (c_min->parsed())
      return run_minimize(n, alpha, seed, damping, tol, maxit, trace_path, as_json);
    if (c_demo->parsed()) return run_demo_concentration(n, alpha);
    if (c_el->parsed()) return run_el(n, alpha, d, as_json);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
