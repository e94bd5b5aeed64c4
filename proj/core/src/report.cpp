#include "rhls/report.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>

namespace rhls {

namespace {
using ordered_json = nlohmann::ordered_json;

double scale_of(double a, double b) {
  return std::max({std::fabs(a), std::fabs(b), 1e-300});
}
}  // namespace

VerificationReport VerificationReport::equality(std::string name, double computed,
                                                double reference, double tol,
                                                std::string metric) {
  VerificationReport r;
  r.name = std::move(name);
  r.computed = computed;
  r.reference = reference;
  r.tolerance = tol;
  r.metric = std::move(metric);
  r.abs_error = std::fabs(computed - reference);
  r.rel_error = r.abs_error / scale_of(computed, reference);
  r.passed = (r.metric == "abs" ? r.abs_error : r.rel_error) <= tol;
  return r;
}

VerificationReport VerificationReport::inequality(std::string name, double lhs,
                                                  double rhs, double tol) {
  VerificationReport r;
  r.name = std::move(name);
  r.computed = lhs;
  r.reference = rhs;
  r.tolerance = tol;
  r.metric = "ineq";
  const double violation = std::max(0.0, rhs - lhs) / scale_of(lhs, rhs);
  r.abs_error = std::max(0.0, rhs - lhs);
  r.rel_error = violation;
  r.passed = violation <= tol;
  return r;
}

void VerificationReport::add_input(const std::string& key, double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  inputs.emplace_back(key, buf);
}
void VerificationReport::add_input(const std::string& key, const std::string& v) {
  inputs.emplace_back(key, v);
}

namespace {
ordered_json report_json(const VerificationReport& r) {
  ordered_json j;
  j["name"] = r.name;
  ordered_json in = ordered_json::object();
  for (const auto& [k, v] : r.inputs) in[k] = v;
  j["inputs"] = in;
  j["computed"] = r.computed;
  j["reference"] = r.reference;
  if (!r.provenance.empty()) j["provenance"] = r.provenance;
  j["abs_error"] = r.abs_error;
  j["rel_error"] = r.rel_error;
  j["tolerance"] = r.tolerance;
  j["metric"] = r.metric;
  j["passed"] = r.passed;
  return j;
}
}  // namespace

std::string VerificationReport::to_json() const { return report_json(*this).dump(2); }

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const std::string& command) {
  ordered_json j;
  j["schema"] = "rhls/1";
  j["command"] = command;
  std::size_t failures = 0;
  ordered_json arr = ordered_json::array();
  for (const auto& r : reports) {
    arr.push_back(report_json(r));
    if (!r.passed) ++failures;
  }
  j["reports"] = arr;
  j["failures"] = failures;
  return j.dump(2);
}

}  // namespace rhls
