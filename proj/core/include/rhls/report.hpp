#pragma once

#include <string>
#include <utility>
#include <vector>

namespace rhls {

// Outcome of one checked identity or inequality.  `passed` is exactly
// `error <= tolerance` in the declared metric -- no hidden slack.
struct VerificationReport {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  double computed = 0.0;   // measured quantity (LHS for inequalities)
  double reference = 0.0;  // target value (RHS for inequalities)
  std::string provenance;  // where the reference comes from
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  std::string metric = "rel";  // "rel" | "abs" | "ineq"
  bool passed = false;

  static VerificationReport equality(std::string name, double computed,
                                     double reference, double tol,
                                     std::string metric = "rel");
  // Checks computed >= reference within a relative slack.
  static VerificationReport inequality(std::string name, double lhs, double rhs,
                                       double tol);
  void add_input(const std::string& key, double v);
  void add_input(const std::string& key, const std::string& v);
  std::string to_json() const;
};

std::string reports_to_json(const std::vector<VerificationReport>& reports,
                            const std::string& command);

}  // namespace rhls
