#pragma once

#include <string>

namespace rhls {

// Exponent bookkeeping for the reversed HLS regime: alpha > n, so the
// kernel power alpha - n is positive, lambda = n - alpha is negative, and
// the Lebesgue exponents p, t sit in (0,1) while q is negative.  All
// relations are rigid consequences of
//     1/p + 1/t + lambda/n = 2      and      1/q = 1/p - alpha/n.
struct ExponentSet {
  int n = 0;
  double alpha = 0.0;
  double lambda = 0.0;  // n - alpha < 0
  double p = 0.0;       // in (0,1)
  double t = 0.0;       // in (0,1)
  double q = 0.0;       // negative
  double theta = 0.0;   // 1/(p-1)
  double kappa = 0.0;   // q - 1
  bool critical = false;

  // Max relative defect over the defining relations; 0 for a valid set.
  double relation_defect() const;
  std::string describe() const;
};

// Critical line: p = t = 2n/(n+alpha), q = 2n/(n-alpha),
// theta = kappa = (n+alpha)/(n-alpha).
ExponentSet make_critical_exponents(int n, double alpha);

// General conjugate family: p in (n/alpha, 1) free, q from 1/q = 1/p - alpha/n,
// t from the scaling relation.  p = 2n/(n+alpha) reproduces the critical set.
ExponentSet make_general_exponents(int n, double alpha, double p);

bool is_critical_pair(const ExponentSet& e, double tol = 1e-12);

}  // namespace rhls
