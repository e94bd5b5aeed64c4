#include "rhls/exponents.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rhls {

namespace {

void require_regime(int n, double alpha) {
  if (n < 1) throw std::invalid_argument("ExponentSet: dimension n must be >= 1");
  if (!(alpha > n))
    throw std::invalid_argument("ExponentSet: need alpha > n (reversed regime)");
}

ExponentSet fill(int n, double alpha, double p, bool critical) {
  ExponentSet e;
  e.n = n;
  e.alpha = alpha;
  e.lambda = n - alpha;
  e.p = p;
  e.q = 1.0 / (1.0 / p - alpha / n);
  e.t = 1.0 / (2.0 - 1.0 / p - e.lambda / n);
  e.theta = 1.0 / (p - 1.0);
  e.kappa = e.q - 1.0;
  e.critical = critical;
  return e;
}

}  // namespace

ExponentSet make_critical_exponents(int n, double alpha) {
  require_regime(n, alpha);
  const double p = 2.0 * n / (n + alpha);
  return fill(n, alpha, p, true);
}

ExponentSet make_general_exponents(int n, double alpha, double p) {
  require_regime(n, alpha);
  if (!(p > double(n) / alpha && p < 1.0))
    throw std::invalid_argument("ExponentSet: need p in (n/alpha, 1)");
  ExponentSet e = fill(n, alpha, p, false);
  e.critical = is_critical_pair(e);
  return e;
}

double ExponentSet::relation_defect() const {
  double d = 0.0;
  auto rel = [&d](double got, double want) {
    const double scale = std::max({std::fabs(got), std::fabs(want), 1.0});
    d = std::max(d, std::fabs(got - want) / scale);
  };
  rel(lambda, n - alpha);
  rel(1.0 / p + 1.0 / t + lambda / n, 2.0);
  rel(1.0 / q, 1.0 / p - alpha / n);
  rel(theta, 1.0 / (p - 1.0));
  rel(kappa, q - 1.0);
  if (critical) {
    rel(p, 2.0 * n / (n + alpha));
    rel(t, p);
    rel(theta, (n + alpha) / (n - alpha));
    rel(kappa, theta);
  }
  return d;
}

bool is_critical_pair(const ExponentSet& e, double tol) {
  return std::fabs(e.p - 2.0 * e.n / (e.n + e.alpha)) <= tol * std::max(1.0, e.p);
}

std::string ExponentSet::describe() const {
  std::ostringstream os;
  os.precision(12);
  os << "n=" << n << " alpha=" << alpha << " lambda=" << lambda << " p=" << p
     << " t=" << t << " q=" << q << " theta=" << theta << " kappa=" << kappa
     << (critical ? " [critical]" : "");
  return os.str();
}

}  // namespace rhls
