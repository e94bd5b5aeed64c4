#include "rhls/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace rhls {

namespace {

// Monic-recurrence coefficients for Jacobi weight (1-x)^a (1+x)^b:
// x pi_k = pi_{k+1} + A_k pi_k + B_k pi_{k-1}.  B_0 carries the total mass.
struct JacobiRecurrence {
  std::vector<double> diag;     // A_k
  std::vector<double> offdiag;  // sqrt(B_k), k >= 1
  double mass;                  // integral of the weight
};

JacobiRecurrence jacobi_recurrence(std::size_t m, double a, double b) {
  JacobiRecurrence r;
  r.diag.resize(m);
  r.offdiag.resize(m > 1 ? m - 1 : 0);
  const double apb = a + b;
  r.mass = std::exp((apb + 1.0) * std::log(2.0) + std::lgamma(a + 1.0) +
                    std::lgamma(b + 1.0) - std::lgamma(apb + 2.0));
  for (std::size_t k = 0; k < m; ++k) {
    const double kk = double(k);
    r.diag[k] = (k == 0)
                    ? (b - a) / (apb + 2.0)
                    : (b * b - a * a) /
                          ((2 * kk + apb) * (2 * kk + apb + 2.0));
  }
  for (std::size_t k = 1; k < m; ++k) {
    const double kk = double(k);
    double Bk;
    if (k == 1) {
      // The generic formula is 0/0 when a + b = -1; this form never is.
      Bk = 4.0 * (1.0 + a) * (1.0 + b) / ((apb + 2.0) * (apb + 2.0) * (apb + 3.0));
    } else {
      const double s = 2 * kk + apb;
      Bk = 4.0 * kk * (kk + a) * (kk + b) * (kk + apb) /
           (s * s * (s + 1.0) * (s - 1.0));
    }
    r.offdiag[k - 1] = std::sqrt(Bk);
  }
  return r;
}

}  // namespace

QuadratureRule gauss_jacobi(std::size_t m, double a, double b) {
  if (m == 0) throw std::invalid_argument("gauss_jacobi: m must be positive");
  if (!(a > -1.0) || !(b > -1.0))
    throw std::invalid_argument("gauss_jacobi: need a, b > -1");

  const JacobiRecurrence rec = jacobi_recurrence(m, a, b);
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(Eigen::Index(m), Eigen::Index(m));
  for (std::size_t k = 0; k < m; ++k) J(k, k) = rec.diag[k];
  for (std::size_t k = 0; k + 1 < m; ++k) {
    J(k, k + 1) = rec.offdiag[k];
    J(k + 1, k) = rec.offdiag[k];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("gauss_jacobi: eigen decomposition failed");

  QuadratureRule out;
  out.nodes.resize(m);
  out.weights.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.nodes[k] = es.eigenvalues()(Eigen::Index(k));
    const double v0 = es.eigenvectors()(0, Eigen::Index(k));
    out.weights[k] = rec.mass * v0 * v0;
  }
  return out;
}

QuadratureRule gauss_legendre(std::size_t m) { return gauss_jacobi(m, 0.0, 0.0); }

QuadratureRule map_to_interval(const QuadratureRule& r, double lo, double hi) {
  QuadratureRule out = r;
  const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
  for (auto& x : out.nodes) x = mid + half * x;
  for (auto& w : out.weights) w *= half;
  return out;
}

}  // namespace rhls
