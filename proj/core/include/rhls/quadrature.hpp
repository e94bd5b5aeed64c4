#pragma once

#include <cstddef>
#include <vector>

namespace rhls {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Gauss-Legendre on [-1, 1].
QuadratureRule gauss_legendre(std::size_t m);

// Gauss-Jacobi on [-1, 1] for the weight (1-x)^a (1+x)^b, a, b > -1.
// Nodes/weights by Golub-Welsch on the symmetric recurrence matrix.
QuadratureRule gauss_jacobi(std::size_t m, double a, double b);

// Affine image of a rule onto [lo, hi].
QuadratureRule map_to_interval(const QuadratureRule& r, double lo, double hi);

}  // namespace rhls
