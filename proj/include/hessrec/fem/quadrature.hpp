#pragma once

#include <array>
#include <vector>

namespace hessrec {

/// Quadrature on the reference triangle (0,0), (1,0), (0,1).
/// Weights sum to 1; multiply by the element area.
struct TriangleQuadrature {
  int degree = 0;
  std::vector<std::array<double, 2>> points;
  std::vector<double> weights;
};

/// Symmetric 7-point rule, exact for degree 5.
const TriangleQuadrature& seven_point_rule();

/// Symmetric 12-point rule, exact for degree 6.
const TriangleQuadrature& twelve_point_rule();

/// Rule used for order-k elements: 7-point for k = 1, 12-point otherwise.
const TriangleQuadrature& quadrature_for_order(int k);

} // namespace hessrec
