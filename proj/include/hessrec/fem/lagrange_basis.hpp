#pragma once

#include <Eigen/Dense>

#include <array>
#include <vector>

namespace hessrec {

/// Nodal Lagrange basis of P_k on the reference triangle.
///
/// Local node order matches DofMap: vertices, nodes of edges 0->1, 1->2,
/// 2->0, then interior lattice points.
class LagrangeBasis {
public:
  explicit LagrangeBasis(int order);

  int order() const { return order_; }
  std::size_t size() const { return nodes_.size(); }
  const std::vector<std::array<double, 2>>& reference_nodes() const { return nodes_; }

  Eigen::VectorXd values(double xi, double eta) const;
  /// size() x 2 matrix of reference gradients.
  Eigen::MatrixX2d gradients(double xi, double eta) const;

private:
  int order_;
  std::vector<std::array<double, 2>> nodes_;
  Eigen::MatrixXd coeffs_; // column i: monomial coefficients of basis function i
};

} // namespace hessrec
