#include "hessrec/fem/lagrange_basis.hpp"

#include "hessrec/error.hpp"
#include "hessrec/recovery/polynomial.hpp"

namespace hessrec {

LagrangeBasis::LagrangeBasis(int order) : order_(order) {
  if (order < 1)
    throw InvalidInput("element order must be >= 1");
  const int k = order;
  const double dk = k;
  nodes_ = {{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}};
  const std::array<std::array<double, 2>, 3> verts{{{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}}};
  for (int l = 0; l < 3; ++l) {
    const auto& a = verts[static_cast<std::size_t>(l)];
    const auto& b = verts[static_cast<std::size_t>((l + 1) % 3)];
    for (int j = 1; j < k; ++j) {
      const double t = j / dk;
      nodes_.push_back({a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])});
    }
  }
  for (int j = 1; j < k; ++j)
    for (int i = 1; i + j < k; ++i)
      nodes_.push_back({i / dk, j / dk});

  const auto n = static_cast<Eigen::Index>(nodes_.size());
  Eigen::MatrixXd vandermonde(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    vandermonde.row(i) =
        monomial_values(k, nodes_[static_cast<std::size_t>(i)][0], nodes_[static_cast<std::size_t>(i)][1])
            .transpose();
  coeffs_ = vandermonde.fullPivLu().inverse();
}

Eigen::VectorXd LagrangeBasis::values(double xi, double eta) const {
  return coeffs_.transpose() * monomial_values(order_, xi, eta);
}

Eigen::MatrixX2d LagrangeBasis::gradients(double xi, double eta) const {
  Eigen::MatrixX2d g(static_cast<Eigen::Index>(nodes_.size()), 2);
  g.col(0) = coeffs_.transpose() * monomial_derivatives(order_, xi, eta, 0);
  g.col(1) = coeffs_.transpose() * monomial_derivatives(order_, xi, eta, 1);
  return g;
}

} // namespace hessrec
