#pragma once

#include "hessrec/fem/lagrange_basis.hpp"
#include "hessrec/fem/quadrature.hpp"
#include "hessrec/mesh/dof_map.hpp"

#include <Eigen/Dense>

#include <functional>
#include <memory>

namespace hessrec {

/// Continuous order-k Lagrange space on a triangulation.
class FESpace {
public:
  FESpace(std::shared_ptr<const Triangulation> mesh, int order);

  static std::shared_ptr<const FESpace> create(Triangulation mesh, int order);

  const Triangulation& mesh() const { return *mesh_; }
  std::shared_ptr<const Triangulation> mesh_ptr() const { return mesh_; }
  const DofMap& dofs() const { return dofs_; }
  const LagrangeBasis& basis() const { return basis_; }
  const TriangleQuadrature& quadrature() const { return quadrature_for_order(dofs_.order()); }
  int order() const { return dofs_.order(); }
  std::size_t dof_count() const { return dofs_.dof_count(); }

  /// Physical point of reference coordinates (xi, eta) in triangle t.
  Point2 map_point(int t, double xi, double eta) const;

  /// Inverse-transposed Jacobian of triangle t: physical gradient = J^{-T} * reference gradient.
  Eigen::Matrix2d inverse_jacobian_transpose(int t) const;

private:
  std::shared_ptr<const Triangulation> mesh_;
  DofMap dofs_;
  LagrangeBasis basis_;
};

using ScalarFunction = std::function<double(const Point2&)>;

/// Nodal coefficients of a scalar or vector-valued function in an FESpace.
///
/// values() is dof_count x components; gradients use 2 components (x, y) and
/// Hessians 4 (xx, xy, yx, yy).
class Field {
public:
  Field(std::shared_ptr<const FESpace> space, Eigen::MatrixXd values);
  Field(std::shared_ptr<const FESpace> space, const Eigen::VectorXd& values);

  const FESpace& space() const { return *space_; }
  std::shared_ptr<const FESpace> space_ptr() const { return space_; }
  const Eigen::MatrixXd& values() const { return values_; }
  int components() const { return static_cast<int>(values_.cols()); }
  Eigen::VectorXd component(int c) const { return values_.col(c); }

  /// Field value on triangle t at reference coordinates (xi, eta).
  Eigen::VectorXd evaluate(int t, double xi, double eta) const;

private:
  std::shared_ptr<const FESpace> space_;
  Eigen::MatrixXd values_;
};

/// values[i] = u(dof_coords[i]). Throws InvalidInput on a non-finite value.
Field interpolate(std::shared_ptr<const FESpace> space, const ScalarFunction& u);

} // namespace hessrec
