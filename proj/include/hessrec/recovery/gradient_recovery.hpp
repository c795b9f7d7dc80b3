#pragma once

#include "hessrec/fem/assembly.hpp"
#include "hessrec/fem/fe_space.hpp"
#include "hessrec/mesh/patch.hpp"

#include <vector>

namespace hessrec {

/// A linear gradient recovery operator: recovered d/dx = dx * u, d/dy = dy * u,
/// both dof_count x dof_count.
struct GradientOperator {
  SparseMatrix dx;
  SparseMatrix dy;
};

/// Polynomial preserving recovery on an order-k space.
///
/// At a vertex z the nodal values on build_patch(z) are fitted by a degree
/// k+1 polynomial p_z in the least-squares sense and G u(z) = grad p_z(z).
/// An edge node between z1 and z2 gets beta grad p_z1(z) + (1-beta) grad p_z2(z)
/// with beta = |z - z2| / |z1 - z2|; an interior node blends the fits of the
/// triangle vertices with its barycentric coordinates.
class PprRecovery {
public:
  explicit PprRecovery(const FESpace& space);

  const GradientOperator& gradient() const { return op_; }
  /// Patch used at each vertex.
  const std::vector<Patch>& patches() const { return patches_; }

private:
  GradientOperator op_;
  std::vector<Patch> patches_;
};

/// Area-weighted average of the element gradients around each vertex
/// (order 1 only; throws InvalidInput otherwise).
GradientOperator weighted_average_operator(const FESpace& space);

/// Recovered gradient as a 2-component field (x, y).
Field ppr_gradient(const Field& u);
Field zz_gradient(const Field& u);

/// Applies a gradient operator to a scalar field.
Field apply(const GradientOperator& op, const Field& u);

} // namespace hessrec
