#pragma once

#include "hessrec/fem/fe_space.hpp"

#include <Eigen/Sparse>

#include <functional>

namespace hessrec {

using SparseMatrix = Eigen::SparseMatrix<double, Eigen::RowMajor>;

/// Coefficients of B(u, v) = int (D grad u + b u) . grad v + c u v, rhs (f, v).
///
/// Empty b, c or f are treated as zero. D is required and must be symmetric
/// positive semidefinite wherever it is evaluated.
struct Coefficients {
  std::function<Eigen::Matrix2d(const Point2&)> diffusion;
  std::function<Eigen::Vector2d(const Point2&)> convection;
  std::function<double(const Point2&)> reaction;
  std::function<double(const Point2&)> source;

  /// D = I, b = 0, c = 0, given f.
  static Coefficients laplace(std::function<double(const Point2&)> f = {});
};

struct LinearSystem {
  SparseMatrix matrix;
  Eigen::VectorXd rhs;
};

/// Element-by-element Galerkin assembly with the space's quadrature rule.
/// Throws InvalidInput if D is non-symmetric or indefinite at a quadrature point.
LinearSystem assemble(const FESpace& space, const Coefficients& coeffs);

} // namespace hessrec
