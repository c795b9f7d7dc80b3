#pragma once

#include "hessrec/mesh/patch.hpp"
#include "hessrec/mesh/triangulation.hpp"

#include <Eigen/Dense>

#include <array>
#include <span>
#include <vector>

namespace hessrec {

/// dim P_degree = (degree+1)(degree+2)/2.
int monomial_count(int degree);

/// Exponents (a, b) of x^a y^b in graded-lex order: 1, x, y, x^2, xy, y^2, x^3, ...
std::vector<std::array<int, 2>> monomial_exponents(int degree);

/// Values of all monomials of the given degree at local coordinates (s, t).
Eigen::VectorXd monomial_values(int degree, double s, double t);

/// d/ds (dir = 0) or d/dt (dir = 1) of all monomials at (s, t).
Eigen::VectorXd monomial_derivatives(int degree, double s, double t, int dir);

/// Second derivative d^2/(d dir1 d dir2) of all monomials at (s, t).
Eigen::VectorXd monomial_second_derivatives(int degree, double s, double t, int dir1, int dir2);

/// Relative tolerance on singular values below which a design matrix is rank deficient.
inline constexpr double kRankTolerance = 1e-10;

/// Discrete least-squares fit operator on a set of sampling points.
///
/// Points are mapped to local coordinates ((x - cx)/s, (y - cy)/s) where s is
/// the largest distance from the center to a sampling point. The operator maps
/// sampled values to monomial coefficients and is computed by column-pivoted
/// Householder QR, never through the normal equations.
class LeastSquaresFit {
public:
  /// Throws RankDeficient when there are fewer points than monomials or the
  /// smallest singular value of the scaled design matrix is below
  /// kRankTolerance times the largest.
  LeastSquaresFit(std::span<const Point2> samples, Point2 center, int degree);

  Point2 center() const { return center_; }
  double scale() const { return scale_; }
  int degree() const { return degree_; }

  /// coefficients = coefficient_map() * values
  const Eigen::MatrixXd& coefficient_map() const { return map_; }

  /// Row vector w with d p / d x_dir (at) = w * values.
  Eigen::RowVectorXd gradient_weights(Point2 at, int dir) const;

  /// Row vector w with d^2 p / d x_dir1 d x_dir2 (at) = w * values.
  Eigen::RowVectorXd second_derivative_weights(Point2 at, int dir1, int dir2) const;

private:
  Point2 center_;
  double scale_;
  int degree_;
  Eigen::MatrixXd map_;
};

/// True when the scaled design matrix has full column rank at kRankTolerance.
bool has_full_rank(std::span<const Point2> samples, Point2 center, int degree);

/// Fitted polynomial in local coordinates ((x - center.x)/scale, (y - center.y)/scale).
struct PolyFit {
  Point2 center;
  double scale = 1.0;
  int degree = 0;
  Eigen::VectorXd coeffs;

  double value(Point2 p) const;
  Eigen::Vector2d gradient(Point2 p) const;
  Eigen::Matrix2d hessian(Point2 p) const;
};

/// Least-squares polynomial of the given degree through (samples[i], values[i]).
/// Throws RankDeficient like LeastSquaresFit and InvalidInput on non-finite values.
PolyFit fit_polynomial(std::span<const Point2> samples, std::span<const double> values,
                       Point2 center, int degree);

/// Fit on the sampling points of a patch; `values` holds one entry per DOF.
PolyFit fit_polynomial(const DofMap& dofs, const Patch& patch, std::span<const double> values,
                       int degree);

} // namespace hessrec
