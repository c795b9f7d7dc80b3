#pragma once

#include "hessrec/mesh/triangulation.hpp"

#include <Eigen/Dense>

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace hessrec {

/// Built-in exact solution with its derivatives.
struct ExactSolution {
  std::string id;
  std::function<double(const Point2&)> value;
  std::function<Eigen::Vector2d(const Point2&)> gradient;
  /// (xx, xy, yx, yy)
  std::function<Eigen::Vector4d(const Point2&)> hessian;
  std::function<double(const Point2&)> laplacian;
};

/// Ids: "sinsin" (sin(pi x) sin(pi y)), "quadratic" (x^2 + 3xy), "cubic" (x^3),
/// "quartic" (x^4). Throws InvalidInput for an unknown id.
const ExactSolution& exact_solution(std::string_view id);

std::vector<std::string> catalog_ids();

} // namespace hessrec
