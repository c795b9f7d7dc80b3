#include "hessrec/fem/norms.hpp"

#include "hessrec/error.hpp"

#include <algorithm>
#include <cmath>

namespace hessrec {

namespace {

template <typename PointError>
double integrate_region(const FESpace& space, const InteriorRegion& region, PointError err2) {
  if (region.interior_elements.empty())
    throw InvalidInput("interior region has no elements");
  const TriangleQuadrature& quad = space.quadrature();
  double sum = 0.0;
  for (int t : region.interior_elements) {
    const double area = space.mesh().area(t);
    double local = 0.0;
    for (std::size_t q = 0; q < quad.points.size(); ++q)
      local += quad.weights[q] * err2(t, quad.points[q][0], quad.points[q][1]);
    sum += area * local;
  }
  return std::sqrt(sum);
}

} // namespace

double l2_error_region(const Field& field, const VectorFunction& exact,
                       const InteriorRegion& region) {
  const FESpace& space = field.space();
  return integrate_region(space, region, [&](int t, double xi, double eta) {
    const Eigen::VectorXd diff = field.evaluate(t, xi, eta) - exact(space.map_point(t, xi, eta));
    return diff.squaredNorm();
  });
}

double l2_error_region(const Field& a, const Field& b, const InteriorRegion& region) {
  if (&a.space() != &b.space() || a.components() != b.components())
    throw InvalidInput("fields live in different spaces");
  return integrate_region(a.space(), region, [&](int t, double xi, double eta) {
    return (a.evaluate(t, xi, eta) - b.evaluate(t, xi, eta)).squaredNorm();
  });
}

double max_error_nodes(const Field& field, const VectorFunction& exact,
                       std::span<const int> nodes) {
  if (nodes.empty())
    throw InvalidInput("empty node set");
  double worst = 0.0;
  for (int i : nodes) {
    const Eigen::VectorXd diff =
        field.values().row(i).transpose() - exact(field.space().dofs().coord(i));
    worst = std::max(worst, diff.cwiseAbs().maxCoeff());
  }
  return worst;
}

} // namespace hessrec
