#pragma once

#include "hessrec/fem/fe_space.hpp"
#include "hessrec/mesh/interior_region.hpp"

#include <Eigen/Dense>

#include <functional>
#include <span>

namespace hessrec {

/// Exact vector-valued function with as many components as the field it is compared to.
using VectorFunction = std::function<Eigen::VectorXd(const Point2&)>;

/// || field - exact ||_{L2} over the interior elements of the region; the
/// pointwise norm is Euclidean (Frobenius for Hessians). Throws InvalidInput
/// for an empty region.
double l2_error_region(const Field& field, const VectorFunction& exact,
                       const InteriorRegion& region);

/// || a - b ||_{L2} over the interior elements; a and b share a space.
double l2_error_region(const Field& a, const Field& b, const InteriorRegion& region);

/// max over the given DOF nodes and components of |field - exact|.
/// Throws InvalidInput for an empty node set.
double max_error_nodes(const Field& field, const VectorFunction& exact, std::span<const int> nodes);

} // namespace hessrec
