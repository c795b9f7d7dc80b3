#pragma once

#include "hessrec/mesh/dof_map.hpp"

#include <vector>

namespace hessrec {

/// Split of the DOF nodes by distance to the boundary.
///
/// A node is near the boundary when dist(z, boundary) <= cutoff; the interior
/// elements are those whose DOF nodes are all interior. A cutoff of zero
/// disables the split: every node and element is interior.
///
/// With CutoffTies::interior a node whose distance equals the cutoff up to a
/// relative 1e-9 counts as interior instead.
enum class CutoffTies { near_boundary, interior };

struct InteriorRegion {
  double cutoff = 0.0;
  std::vector<int> interior_nodes;
  std::vector<int> near_boundary_nodes;
  std::vector<int> interior_elements;
  std::vector<bool> is_interior;

  double area(const Triangulation& mesh) const;
};

/// Throws InvalidInput for a negative cutoff.
InteriorRegion interior_region(const DofMap& dofs, double cutoff,
                               CutoffTies ties = CutoffTies::near_boundary);

} // namespace hessrec
