#pragma once

#include "hessrec/mesh/dof_map.hpp"

#include <vector>

namespace hessrec {

/// Elements around a vertex whose DOF nodes serve as least-squares sampling points.
struct Patch {
  int center = -1;
  /// Center first, then the remaining DOF nodes of member_elements ascending.
  std::vector<int> member_nodes;
  /// Ascending.
  std::vector<int> member_elements;
  /// 1 for the element star of the center.
  int layers_used = 0;
};

/// Patch for a degree-`degree` fit centered at vertex z.
///
/// Starts from the element star of z and adds whole layers (every triangle
/// sharing a vertex with the current patch) until there are at least
/// dim P_degree sampling points and the scaled design matrix has full rank.
/// Throws RankDeficient when the mesh is exhausted first.
Patch build_patch(const DofMap& dofs, int z, int degree);

/// PPR patch: fit degree k+1 for order-k elements.
inline Patch build_patch(const DofMap& dofs, int z) { return build_patch(dofs, z, dofs.order() + 1); }

} // namespace hessrec
