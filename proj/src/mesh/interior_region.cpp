#include "hessrec/mesh/interior_region.hpp"

#include "hessrec/error.hpp"

#include <algorithm>

namespace hessrec {

double InteriorRegion::area(const Triangulation& mesh) const {
  double a = 0.0;
  for (int t : interior_elements)
    a += mesh.area(t);
  return a;
}

InteriorRegion interior_region(const DofMap& dofs, double cutoff, CutoffTies ties) {
  if (!(cutoff >= 0.0))
    throw InvalidInput("interior cutoff must be nonnegative");
  const Triangulation& mesh = dofs.mesh();
  InteriorRegion region;
  region.cutoff = cutoff;
  region.is_interior.assign(dofs.dof_count(), true);

  if (cutoff > 0.0) {
    const double threshold = ties == CutoffTies::interior ? cutoff * (1.0 - 1e-9) : cutoff;
    for (std::size_t i = 0; i < dofs.dof_count(); ++i)
      region.is_interior[i] = mesh.distance_to_boundary(dofs.coords()[i]) > threshold;
  }
  for (std::size_t i = 0; i < dofs.dof_count(); ++i)
    (region.is_interior[i] ? region.interior_nodes : region.near_boundary_nodes)
        .push_back(static_cast<int>(i));

  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const auto nodes = dofs.element_dofs(static_cast<int>(t));
    if (std::all_of(nodes.begin(), nodes.end(), [&](int d) {
          return region.is_interior[static_cast<std::size_t>(d)];
        }))
      region.interior_elements.push_back(static_cast<int>(t));
  }
  return region;
}

} // namespace hessrec
