#pragma once

#include "hessrec/mesh/triangulation.hpp"

namespace hessrec {

/// Red refinement: every triangle is split into four congruent children by
/// joining its edge midpoints. Midpoint of edge e gets index node_count() + e.
/// Regular-pattern meshes keep their tag (the result equals the regular
/// pattern at twice the resolution); other meshes are tagged imported.
Triangulation refine_uniform(const Triangulation& mesh);

} // namespace hessrec
