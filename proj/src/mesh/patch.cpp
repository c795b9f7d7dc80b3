#include "hessrec/mesh/patch.hpp"

#include "hessrec/error.hpp"
#include "hessrec/recovery/polynomial.hpp"

#include <algorithm>
#include <string>

namespace hessrec {

namespace {

std::vector<int> element_nodes(const DofMap& dofs, const std::vector<int>& elements, int center) {
  std::vector<int> nodes;
  for (int t : elements)
    for (int d : dofs.element_dofs(t))
      if (d != center)
        nodes.push_back(d);
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  nodes.insert(nodes.begin(), center);
  return nodes;
}

} // namespace

Patch build_patch(const DofMap& dofs, int z, int degree) {
  const Triangulation& mesh = dofs.mesh();
  if (z < 0 || z >= static_cast<int>(mesh.node_count()))
    throw InvalidInput("patch center " + std::to_string(z) + " is not a vertex");

  Patch patch;
  patch.center = z;
  const auto star = mesh.triangles_of_node(z);
  patch.member_elements.assign(star.begin(), star.end());
  patch.layers_used = 1;

  const int needed = monomial_count(degree);
  std::vector<Point2> samples;
  for (;;) {
    patch.member_nodes = element_nodes(dofs, patch.member_elements, z);
    if (static_cast<int>(patch.member_nodes.size()) >= needed) {
      samples.clear();
      for (int d : patch.member_nodes)
        samples.push_back(dofs.coord(d));
      if (has_full_rank(samples, dofs.coord(z), degree))
        return patch;
    }

    std::vector<int> vertices;
    for (int t : patch.member_elements)
      for (int v : mesh.triangle(t))
        vertices.push_back(v);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> grown;
    for (int v : vertices)
      for (int t : mesh.triangles_of_node(v))
        grown.push_back(t);
    std::sort(grown.begin(), grown.end());
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    if (grown.size() == patch.member_elements.size())
      throw RankDeficient("patch around vertex " + std::to_string(z) + " covers the mesh (" +
                          std::to_string(patch.member_nodes.size()) +
                          " nodes) without a full-rank degree-" + std::to_string(degree) +
                          " fit");
    patch.member_elements = std::move(grown);
    ++patch.layers_used;
  }
}

} // namespace hessrec
