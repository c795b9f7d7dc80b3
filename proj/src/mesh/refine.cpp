#include "hessrec/mesh/refine.hpp"

namespace hessrec {

Triangulation refine_uniform(const Triangulation& mesh) {
  const int n = static_cast<int>(mesh.node_count());
  std::vector<Point2> nodes = mesh.nodes();
  std::vector<bool> boundary = mesh.boundary_flags();
  nodes.reserve(mesh.node_count() + mesh.edge_count());
  for (std::size_t e = 0; e < mesh.edge_count(); ++e) {
    const Edge& edge = mesh.edges()[e];
    const Point2 a = mesh.node(edge.a), b = mesh.node(edge.b);
    nodes.push_back({0.5 * (a.x + b.x), 0.5 * (a.y + b.y)});
    boundary.push_back(mesh.is_boundary_edge(static_cast<int>(e)));
  }

  std::vector<Triangle> tris;
  tris.reserve(4 * mesh.triangle_count());
  for (std::size_t t = 0; t < mesh.triangle_count(); ++t) {
    const Triangle& v = mesh.triangles()[t];
    const auto& e = mesh.triangle_edges(static_cast<int>(t));
    // m0 on (v0,v1), m1 on (v1,v2), m2 on (v2,v0)
    const int m0 = n + e[0], m1 = n + e[1], m2 = n + e[2];
    tris.push_back({v[0], m0, m2});
    tris.push_back({m0, v[1], m1});
    tris.push_back({m2, m1, v[2]});
    tris.push_back({m0, m1, m2});
  }
  const Pattern tag = mesh.pattern() == Pattern::regular ? Pattern::regular : Pattern::imported;
  return Triangulation(std::move(nodes), std::move(tris), std::move(boundary), tag);
}

} // namespace hessrec
