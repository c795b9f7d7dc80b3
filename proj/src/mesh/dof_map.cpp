#include "hessrec/mesh/dof_map.hpp"

#include "hessrec/error.hpp"

namespace hessrec {

DofMap::DofMap(std::shared_ptr<const Triangulation> mesh, int order)
    : mesh_(std::move(mesh)), order_(order) {
  if (!mesh_)
    throw InvalidInput("DofMap needs a mesh");
  if (order_ < 1)
    throw InvalidInput("element order must be >= 1");
  const int k = order_;
  const std::size_t nv = mesh_->node_count();
  const std::size_t ne = mesh_->edge_count();
  const std::size_t nt = mesh_->triangle_count();
  const std::size_t per_edge = static_cast<std::size_t>(k - 1);
  const std::size_t per_tri = static_cast<std::size_t>((k - 1) * (k - 2) / 2);
  per_element_ = static_cast<std::size_t>((k + 1) * (k + 2) / 2);

  const std::size_t total = nv + ne * per_edge + nt * per_tri;
  coords_.reserve(total);
  classes_.reserve(total);
  boundary_.reserve(total);

  for (std::size_t v = 0; v < nv; ++v) {
    coords_.push_back(mesh_->nodes()[v]);
    NodeClassification c;
    c.parents = {static_cast<int>(v), -1, -1};
    classes_.push_back(c);
    boundary_.push_back(mesh_->boundary_flags()[v]);
  }
  for (std::size_t e = 0; e < ne; ++e) {
    const Edge& edge = mesh_->edges()[e];
    const Point2 a = mesh_->node(edge.a), b = mesh_->node(edge.b);
    for (int j = 1; j < k; ++j) {
      const double t = static_cast<double>(j) / k;
      coords_.push_back(a + t * (b - a));
      NodeClassification c;
      c.kind = NodeClassification::Kind::edge_node;
      c.parents = {edge.a, edge.b, -1};
      c.ratio = t;
      classes_.push_back(c);
      boundary_.push_back(mesh_->is_boundary_edge(static_cast<int>(e)));
    }
  }
  for (std::size_t t = 0; t < nt; ++t) {
    const Triangle& tri = mesh_->triangles()[t];
    const Point2 p0 = mesh_->node(tri[0]), p1 = mesh_->node(tri[1]), p2 = mesh_->node(tri[2]);
    for (int j = 1; j < k; ++j) {
      for (int i = 1; i + j < k; ++i) {
        const double l1 = static_cast<double>(i) / k, l2 = static_cast<double>(j) / k;
        const double l0 = 1.0 - l1 - l2;
        coords_.push_back({l0 * p0.x + l1 * p1.x + l2 * p2.x, l0 * p0.y + l1 * p1.y + l2 * p2.y});
        NodeClassification c;
        c.kind = NodeClassification::Kind::interior_node;
        c.parents = tri;
        c.parent_triangle = static_cast<int>(t);
        c.barycentric = {l0, l1, l2};
        classes_.push_back(c);
        boundary_.push_back(false);
      }
    }
  }

  element_dofs_.reserve(nt * per_element_);
  for (std::size_t t = 0; t < nt; ++t) {
    const Triangle& tri = mesh_->triangles()[t];
    for (int v : tri)
      element_dofs_.push_back(v);
    const auto& edges = mesh_->triangle_edges(static_cast<int>(t));
    for (std::size_t l = 0; l < 3; ++l) {
      const int e = edges[l];
      const bool forward = mesh_->edges()[static_cast<std::size_t>(e)].a == tri[l];
      const int base = static_cast<int>(nv + static_cast<std::size_t>(e) * per_edge);
      for (int j = 1; j < k; ++j)
        element_dofs_.push_back(base + (forward ? j - 1 : k - 1 - j));
    }
    const int base = static_cast<int>(nv + ne * per_edge + t * per_tri);
    for (std::size_t i = 0; i < per_tri; ++i)
      element_dofs_.push_back(base + static_cast<int>(i));
  }
}

std::vector<NodeClassification> classify_dofs(const Triangulation& mesh, int k) {
  return DofMap(std::make_shared<const Triangulation>(mesh), k).classification();
}

} // namespace hessrec
