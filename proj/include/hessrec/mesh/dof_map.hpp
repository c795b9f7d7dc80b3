#pragma once

#include "hessrec/mesh/triangulation.hpp"

#include <array>
#include <memory>
#include <span>
#include <vector>

namespace hessrec {

/// Where a Lagrange node sits relative to the mesh vertices.
struct NodeClassification {
  enum class Kind { vertex, edge_node, interior_node };

  Kind kind = Kind::vertex;
  /// vertex: {self, -1, -1}; edge node: {z1, z2, -1}; interior node: triangle vertices.
  std::array<int, 3> parents{-1, -1, -1};
  /// Edge nodes: |z - z1| / |z2 - z1|.
  double ratio = 0.0;
  /// Interior nodes: owning triangle and barycentric coordinates w.r.t. parents.
  int parent_triangle = -1;
  std::array<double, 3> barycentric{0.0, 0.0, 0.0};
};

/// Global numbering of the order-k Lagrange nodes of a triangulation.
///
/// Vertices come first (same indices as the mesh), then k-1 nodes per edge
/// (ordered from edge.a to edge.b), then (k-1)(k-2)/2 nodes per triangle.
/// Element-local ordering: the three vertices, the nodes of local edges
/// 0 (v0->v1), 1 (v1->v2), 2 (v2->v0), then interior lattice nodes.
class DofMap {
public:
  DofMap(std::shared_ptr<const Triangulation> mesh, int order);

  const Triangulation& mesh() const { return *mesh_; }
  int order() const { return order_; }
  std::size_t dof_count() const { return coords_.size(); }
  std::size_t nodes_per_element() const { return per_element_; }

  const std::vector<Point2>& coords() const { return coords_; }
  Point2 coord(int dof) const { return coords_[static_cast<std::size_t>(dof)]; }
  const std::vector<NodeClassification>& classification() const { return classes_; }
  const NodeClassification& classify(int dof) const {
    return classes_[static_cast<std::size_t>(dof)];
  }
  bool is_vertex(int dof) const { return dof < static_cast<int>(mesh_->node_count()); }
  bool is_boundary(int dof) const { return boundary_[static_cast<std::size_t>(dof)]; }

  std::span<const int> element_dofs(int t) const {
    return std::span<const int>(element_dofs_).subspan(
        static_cast<std::size_t>(t) * per_element_, per_element_);
  }

private:
  std::shared_ptr<const Triangulation> mesh_;
  int order_;
  std::size_t per_element_;
  std::vector<Point2> coords_;
  std::vector<NodeClassification> classes_;
  std::vector<bool> boundary_;
  std::vector<int> element_dofs_;
};

/// Classification of every order-k DOF of the mesh.
std::vector<NodeClassification> classify_dofs(const Triangulation& mesh, int k);

} // namespace hessrec
