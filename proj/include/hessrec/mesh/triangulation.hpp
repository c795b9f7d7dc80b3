#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace hessrec {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

double distance(Point2 a, Point2 b);

/// Euclidean distance from p to the closed segment [a, b].
double segment_distance(Point2 p, Point2 a, Point2 b);

/// Twice the signed area of (a, b, c); positive when counter-clockwise.
double signed_area2(Point2 a, Point2 b, Point2 c);

enum class Pattern { regular, chevron, crisscross, unionjack, equilateral, imported };

std::string_view to_string(Pattern p);
std::optional<Pattern> parse_pattern(std::string_view name);

using Triangle = std::array<int, 3>;

/// Undirected mesh edge, a < b.
struct Edge {
  int a = 0;
  int b = 0;
};

/// Conforming 2D triangulation with counter-clockwise triangles.
///
/// Topology (edges, node-to-triangle incidence, boundary edges) is derived on
/// construction; the object is immutable afterwards.
class Triangulation {
public:
  /// Throws InvalidInput on out-of-range indices, degenerate or clockwise
  /// triangles, and boundary flags on nodes off the boundary.
  Triangulation(std::vector<Point2> nodes, std::vector<Triangle> triangles,
                std::vector<bool> boundary_flags, Pattern pattern);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t triangle_count() const { return triangles_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<Point2>& nodes() const { return nodes_; }
  Point2 node(int i) const { return nodes_[static_cast<std::size_t>(i)]; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const Triangle& triangle(int t) const { return triangles_[static_cast<std::size_t>(t)]; }
  const std::vector<bool>& boundary_flags() const { return boundary_; }
  bool is_boundary_node(int i) const { return boundary_[static_cast<std::size_t>(i)]; }
  Pattern pattern() const { return pattern_; }

  /// Largest element diameter.
  double mesh_size() const { return h_; }

  const std::vector<Edge>& edges() const { return edges_; }
  /// Local edge i of triangle t joins vertices i and (i+1)%3.
  const std::array<int, 3>& triangle_edges(int t) const {
    return triangle_edges_[static_cast<std::size_t>(t)];
  }
  bool is_boundary_edge(int e) const { return boundary_edge_flags_[static_cast<std::size_t>(e)]; }
  const std::vector<int>& boundary_edges() const { return boundary_edges_; }

  /// Triangles containing vertex v, in ascending order.
  std::span<const int> triangles_of_node(int v) const;

  double area(int t) const;
  double total_area() const;

  /// Distance from p to the polygonal domain boundary (union of boundary edges).
  double distance_to_boundary(Point2 p) const;

  /// First triangle containing p (closed, with a relative tolerance), or -1.
  int find_triangle(Point2 p) const;

private:
  void build_topology();

  std::vector<Point2> nodes_;
  std::vector<Triangle> triangles_;
  std::vector<bool> boundary_;
  Pattern pattern_;
  double h_ = 0.0;

  std::vector<Edge> edges_;
  std::vector<std::array<int, 3>> triangle_edges_;
  std::vector<bool> boundary_edge_flags_;
  std::vector<int> boundary_edges_;
  std::vector<int> node_tri_offsets_;
  std::vector<int> node_tri_;
};

} // namespace hessrec
