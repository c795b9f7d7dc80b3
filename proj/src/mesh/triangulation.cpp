#include "hessrec/mesh/triangulation.hpp"

#include "hessrec/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace hessrec {

double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const Point2 ap = p - a;
  const double len2 = ab.x * ab.x + ab.y * ab.y;
  double t = len2 > 0.0 ? (ap.x * ab.x + ap.y * ab.y) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return distance(p, a + t * ab);
}

double signed_area2(Point2 a, Point2 b, Point2 c) {
  return (b.x - a.x) * (c.y - a.y) - (c.x - a.x) * (b.y - a.y);
}

std::string_view to_string(Pattern p) {
  switch (p) {
  case Pattern::regular: return "regular";
  case Pattern::chevron: return "chevron";
  case Pattern::crisscross: return "crisscross";
  case Pattern::unionjack: return "unionjack";
  case Pattern::equilateral: return "equilateral";
  case Pattern::imported: return "imported";
  }
  return "unknown";
}

std::optional<Pattern> parse_pattern(std::string_view name) {
  for (Pattern p : {Pattern::regular, Pattern::chevron, Pattern::crisscross,
                    Pattern::unionjack, Pattern::equilateral, Pattern::imported}) {
    if (to_string(p) == name)
      return p;
  }
  return std::nullopt;
}

Triangulation::Triangulation(std::vector<Point2> nodes, std::vector<Triangle> triangles,
                             std::vector<bool> boundary_flags, Pattern pattern)
    : nodes_(std::move(nodes)), triangles_(std::move(triangles)),
      boundary_(std::move(boundary_flags)), pattern_(pattern) {
  const int n = static_cast<int>(nodes_.size());
  if (boundary_.size() != nodes_.size())
    throw InvalidInput("boundary flag count does not match node count");
  if (triangles_.empty())
    throw InvalidInput("triangulation has no triangles");
  for (const Point2& p : nodes_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw InvalidInput("non-finite node coordinate");
  }
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Triangle& tri = triangles_[t];
    for (int v : tri) {
      if (v < 0 || v >= n)
        throw InvalidInput("triangle " + std::to_string(t) + ": node index " +
                           std::to_string(v) + " out of range");
    }
    if (tri[0] == tri[1] || tri[1] == tri[2] || tri[2] == tri[0])
      throw InvalidInput("triangle " + std::to_string(t) + ": degenerate element");
    const Point2 a = node(tri[0]), b = node(tri[1]), c = node(tri[2]);
    const double longest = std::max({distance(a, b), distance(b, c), distance(c, a)});
    const double a2 = signed_area2(a, b, c);
    if (std::abs(a2) <= 1e-14 * longest * longest)
      throw InvalidInput("triangle " + std::to_string(t) + ": degenerate element");
    if (a2 < 0.0)
      throw InvalidInput("triangle " + std::to_string(t) + ": negative area (clockwise)");
    h_ = std::max(h_, longest);
  }

  build_topology();

  std::vector<bool> on_boundary(nodes_.size(), false);
  for (int e : boundary_edges_) {
    on_boundary[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].a)] = true;
    on_boundary[static_cast<std::size_t>(edges_[static_cast<std::size_t>(e)].b)] = true;
  }
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (boundary_[i] && !on_boundary[i])
      throw InvalidInput("node " + std::to_string(i) +
                         " is flagged as boundary but lies off the boundary polygon");
  }
}

void Triangulation::build_topology() {
  struct HalfEdge {
    int a, b, tri, local;
  };
  std::vector<HalfEdge> half;
  half.reserve(3 * triangles_.size());
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Triangle& tri = triangles_[t];
    for (int i = 0; i < 3; ++i) {
      const int u = tri[static_cast<std::size_t>(i)];
      const int v = tri[static_cast<std::size_t>((i + 1) % 3)];
      half.push_back({std::min(u, v), std::max(u, v), static_cast<int>(t), i});
    }
  }
  std::sort(half.begin(), half.end(), [](const HalfEdge& l, const HalfEdge& r) {
    return l.a != r.a ? l.a < r.a : (l.b != r.b ? l.b < r.b : l.tri < r.tri);
  });

  triangle_edges_.assign(triangles_.size(), {-1, -1, -1});
  for (std::size_t i = 0; i < half.size();) {
    std::size_t j = i;
    while (j < half.size() && half[j].a == half[i].a && half[j].b == half[i].b)
      ++j;
    if (j - i > 2)
      throw InvalidInput("non-manifold edge (" + std::to_string(half[i].a) + ", " +
                         std::to_string(half[i].b) + ")");
    const int e = static_cast<int>(edges_.size());
    edges_.push_back({half[i].a, half[i].b});
    boundary_edge_flags_.push_back(j - i == 1);
    if (j - i == 1)
      boundary_edges_.push_back(e);
    for (std::size_t k = i; k < j; ++k)
      triangle_edges_[static_cast<std::size_t>(half[k].tri)]
                     [static_cast<std::size_t>(half[k].local)] = e;
    i = j;
  }

  node_tri_offsets_.assign(nodes_.size() + 1, 0);
  for (const Triangle& tri : triangles_)
    for (int v : tri)
      ++node_tri_offsets_[static_cast<std::size_t>(v) + 1];
  for (std::size_t i = 1; i < node_tri_offsets_.size(); ++i)
    node_tri_offsets_[i] += node_tri_offsets_[i - 1];
  node_tri_.assign(static_cast<std::size_t>(node_tri_offsets_.back()), 0);
  std::vector<int> fill(node_tri_offsets_.begin(), node_tri_offsets_.end() - 1);
  for (std::size_t t = 0; t < triangles_.size(); ++t)
    for (int v : triangles_[t])
      node_tri_[static_cast<std::size_t>(fill[static_cast<std::size_t>(v)]++)] =
          static_cast<int>(t);
}

std::span<const int> Triangulation::triangles_of_node(int v) const {
  const auto begin = static_cast<std::size_t>(node_tri_offsets_[static_cast<std::size_t>(v)]);
  const auto end = static_cast<std::size_t>(node_tri_offsets_[static_cast<std::size_t>(v) + 1]);
  return std::span<const int>(node_tri_).subspan(begin, end - begin);
}

double Triangulation::area(int t) const {
  const Triangle& tri = triangle(t);
  return 0.5 * signed_area2(node(tri[0]), node(tri[1]), node(tri[2]));
}

double Triangulation::total_area() const {
  double sum = 0.0;
  for (std::size_t t = 0; t < triangles_.size(); ++t)
    sum += area(static_cast<int>(t));
  return sum;
}

double Triangulation::distance_to_boundary(Point2 p) const {
  double d = std::numeric_limits<double>::infinity();
  for (int e : boundary_edges_) {
    const Edge& edge = edges_[static_cast<std::size_t>(e)];
    d = std::min(d, segment_distance(p, node(edge.a), node(edge.b)));
  }
  return d;
}

int Triangulation::find_triangle(Point2 p) const {
  for (std::size_t t = 0; t < triangles_.size(); ++t) {
    const Triangle& tri = triangles_[t];
    const Point2 a = node(tri[0]), b = node(tri[1]), c = node(tri[2]);
    const double total = signed_area2(a, b, c);
    const double tol = -1e-12 * total;
    if (signed_area2(p, b, c) >= tol && signed_area2(a, p, c) >= tol && signed_area2(a, b, p) >= tol)
      return static_cast<int>(t);
  }
  return -1;
}

} // namespace hessrec
