#include "test_support.hpp"

#include "hessrec/error.hpp"
#include "hessrec/mesh/dof_map.hpp"
#include "hessrec/mesh/interior_region.hpp"
#include "hessrec/mesh/patch.hpp"
#include "hessrec/mesh/refine.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <set>

using namespace hessrec;
using namespace hessrec::testing;

namespace {

const Pattern kSquarePatterns[] = {Pattern::regular, Pattern::chevron, Pattern::crisscross,
                                   Pattern::unionjack};

bool on_unit_square_boundary(Point2 p) {
  const double tol = 1e-14;
  return std::abs(p.x) < tol || std::abs(p.y) < tol || std::abs(p.x - 1) < tol ||
         std::abs(p.y - 1) < tol;
}

using Key = std::array<long long, 2>;

Key key(Point2 p) { return {std::llround(p.x * 1e9), std::llround(p.y * 1e9)}; }

std::set<std::array<Key, 3>> triangle_set(const Triangulation& m) {
  std::set<std::array<Key, 3>> out;
  for (const Triangle& t : m.triangles()) {
    std::array<Key, 3> k{key(m.node(t[0])), key(m.node(t[1])), key(m.node(t[2]))};
    std::sort(k.begin(), k.end());
    out.insert(k);
  }
  return out;
}

std::set<Key> node_set(const Triangulation& m) {
  std::set<Key> out;
  for (const Point2& p : m.nodes())
    out.insert(key(p));
  return out;
}

} // namespace

TEST(Generate, RegularCountsMatchFirstTableRow) {
  const Triangulation m = generate_uniform(Pattern::regular, 10);
  EXPECT_EQ(m.node_count(), 121u);
  EXPECT_EQ(m.triangle_count(), 200u);
  EXPECT_EQ(m.pattern(), Pattern::regular);
}

TEST(Generate, CrisscrossAddsCellCenters) {
  const Triangulation m = generate_uniform(Pattern::crisscross, 10);
  EXPECT_EQ(m.node_count(), 221u);
  EXPECT_EQ(m.triangle_count(), 400u);
  // centers come after the grid vertices
  EXPECT_DOUBLE_EQ(m.node(121).x, 0.05);
  EXPECT_DOUBLE_EQ(m.node(121).y, 0.05);
}

TEST(Generate, RegularTwoByTwo) {
  const Triangulation m = generate_uniform(Pattern::regular, 2);
  ASSERT_EQ(m.node_count(), 9u);
  ASSERT_EQ(m.triangle_count(), 8u);
  for (std::size_t t = 0; t < 8; ++t)
    EXPECT_NEAR(m.area(static_cast<int>(t)), 0.125, 1e-15);
}

TEST(Generate, LexicographicNumbering) {
  const int n = 4;
  const Triangulation m = generate_uniform(Pattern::chevron, n);
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i) {
      EXPECT_DOUBLE_EQ(m.node(grid_node(n, i, j)).x, static_cast<double>(i) / n);
      EXPECT_DOUBLE_EQ(m.node(grid_node(n, i, j)).y, static_cast<double>(j) / n);
    }
}

TEST(Generate, AreasSumToDomain) {
  for (Pattern p : kSquarePatterns)
    for (int n : {2, 3, 7, 16})
      EXPECT_NEAR(generate_uniform(p, n).total_area(), 1.0, 1e-12) << to_string(p) << " n=" << n;
  for (int n : {2, 5, 12}) {
    const Triangulation m = generate_uniform(Pattern::equilateral, n);
    EXPECT_NEAR(m.total_area(), equilateral_height(n), 1e-12 * equilateral_height(n));
  }
}

TEST(Generate, BoundaryFlagsLieOnBoundary) {
  for (Pattern p : kSquarePatterns) {
    const Triangulation m = generate_uniform(p, 6);
    for (std::size_t i = 0; i < m.node_count(); ++i)
      EXPECT_EQ(m.is_boundary_node(static_cast<int>(i)), on_unit_square_boundary(m.nodes()[i]))
          << to_string(p) << " node " << i;
  }
  const Triangulation eq = generate_uniform(Pattern::equilateral, 6);
  const double top = equilateral_height(6);
  for (std::size_t i = 0; i < eq.node_count(); ++i) {
    const Point2 q = eq.nodes()[i];
    const bool edge = q.x < 1e-14 || q.x > 1 - 1e-14 || q.y < 1e-14 || q.y > top - 1e-12;
    EXPECT_EQ(eq.is_boundary_node(static_cast<int>(i)), edge);
  }
}

TEST(Generate, DiagonalDirections) {
  const int n = 4;
  const auto has_edge = [](const Triangulation& m, int a, int b) {
    for (const Edge& e : m.edges())
      if (e.a == std::min(a, b) && e.b == std::max(a, b))
        return true;
    return false;
  };
  const Triangulation regular = generate_uniform(Pattern::regular, n);
  const Triangulation chevron = generate_uniform(Pattern::chevron, n);
  const Triangulation union_jack = generate_uniform(Pattern::unionjack, n);
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      const int v00 = grid_node(n, i, j), v11 = grid_node(n, i + 1, j + 1);
      const int v10 = grid_node(n, i + 1, j), v01 = grid_node(n, i, j + 1);
      EXPECT_TRUE(has_edge(regular, v00, v11));
      EXPECT_TRUE(i % 2 == 0 ? has_edge(chevron, v00, v11) : has_edge(chevron, v10, v01));
      EXPECT_TRUE((i + j) % 2 == 0 ? has_edge(union_jack, v00, v11)
                                   : has_edge(union_jack, v10, v01));
    }
}

TEST(Generate, EquilateralRowsAreEquilateral) {
  const int n = 8;
  const Triangulation m = generate_uniform(Pattern::equilateral, n);
  const double h = 1.0 / n;
  int full = 0;
  for (std::size_t t = 0; t < m.triangle_count(); ++t) {
    const Triangle& tri = m.triangle(static_cast<int>(t));
    const double a = distance(m.node(tri[0]), m.node(tri[1]));
    const double b = distance(m.node(tri[1]), m.node(tri[2]));
    const double c = distance(m.node(tri[2]), m.node(tri[0]));
    if (std::abs(a - h) < 1e-12 && std::abs(b - h) < 1e-12 && std::abs(c - h) < 1e-12)
      ++full;
  }
  EXPECT_GT(full, static_cast<int>(m.triangle_count()) * 3 / 4);
  EXPECT_LE(equilateral_height(n), 1.0);
  EXPECT_GT(equilateral_height(n) + std::sqrt(3.0) / 2 * h, 1.0);
}

TEST(Generate, RejectsBadArguments) {
  EXPECT_THROW(generate_uniform(Pattern::regular, 1), InvalidInput);
  EXPECT_THROW(generate_uniform(Pattern::imported, 4), InvalidInput);
  EXPECT_FALSE(parse_pattern("hexagonal").has_value());
  EXPECT_EQ(parse_pattern("unionjack"), Pattern::unionjack);
}

TEST(Triangulation, RejectsInvalidElements) {
  const std::vector<Point2> nodes{{0, 0}, {1, 0}, {0, 1}};
  EXPECT_THROW(Triangulation(nodes, {{0, 2, 1}}, {true, true, true}, Pattern::imported),
               InvalidInput);
  EXPECT_THROW(Triangulation(nodes, {{0, 1, 1}}, {true, true, true}, Pattern::imported),
               InvalidInput);
  EXPECT_THROW(Triangulation(nodes, {{0, 1, 3}}, {true, true, true}, Pattern::imported),
               InvalidInput);
  const std::vector<Point2> bad{{0, 0}, {1, 0}, {0, std::nan("")}};
  EXPECT_THROW(Triangulation(bad, {{0, 1, 2}}, {true, true, true}, Pattern::imported),
               InvalidInput);
}

TEST(Triangulation, MeshSizeIsLongestEdge) {
  EXPECT_NEAR(generate_uniform(Pattern::regular, 10).mesh_size(), std::sqrt(2.0) / 10, 1e-15);
  EXPECT_NEAR(generate_uniform(Pattern::crisscross, 10).mesh_size(), 0.1, 1e-15);
}

TEST(Triangulation, FindTriangle) {
  const Triangulation m = generate_uniform(Pattern::regular, 4);
  EXPECT_GE(m.find_triangle({0.3, 0.7}), 0);
  EXPECT_GE(m.find_triangle({1.0, 1.0}), 0);
  EXPECT_EQ(m.find_triangle({1.2, 0.5}), -1);
}

TEST(Import, SingleTriangle) {
  const Triangulation m = import_mesh("3 2 0 1\n1 0 0 1\n2 1 0 1\n3 0 1 1\n", "1 3 0\n1 1 2 3\n");
  EXPECT_EQ(m.node_count(), 3u);
  EXPECT_EQ(m.triangle_count(), 1u);
  EXPECT_DOUBLE_EQ(m.area(0), 0.5);
  EXPECT_EQ(m.pattern(), Pattern::imported);
}

TEST(Import, DegenerateElementReportsLine) {
  try {
    import_mesh("3 2 0 1\n1 0 0 1\n2 1 0 1\n3 0 1 1\n", "1 3 0\n1 1 2 2\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_NE(std::string(e.what()).find("degenerate element"), std::string::npos);
  }
}

TEST(Import, Errors) {
  const std::string nodes = "3 2 0 1\n1 0 0 1\n2 1 0 1\n3 0 1 1\n";
  EXPECT_THROW(import_mesh(nodes, "1 3 0\n1 1 2 4\n"), ParseError);
  EXPECT_THROW(import_mesh(nodes, "1 3 0\n1 1 3 2\n"), ParseError);
  EXPECT_THROW(import_mesh(nodes, "1 3 0\n1 1 2\n"), ParseError);
  EXPECT_THROW(import_mesh("3 2 0 1\n1 0 0 1\n2 1 zero 1\n3 0 1 1\n", "1 3 0\n1 1 2 3\n"),
               ParseError);
  EXPECT_THROW(import_mesh("3 2 0 1\n1 0 0 1\n2 1 0 1\n", "1 3 0\n1 1 2 3\n"), ParseError);
  try {
    import_mesh("3 2 0 1\n1 0 0 1\n2 1 x 1\n3 0 1 1\n", "1 3 0\n1 1 2 3\n");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
}

TEST(Import, CommentsAndBlankLines) {
  const Triangulation m = import_mesh("# header\n3 2 0 1\n\n1 0 0 1 # origin\n2 1 0 1\n3 0 1 1\n",
                                      "# elements\n1 3 0\n1 1 2 3\n");
  EXPECT_EQ(m.triangle_count(), 1u);
}

TEST(Import, RoundTripRegular) {
  const Triangulation m = generate_uniform(Pattern::regular, 4);
  const Triangulation back = import_mesh(node_text(m), element_text(m));
  ASSERT_EQ(back.node_count(), m.node_count());
  for (std::size_t i = 0; i < m.node_count(); ++i) {
    EXPECT_EQ(back.nodes()[i], m.nodes()[i]);
    EXPECT_EQ(back.boundary_flags()[i], m.boundary_flags()[i]);
  }
  EXPECT_EQ(back.triangles(), m.triangles());
}

TEST(Import, DelaunayDataFile) {
  const Triangulation m = delaunay_mesh();
  EXPECT_EQ(m.node_count(), 139u);
  EXPECT_NEAR(m.total_area(), 1.0, 1e-12);
  for (std::size_t i = 0; i < m.node_count(); ++i)
    EXPECT_EQ(m.is_boundary_node(static_cast<int>(i)), on_unit_square_boundary(m.nodes()[i]));
}

TEST(Refine, CountsFollowNodesPlusEdges) {
  const Triangulation m = generate_uniform(Pattern::regular, 2);
  const Triangulation r = refine_uniform(m);
  EXPECT_EQ(r.node_count(), 25u);
  EXPECT_EQ(r.triangle_count(), 32u);
  const Triangulation d = delaunay_mesh();
  const Triangulation rd = refine_uniform(d);
  EXPECT_EQ(rd.node_count(), d.node_count() + d.edge_count());
  EXPECT_EQ(rd.node_count(), 513u);
  EXPECT_EQ(refine_uniform(rd).node_count(), 1969u);
}

TEST(Refine, MatchesGeneratedFinerRegularMesh) {
  for (int n : {2, 3, 5}) {
    const Triangulation r = refine_uniform(generate_uniform(Pattern::regular, n));
    const Triangulation g = generate_uniform(Pattern::regular, 2 * n);
    EXPECT_EQ(node_set(r), node_set(g));
    EXPECT_EQ(triangle_set(r), triangle_set(g));
    EXPECT_EQ(r.pattern(), Pattern::regular);
  }
}

TEST(Refine, ChildrenHaveQuarterArea) {
  const Triangulation m({{0, 0}, {1, 0}, {0, 1}}, {{0, 1, 2}}, {true, true, true}, Pattern::imported);
  const Triangulation r = refine_uniform(m);
  ASSERT_EQ(r.triangle_count(), 4u);
  for (int t = 0; t < 4; ++t)
    EXPECT_NEAR(r.area(t), 0.125, 1e-15);
}

TEST(Refine, PreservesAreaAndBoundary) {
  const Triangulation d = delaunay_mesh();
  const Triangulation r = refine_uniform(refine_uniform(d));
  EXPECT_NEAR(r.total_area(), d.total_area(), 1e-12);
  for (std::size_t i = 0; i < r.node_count(); ++i)
    EXPECT_EQ(r.is_boundary_node(static_cast<int>(i)), on_unit_square_boundary(r.nodes()[i]));
}

TEST(DofMap, LinearAllVertices) {
  const auto mesh = std::make_shared<const Triangulation>(generate_uniform(Pattern::regular, 2));
  const auto c = classify_dofs(*mesh, 1);
  ASSERT_EQ(c.size(), 9u);
  for (const auto& k : c)
    EXPECT_EQ(k.kind, NodeClassification::Kind::vertex);
}

TEST(DofMap, QuadraticMidpoints) {
  const auto mesh = std::make_shared<const Triangulation>(generate_uniform(Pattern::regular, 2));
  const DofMap dofs(mesh, 2);
  ASSERT_EQ(dofs.dof_count(), 25u);
  int vertices = 0, edges = 0;
  for (std::size_t i = 0; i < dofs.dof_count(); ++i) {
    const auto& c = dofs.classify(static_cast<int>(i));
    if (c.kind == NodeClassification::Kind::vertex) {
      ++vertices;
    } else {
      ASSERT_EQ(c.kind, NodeClassification::Kind::edge_node);
      ++edges;
      EXPECT_EQ(c.ratio, 0.5);
      const Point2 mid = 0.5 * (mesh->node(c.parents[0]) + mesh->node(c.parents[1]));
      EXPECT_EQ(dofs.coord(static_cast<int>(i)), mid);
    }
  }
  EXPECT_EQ(vertices, 9);
  EXPECT_EQ(edges, 16);
}

TEST(DofMap, CubicInteriorNodes) {
  const auto mesh = std::make_shared<const Triangulation>(delaunay_mesh());
  const DofMap dofs(mesh, 3);
  EXPECT_EQ(dofs.dof_count(), mesh->node_count() + 2 * mesh->edge_count() + mesh->triangle_count());
  for (std::size_t i = 0; i < dofs.dof_count(); ++i) {
    const auto& c = dofs.classify(static_cast<int>(i));
    if (c.kind == NodeClassification::Kind::edge_node) {
      const Point2 z = dofs.coord(static_cast<int>(i));
      EXPECT_NEAR(distance(z, mesh->node(c.parents[0])) /
                      distance(mesh->node(c.parents[0]), mesh->node(c.parents[1])),
                  c.ratio, 1e-12);
    } else if (c.kind == NodeClassification::Kind::interior_node) {
      double sum = 0;
      Point2 p{0, 0};
      for (int j = 0; j < 3; ++j) {
        EXPECT_GE(c.barycentric[j], 0.0);
        sum += c.barycentric[j];
        p = p + c.barycentric[j] * mesh->node(c.parents[j]);
      }
      EXPECT_NEAR(sum, 1.0, 1e-14);
      EXPECT_NEAR(distance(p, dofs.coord(static_cast<int>(i))), 0.0, 1e-14);
    }
  }
}

TEST(DofMap, ElementDofsShareEdgeNodes) {
  const auto mesh = std::make_shared<const Triangulation>(delaunay_mesh());
  const DofMap dofs(mesh, 2);
  const LagrangeBasis basis(2);
  const FESpace space(mesh, 2);
  for (std::size_t t = 0; t < mesh->triangle_count(); ++t) {
    const auto local = dofs.element_dofs(static_cast<int>(t));
    ASSERT_EQ(local.size(), 6u);
    for (std::size_t a = 0; a < 6; ++a) {
      const auto& r = basis.reference_nodes()[a];
      const Point2 p = space.map_point(static_cast<int>(t), r[0], r[1]);
      EXPECT_NEAR(distance(p, dofs.coord(local[a])), 0.0, 1e-14);
    }
  }
}

TEST(Patch, RegularInteriorVertexIsStar) {
  const auto space = uniform_space(Pattern::regular, 10);
  const Patch p = build_patch(space->dofs(), grid_node(10, 5, 5));
  EXPECT_EQ(p.member_nodes.size(), 7u);
  EXPECT_EQ(p.member_elements.size(), 6u);
  EXPECT_EQ(p.layers_used, 1);
  EXPECT_EQ(p.member_nodes.front(), grid_node(10, 5, 5));
}

TEST(Patch, CornerNeedsMoreLayers) {
  const auto space = uniform_space(Pattern::regular, 4);
  const Patch p = build_patch(space->dofs(), 0);
  EXPECT_GE(p.layers_used, 2);
  EXPECT_GE(p.member_nodes.size(), 6u);
}

TEST(Patch, QuadraticInteriorVertexHasEnoughPoints) {
  const auto space = uniform_space(Pattern::regular, 6, 2);
  const Patch p = build_patch(space->dofs(), grid_node(6, 3, 3));
  EXPECT_GE(p.member_nodes.size(), 10u);
}

TEST(Patch, MembersAreElementDofs) {
  const auto space = FESpace::create(delaunay_mesh(), 2);
  for (int z : {0, 17, 60, 138}) {
    const Patch p = build_patch(space->dofs(), z);
    std::set<int> from_elements;
    for (int t : p.member_elements)
      for (int d : space->dofs().element_dofs(t))
        from_elements.insert(d);
    EXPECT_EQ(std::set<int>(p.member_nodes.begin(), p.member_nodes.end()), from_elements);
    EXPECT_EQ(p.member_nodes.front(), z);
    EXPECT_TRUE(std::is_sorted(p.member_nodes.begin() + 1, p.member_nodes.end()));
    EXPECT_TRUE(std::is_sorted(p.member_elements.begin(), p.member_elements.end()));
  }
}

TEST(Patch, Deterministic) {
  const auto space = FESpace::create(delaunay_mesh(), 1);
  for (std::size_t z = 0; z < space->mesh().node_count(); ++z) {
    const Patch a = build_patch(space->dofs(), static_cast<int>(z));
    const Patch b = build_patch(space->dofs(), static_cast<int>(z));
    EXPECT_EQ(a.member_nodes, b.member_nodes);
    EXPECT_EQ(a.member_elements, b.member_elements);
  }
}

TEST(Patch, PointSymmetricOnSymmetricPatterns) {
  for (Pattern pattern : {Pattern::regular, Pattern::crisscross, Pattern::unionjack,
                          Pattern::equilateral}) {
    const auto space = uniform_space(pattern, 8);
    const DofMap& dofs = space->dofs();
    const InteriorRegion deep = interior_region(dofs, 0.3);
    for (int z : deep.interior_nodes) {
      if (!dofs.is_vertex(z))
        continue;
      const Patch p = build_patch(dofs, z);
      std::set<Key> offsets, reflected;
      for (int d : p.member_nodes) {
        const Point2 o = dofs.coord(d) - dofs.coord(z);
        offsets.insert(key(o));
        reflected.insert(key(-1.0 * o));
      }
      EXPECT_EQ(offsets, reflected) << to_string(pattern) << " vertex " << z;
    }
  }
}

TEST(Patch, RejectsNonVertex) {
  const auto space = uniform_space(Pattern::regular, 4, 2);
  EXPECT_THROW(build_patch(space->dofs(), static_cast<int>(space->mesh().node_count())),
               InvalidInput);
}

TEST(Patch, TinyMeshExhausted) {
  const auto mesh = std::make_shared<const Triangulation>(
      std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}}, std::vector<Triangle>{{0, 1, 2}},
      std::vector<bool>{true, true, true}, Pattern::imported);
  const DofMap dofs(mesh, 1);
  EXPECT_THROW(build_patch(dofs, 0), RankDeficient);
}

TEST(InteriorRegion, PointExamples) {
  const auto mesh = std::make_shared<const Triangulation>(generate_uniform(Pattern::regular, 20));
  const DofMap dofs(mesh, 1);
  const InteriorRegion r = interior_region(dofs, 0.1);
  const int center = grid_node(20, 10, 10);
  const int near = grid_node(20, 1, 10); // (0.05, 0.5)
  EXPECT_TRUE(r.is_interior[static_cast<std::size_t>(center)]);
  EXPECT_FALSE(r.is_interior[static_cast<std::size_t>(near)]);
}

TEST(InteriorRegion, BruteForceRegular) {
  const auto mesh = std::make_shared<const Triangulation>(generate_uniform(Pattern::regular, 10));
  const DofMap dofs(mesh, 1);
  const InteriorRegion r = interior_region(dofs, 0.1);
  std::vector<int> expected_near;
  for (std::size_t i = 0; i < mesh->node_count(); ++i) {
    const Point2 p = mesh->nodes()[i];
    if (std::min({p.x, p.y, 1 - p.x, 1 - p.y}) <= 0.1)
      expected_near.push_back(static_cast<int>(i));
  }
  EXPECT_EQ(r.near_boundary_nodes, expected_near);
  EXPECT_EQ(r.interior_nodes.size() + r.near_boundary_nodes.size(), 121u);
}

TEST(InteriorRegion, TieRuleKeepsNodesAtCutoff) {
  const auto mesh = std::make_shared<const Triangulation>(generate_uniform(Pattern::regular, 10));
  const DofMap dofs(mesh, 1);
  const InteriorRegion r = interior_region(dofs, 0.1, CutoffTies::interior);
  // nodes at distance 0.1 (x or y in {0.1, 0.9}) are kept
  EXPECT_EQ(r.interior_nodes.size(), 81u);
  EXPECT_EQ(interior_region(dofs, 0.1).interior_nodes.size(), 49u);
}

TEST(InteriorRegion, PartitionAndElements) {
  const auto space = FESpace::create(refine_uniform(delaunay_mesh()), 2);
  const InteriorRegion r = interior_region(space->dofs(), 0.1);
  std::vector<int> all(r.interior_nodes);
  all.insert(all.end(), r.near_boundary_nodes.begin(), r.near_boundary_nodes.end());
  std::sort(all.begin(), all.end());
  ASSERT_EQ(all.size(), space->dof_count());
  for (std::size_t i = 0; i < all.size(); ++i)
    EXPECT_EQ(all[i], static_cast<int>(i));
  for (int t : r.interior_elements)
    for (int d : space->dofs().element_dofs(t))
      EXPECT_TRUE(r.is_interior[static_cast<std::size_t>(d)]);
}

TEST(InteriorRegion, ZeroCutoffKeepsEverything) {
  const auto space = uniform_space(Pattern::chevron, 4);
  const InteriorRegion r = interior_region(space->dofs(), 0.0);
  EXPECT_EQ(r.interior_nodes.size(), space->dof_count());
  EXPECT_EQ(r.interior_elements.size(), space->mesh().triangle_count());
  EXPECT_THROW(interior_region(space->dofs(), -0.1), InvalidInput);
}

TEST(InteriorRegion, AreaApproachesInnerSquare) {
  double previous = 0.0;
  for (int n : {20, 40, 80, 160}) {
    const auto space = uniform_space(Pattern::regular, n);
    const double a = interior_region(space->dofs(), 0.1).area(space->mesh());
    EXPECT_NEAR(a, 0.64, 4.0 * 0.8 / n + 1e-12);
    EXPECT_GE(a, previous);
    previous = a;
  }
}
