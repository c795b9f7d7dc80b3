#include "hessrec/recovery/gradient_recovery.hpp"

#include "hessrec/error.hpp"
#include "hessrec/recovery/polynomial.hpp"

#include <optional>

namespace hessrec {

namespace {

using Triplets = std::vector<Eigen::Triplet<double>>;

void add_weights(Triplets& out, int row, const std::vector<int>& cols,
                 const Eigen::RowVectorXd& w, double factor) {
  for (std::size_t j = 0; j < cols.size(); ++j)
    out.emplace_back(row, cols[j], factor * w[static_cast<Eigen::Index>(j)]);
}

SparseMatrix from_triplets(std::size_t n, const Triplets& t) {
  SparseMatrix m(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  m.setFromTriplets(t.begin(), t.end());
  return m;
}

} // namespace

PprRecovery::PprRecovery(const FESpace& space) {
  const DofMap& dofs = space.dofs();
  const Triangulation& mesh = space.mesh();
  const int degree = space.order() + 1;
  const std::size_t nv = mesh.node_count();

  patches_.reserve(nv);
  std::vector<std::optional<LeastSquaresFit>> fits(nv);
  std::vector<Point2> samples;
  for (std::size_t v = 0; v < nv; ++v) {
    patches_.push_back(build_patch(dofs, static_cast<int>(v), degree));
    samples.clear();
    for (int d : patches_.back().member_nodes)
      samples.push_back(dofs.coord(d));
    fits[v].emplace(samples, mesh.node(static_cast<int>(v)), degree);
  }

  Triplets tx, ty;
  const auto blend = [&](int row, int vertex, Point2 at, double factor) {
    const LeastSquaresFit& fit = *fits[static_cast<std::size_t>(vertex)];
    const auto& cols = patches_[static_cast<std::size_t>(vertex)].member_nodes;
    add_weights(tx, row, cols, fit.gradient_weights(at, 0), factor);
    add_weights(ty, row, cols, fit.gradient_weights(at, 1), factor);
  };

  for (std::size_t i = 0; i < dofs.dof_count(); ++i) {
    const int row = static_cast<int>(i);
    const Point2 z = dofs.coord(row);
    const NodeClassification& c = dofs.classify(row);
    switch (c.kind) {
    case NodeClassification::Kind::vertex:
      blend(row, row, z, 1.0);
      break;
    case NodeClassification::Kind::edge_node: {
      const Point2 z1 = dofs.coord(c.parents[0]), z2 = dofs.coord(c.parents[1]);
      const double beta = distance(z, z2) / distance(z1, z2);
      blend(row, c.parents[0], z, beta);
      blend(row, c.parents[1], z, 1.0 - beta);
      break;
    }
    case NodeClassification::Kind::interior_node:
      for (std::size_t j = 0; j < 3; ++j)
        blend(row, c.parents[j], z, c.barycentric[j]);
      break;
    }
  }
  op_.dx = from_triplets(dofs.dof_count(), tx);
  op_.dy = from_triplets(dofs.dof_count(), ty);
}

GradientOperator weighted_average_operator(const FESpace& space) {
  if (space.order() != 1)
    throw InvalidInput("weighted-average recovery is defined for linear elements only");
  const Triangulation& mesh = space.mesh();
  const Eigen::MatrixX2d ref = space.basis().gradients(1.0 / 3.0, 1.0 / 3.0);

  Triplets tx, ty;
  for (std::size_t v = 0; v < mesh.node_count(); ++v) {
    const auto star = mesh.triangles_of_node(static_cast<int>(v));
    double total = 0.0;
    for (int t : star)
      total += mesh.area(t);
    for (int t : star) {
      const double w = mesh.area(t) / total;
      const Eigen::MatrixX2d grad = ref * space.inverse_jacobian_transpose(t).transpose();
      const Triangle& tri = mesh.triangle(t);
      for (std::size_t a = 0; a < 3; ++a) {
        tx.emplace_back(static_cast<int>(v), tri[a], w * grad(static_cast<Eigen::Index>(a), 0));
        ty.emplace_back(static_cast<int>(v), tri[a], w * grad(static_cast<Eigen::Index>(a), 1));
      }
    }
  }
  return {from_triplets(mesh.node_count(), tx), from_triplets(mesh.node_count(), ty)};
}

Field apply(const GradientOperator& op, const Field& u) {
  if (u.components() != 1)
    throw InvalidInput("gradient recovery needs a scalar field");
  Eigen::MatrixXd g(u.values().rows(), 2);
  g.col(0) = op.dx * u.values().col(0);
  g.col(1) = op.dy * u.values().col(0);
  return Field(u.space_ptr(), std::move(g));
}

Field ppr_gradient(const Field& u) { return apply(PprRecovery(u.space()).gradient(), u); }

Field zz_gradient(const Field& u) { return apply(weighted_average_operator(u.space()), u); }

} // namespace hessrec
