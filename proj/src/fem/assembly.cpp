#include "hessrec/fem/assembly.hpp"

#include "hessrec/error.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace hessrec {

Coefficients Coefficients::laplace(std::function<double(const Point2&)> f) {
  Coefficients c;
  c.diffusion = [](const Point2&) { return Eigen::Matrix2d::Identity().eval(); };
  c.source = std::move(f);
  return c;
}

namespace {

void check_diffusion(const Eigen::Matrix2d& d, const Point2& p) {
  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  if (!d.allFinite() || std::abs(d(0, 1) - d(1, 0)) > 1e-12 * scale)
    throw InvalidInput("diffusion tensor is not symmetric at (" + std::to_string(p.x) + ", " +
                       std::to_string(p.y) + ")");
  const double tol = -1e-12 * scale;
  if (d(0, 0) < tol || d(1, 1) < tol || d.determinant() < tol * scale)
    throw InvalidInput("diffusion tensor is not positive semidefinite at (" +
                       std::to_string(p.x) + ", " + std::to_string(p.y) + ")");
}

} // namespace

LinearSystem assemble(const FESpace& space, const Coefficients& coeffs) {
  if (!coeffs.diffusion)
    throw InvalidInput("coefficients need a diffusion tensor");
  const Triangulation& mesh = space.mesh();
  const TriangleQuadrature& quad = space.quadrature();
  const LagrangeBasis& basis = space.basis();
  const auto nloc = static_cast<Eigen::Index>(basis.size());
  const auto ndof = static_cast<Eigen::Index>(space.dof_count());

  std::vector<Eigen::VectorXd> phi;
  std::vector<Eigen::MatrixX2d> dphi_ref;
  for (const auto& q : quad.points) {
    phi.push_back(basis.values(q[0], q[1]));
    dphi_ref.push_back(basis.gradients(q[0], q[1]));
  }

  std::vector<Eigen::Triplet<double>> triplets;
  triplets.reserve(mesh.triangle_count() * static_cast<std::size_t>(nloc * nloc));
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(ndof);
  Eigen::MatrixXd ke(nloc, nloc);
  Eigen::VectorXd fe(nloc);

  for (std::size_t ti = 0; ti < mesh.triangle_count(); ++ti) {
    const int t = static_cast<int>(ti);
    const double area = mesh.area(t);
    const Eigen::Matrix2d jit = space.inverse_jacobian_transpose(t);
    ke.setZero();
    fe.setZero();
    for (std::size_t q = 0; q < quad.points.size(); ++q) {
      const Point2 x = space.map_point(t, quad.points[q][0], quad.points[q][1]);
      const double w = quad.weights[q] * area;
      const Eigen::MatrixX2d grad = dphi_ref[q] * jit.transpose(); // rows: physical gradients
      const Eigen::Matrix2d d = coeffs.diffusion(x);
      check_diffusion(d, x);
      ke.noalias() += w * grad * d * grad.transpose();
      if (coeffs.convection) {
        const Eigen::Vector2d b = coeffs.convection(x);
        // (b phi_j) . grad phi_i
        ke.noalias() += w * (grad * b) * phi[q].transpose();
      }
      if (coeffs.reaction)
        ke.noalias() += w * coeffs.reaction(x) * phi[q] * phi[q].transpose();
      if (coeffs.source)
        fe.noalias() += w * coeffs.source(x) * phi[q];
    }
    const auto dofs = space.dofs().element_dofs(t);
    for (Eigen::Index i = 0; i < nloc; ++i) {
      rhs[dofs[static_cast<std::size_t>(i)]] += fe[i];
      for (Eigen::Index j = 0; j < nloc; ++j)
        triplets.emplace_back(dofs[static_cast<std::size_t>(i)], dofs[static_cast<std::size_t>(j)],
                              ke(i, j));
    }
  }

  LinearSystem sys;
  sys.matrix.resize(ndof, ndof);
  sys.matrix.setFromTriplets(triplets.begin(), triplets.end());
  sys.rhs = std::move(rhs);
  return sys;
}

} // namespace hessrec
