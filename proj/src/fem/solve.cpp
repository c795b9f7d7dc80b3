#include "hessrec/fem/solve.hpp"

#include "hessrec/error.hpp"

#include <Eigen/SparseCholesky>
#include <Eigen/SparseLU>

#include <cstdio>
#include <vector>

namespace hessrec {

namespace {

template <typename Solver>
Eigen::VectorXd factor_and_solve(const Eigen::SparseMatrix<double>& a, const Eigen::VectorXd& b) {
  Solver solver;
  solver.compute(a);
  if (solver.info() != Eigen::Success)
    throw SolverFailure("sparse factorization failed", -1.0);
  Eigen::VectorXd x = solver.solve(b);
  if (solver.info() != Eigen::Success)
    throw SolverFailure("sparse solve failed", -1.0);
  return x;
}

} // namespace

Field solve_dirichlet(std::shared_ptr<const FESpace> space, const Coefficients& coeffs,
                      const ScalarFunction& g) {
  const LinearSystem sys = assemble(*space, coeffs);
  const DofMap& dofs = space->dofs();
  const std::size_t n = dofs.dof_count();

  std::vector<int> reduced(n, -1);
  int free_count = 0;
  Eigen::VectorXd u = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (dofs.is_boundary(static_cast<int>(i)))
      u[static_cast<Eigen::Index>(i)] = g(dofs.coords()[i]);
    else
      reduced[i] = free_count++;
  }
  if (free_count == 0)
    return Field(std::move(space), u);

  std::vector<Eigen::Triplet<double>> triplets;
  Eigen::VectorXd rhs(free_count);
  for (Eigen::Index row = 0; row < sys.matrix.outerSize(); ++row) {
    const int r = reduced[static_cast<std::size_t>(row)];
    if (r < 0)
      continue;
    double b = sys.rhs[row];
    for (SparseMatrix::InnerIterator it(sys.matrix, row); it; ++it) {
      const int c = reduced[static_cast<std::size_t>(it.col())];
      if (c >= 0)
        triplets.emplace_back(r, c, it.value());
      else
        b -= it.value() * u[it.col()];
    }
    rhs[r] = b;
  }
  Eigen::SparseMatrix<double> a(free_count, free_count);
  a.setFromTriplets(triplets.begin(), triplets.end());

  const Eigen::VectorXd x =
      coeffs.convection
          ? factor_and_solve<Eigen::SparseLU<Eigen::SparseMatrix<double>, Eigen::COLAMDOrdering<int>>>(
                a, rhs)
          : factor_and_solve<Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>>>(a, rhs);

  const double denom = std::max(rhs.norm(), 1e-300);
  const double residual = (a * x - rhs).norm() / denom;
  if (!(residual <= kSolveTolerance))
    throw SolverFailure("relative residual " + std::to_string(residual) + " above tolerance",
                        residual);

  for (std::size_t i = 0; i < n; ++i)
    if (reduced[i] >= 0)
      u[static_cast<Eigen::Index>(i)] = x[reduced[i]];
  return Field(std::move(space), u);
}

std::string field_csv(const Field& u, std::span<const std::string> names) {
  if (names.size() != static_cast<std::size_t>(u.components()))
    throw InvalidInput("column names do not match the field components");
  std::string out = "dof_index,x,y";
  for (const std::string& n : names)
    out += "," + n;
  out += "\n";
  char buf[64];
  const auto& coords = u.space().dofs().coords();
  for (std::size_t i = 0; i < coords.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.17g,%.17g", i, coords[i].x, coords[i].y);
    out += buf;
    for (int c = 0; c < u.components(); ++c) {
      std::snprintf(buf, sizeof buf, ",%.17g", u.values()(static_cast<Eigen::Index>(i), c));
      out += buf;
    }
    out += "\n";
  }
  return out;
}

std::string solution_csv(const Field& u) {
  const std::string name = "value";
  return field_csv(u, std::span(&name, 1));
}

} // namespace hessrec
