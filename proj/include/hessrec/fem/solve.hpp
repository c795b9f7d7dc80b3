#pragma once

#include "hessrec/fem/assembly.hpp"

#include <span>
#include <string>

namespace hessrec {

inline constexpr double kSolveTolerance = 1e-10;

/// Galerkin solution with u_h = g at boundary DOFs.
///
/// Boundary rows and columns are eliminated and the reduced system is solved
/// directly (LDL^T when b is absent, LU otherwise). Throws SolverFailure if
/// the factorization fails or the relative residual exceeds kSolveTolerance.
Field solve_dirichlet(std::shared_ptr<const FESpace> space, const Coefficients& coeffs,
                      const ScalarFunction& g);

/// CSV lines "dof_index,x,y,value" with a header row.
std::string solution_csv(const Field& u);

/// CSV lines "dof_index,x,y,<names...>", one column per field component, %.17g.
std::string field_csv(const Field& u, std::span<const std::string> names);

} // namespace hessrec
