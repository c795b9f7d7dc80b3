#pragma once

#include "hessrec/mesh/interior_region.hpp"
#include "hessrec/mesh/triangulation.hpp"
#include "hessrec/recovery/hessian_recovery.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hessrec {

enum class StudyKind {
  /// max nodal error of H_h u_I over the interior nodes
  interpolation,
  /// L2 error of H_h u_h over the interior elements, u_h the Galerkin solution of -lap u = f
  fem
};

struct StudyConfig {
  StudyKind kind = StudyKind::fem;
  /// Used when initial_mesh is empty: level l is generate_uniform(pattern, n0 * 2^l).
  Pattern pattern = Pattern::regular;
  int n0 = 10;
  /// When set, level l is this mesh refined l times.
  std::optional<Triangulation> initial_mesh;
  /// Echoed in reports for imported meshes.
  std::string mesh_label;
  int order = 1;
  std::vector<RecoveryMethod> methods{RecoveryMethod::ppr_ppr};
  int levels = 6;
  double cutoff = 0.1;
  /// Nodes at distance exactly `cutoff` count as interior by default; this is
  /// the convention under which the reference tables are reproduced.
  CutoffTies ties = CutoffTies::interior;
  std::string solution = "sinsin";
};

/// Throws InvalidInput unless levels >= 2, methods is nonempty and
/// order-compatible, cutoff >= 0, n0 >= 2 and the solution id exists.
void validate(const StudyConfig& config);

struct StudyRow {
  std::size_t dof = 0;
  double h = 0.0;
  /// One entry per method, in config order.
  std::vector<double> errors;
  std::vector<std::optional<double>> dof_orders;
  std::vector<std::optional<double>> h_orders;
};

struct StudyReport {
  std::vector<RecoveryMethod> methods;
  std::vector<StudyRow> rows;
  /// "key: value" lines echoing the configuration.
  std::vector<std::string> metadata;
};

/// ln(e[row-1]/e[row]) / ln(N[row]/N[row-1]); empty when row is 0 or an error is not positive.
std::optional<double> dof_order(std::span<const double> errors, std::span<const std::size_t> dofs,
                                std::size_t row);

/// ln(e[row-1]/e[row]) / ln(h[row-1]/h[row]).
std::optional<double> h_order(std::span<const double> errors, std::span<const double> hs,
                              std::size_t row);

/// Mesh of the given level.
Triangulation study_mesh(const StudyConfig& config, int level);

StudyReport run_interpolation_study(const StudyConfig& config);
StudyReport run_fem_study(const StudyConfig& config);
/// Dispatches on config.kind.
StudyReport run_study(const StudyConfig& config);

/// Fills dof_orders and h_orders from the errors.
void compute_orders(StudyReport& report);

} // namespace hessrec
