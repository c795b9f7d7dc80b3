#include "hessrec/experiments/study.hpp"

#include "hessrec/error.hpp"
#include "hessrec/experiments/catalog.hpp"
#include "hessrec/fem/norms.hpp"
#include "hessrec/fem/solve.hpp"
#include "hessrec/mesh/generators.hpp"
#include "hessrec/mesh/interior_region.hpp"
#include "hessrec/mesh/refine.hpp"

#include <cmath>
#include <cstdio>

namespace hessrec {

namespace {

std::string format_cutoff(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::vector<std::string> config_echo(const StudyConfig& c) {
  std::vector<std::string> out;
  out.push_back(std::string("study: ") + (c.kind == StudyKind::fem ? "fem" : "interpolation"));
  if (c.initial_mesh)
    out.push_back("mesh: " + (c.mesh_label.empty() ? std::string("imported") : c.mesh_label));
  else
    out.push_back("mesh: " + std::string(to_string(c.pattern)) + " n0=" + std::to_string(c.n0));
  out.push_back("element: p" + std::to_string(c.order));
  std::string methods;
  for (RecoveryMethod m : c.methods)
    methods += (methods.empty() ? "" : ",") + std::string(to_string(m));
  out.push_back("methods: " + methods);
  out.push_back("levels: " + std::to_string(c.levels));
  out.push_back("L: " + format_cutoff(c.cutoff));
  out.push_back(std::string("ties: ") + (c.ties == CutoffTies::interior ? "interior" : "near"));
  out.push_back("solution: " + c.solution);
  return out;
}

VectorFunction hessian_of(const ExactSolution& u) {
  return [&u](const Point2& p) { return Eigen::VectorXd(u.hessian(p)); };
}

template <typename LevelErrors>
StudyReport run_levels(const StudyConfig& config, LevelErrors level_errors) {
  validate(config);
  StudyReport report;
  report.methods = config.methods;
  report.metadata = config_echo(config);
  for (int level = 0; level < config.levels; ++level) {
    const auto space = FESpace::create(study_mesh(config, level), config.order);
    StudyRow row;
    row.dof = space->dof_count();
    row.h = space->mesh().mesh_size();
    row.errors = level_errors(space);
    report.rows.push_back(std::move(row));
  }
  compute_orders(report);
  return report;
}

} // namespace

void validate(const StudyConfig& config) {
  if (config.levels < 2)
    throw InvalidInput("a study needs at least 2 levels");
  if (config.methods.empty())
    throw InvalidInput("a study needs at least one recovery method");
  if (!(config.cutoff >= 0.0))
    throw InvalidInput("interior cutoff must be nonnegative");
  if (config.order < 1)
    throw InvalidInput("element order must be positive");
  if (!config.initial_mesh && (config.n0 < 2 || config.pattern == Pattern::imported))
    throw InvalidInput("a generated study needs a uniform pattern and n0 >= 2");
  for (RecoveryMethod m : config.methods)
    if (!method_supports_order(m, config.order))
      throw InvalidInput("recovery method " + std::string(to_string(m)) +
                         " is defined for linear elements only");
  exact_solution(config.solution);
}

std::optional<double> dof_order(std::span<const double> errors, std::span<const std::size_t> dofs,
                                std::size_t row) {
  if (row == 0 || row >= errors.size() || row >= dofs.size())
    return std::nullopt;
  if (!(errors[row - 1] > 0.0) || !(errors[row] > 0.0) || dofs[row] <= dofs[row - 1])
    return std::nullopt;
  return std::log(errors[row - 1] / errors[row]) /
         std::log(static_cast<double>(dofs[row]) / static_cast<double>(dofs[row - 1]));
}

std::optional<double> h_order(std::span<const double> errors, std::span<const double> hs,
                              std::size_t row) {
  if (row == 0 || row >= errors.size() || row >= hs.size())
    return std::nullopt;
  if (!(errors[row - 1] > 0.0) || !(errors[row] > 0.0) || !(hs[row] < hs[row - 1]))
    return std::nullopt;
  return std::log(errors[row - 1] / errors[row]) / std::log(hs[row - 1] / hs[row]);
}

void compute_orders(StudyReport& report) {
  std::vector<std::size_t> dofs;
  std::vector<double> hs;
  for (const StudyRow& r : report.rows) {
    dofs.push_back(r.dof);
    hs.push_back(r.h);
  }
  for (std::size_t m = 0; m < report.methods.size(); ++m) {
    std::vector<double> errors;
    for (const StudyRow& r : report.rows)
      errors.push_back(r.errors.at(m));
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
      StudyRow& r = report.rows[i];
      r.dof_orders.resize(report.methods.size());
      r.h_orders.resize(report.methods.size());
      r.dof_orders[m] = dof_order(errors, dofs, i);
      r.h_orders[m] = h_order(errors, hs, i);
    }
  }
}

Triangulation study_mesh(const StudyConfig& config, int level) {
  if (config.initial_mesh) {
    Triangulation mesh = *config.initial_mesh;
    for (int l = 0; l < level; ++l)
      mesh = refine_uniform(mesh);
    return mesh;
  }
  return generate_uniform(config.pattern, config.n0 << level);
}

StudyReport run_interpolation_study(const StudyConfig& config) {
  const ExactSolution& u = exact_solution(config.solution);
  return run_levels(config, [&](const std::shared_ptr<const FESpace>& space) {
    const Field ui = interpolate(space, u.value);
    const InteriorRegion region = interior_region(space->dofs(), config.cutoff, config.ties);
    std::vector<double> errors;
    for (RecoveryMethod m : config.methods)
      errors.push_back(
          max_error_nodes(recover_hessian(ui, m), hessian_of(u), region.interior_nodes));
    return errors;
  });
}

StudyReport run_fem_study(const StudyConfig& config) {
  const ExactSolution& u = exact_solution(config.solution);
  const Coefficients coeffs =
      Coefficients::laplace([&u](const Point2& p) { return -u.laplacian(p); });
  return run_levels(config, [&](const std::shared_ptr<const FESpace>& space) {
    const Field uh = solve_dirichlet(space, coeffs, u.value);
    const InteriorRegion region = interior_region(space->dofs(), config.cutoff, config.ties);
    std::vector<double> errors;
    for (RecoveryMethod m : config.methods)
      errors.push_back(l2_error_region(recover_hessian(uh, m), hessian_of(u), region));
    return errors;
  });
}

StudyReport run_study(const StudyConfig& config) {
  return config.kind == StudyKind::fem ? run_fem_study(config) : run_interpolation_study(config);
}

} // namespace hessrec
