#include "hessrec/error.hpp"
#include "hessrec/experiments/catalog.hpp"
#include "hessrec/experiments/report.hpp"
#include "hessrec/fem/solve.hpp"
#include "hessrec/mesh/generators.hpp"
#include "hessrec/mesh/mesh_io.hpp"
#include "hessrec/recovery/stencil.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hessrec;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MeshSource {
  std::string pattern;
  int n = 10;
  std::string mesh_prefix;

  void add_to(CLI::App* cmd) {
    auto* p = cmd->add_option("--pattern", pattern,
                              "uniform pattern: regular, chevron, crisscross, unionjack, equilateral");
    auto* m = cmd->add_option("--mesh", mesh_prefix, "read <prefix>.node and <prefix>.ele");
    p->excludes(m);
    cmd->add_option("--n", n, "cells per side of the uniform pattern")->check(CLI::PositiveNumber);
  }

  Triangulation load() const {
    if (!mesh_prefix.empty())
      return read_mesh_files(mesh_prefix);
    return generate_uniform(pattern_or_default(), n);
  }

  Pattern pattern_or_default() const {
    if (pattern.empty())
      return Pattern::regular;
    const auto p = parse_pattern(pattern);
    if (!p || *p == Pattern::imported)
      throw UsageError("unknown pattern '" + pattern + "'");
    return *p;
  }
};

int element_order(const std::string& element) {
  if (element == "p1")
    return 1;
  if (element == "p2")
    return 2;
  throw UsageError("--element must be p1 or p2");
}

RecoveryMethod method_from(const std::string& name) {
  const auto m = parse_method(name);
  if (!m)
    throw UsageError("unknown recovery method '" + name + "'");
  return *m;
}

void check_solution(const std::string& id) {
  for (const std::string& known : catalog_ids())
    if (known == id)
      return;
  throw UsageError("unknown solution '" + id + "'");
}

void write_output(const std::string& out, const std::string& text) {
  if (out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f)
    throw Error("cannot open " + out + " for writing");
  f << text;
  if (!f)
    throw Error("failed writing " + out);
}

Field source_field(std::shared_ptr<const FESpace> space, const std::string& source,
                   const ExactSolution& u) {
  if (source == "interpolate")
    return interpolate(space, u.value);
  return solve_dirichlet(space, Coefficients::laplace([&u](const Point2& p) { return -u.laplacian(p); }),
                         u.value);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gradient and Hessian recovery on 2D triangular meshes"};
  app.require_subcommand(1);

  // mesh
  auto* mesh_cmd = app.add_subcommand("mesh", "write a uniform mesh as .node/.ele files");
  MeshSource mesh_src;
  std::string mesh_out;
  mesh_cmd->add_option("--pattern", mesh_src.pattern, "uniform pattern")->required();
  mesh_cmd->add_option("--n", mesh_src.n, "cells per side")->check(CLI::PositiveNumber);
  mesh_cmd->add_option("--out", mesh_out, "output prefix, '-' for stdout")->required();

  // solve
  auto* solve_cmd = app.add_subcommand("solve", "solve -lap u = f with u = g on the boundary");
  MeshSource solve_src;
  solve_src.add_to(solve_cmd);
  std::string solve_element = "p1", solve_solution = "sinsin", solve_out = "-";
  solve_cmd->add_option("--element", solve_element, "p1 or p2");
  solve_cmd->add_option("--solution", solve_solution, "exact solution id");
  solve_cmd->add_option("--out", solve_out, "output CSV, '-' for stdout");

  // recover
  auto* recover_cmd = app.add_subcommand("recover", "recover the Hessian of a solved or interpolated field");
  MeshSource recover_src;
  recover_src.add_to(recover_cmd);
  std::string recover_element = "p1", recover_solution = "sinsin", recover_method = "ppr-ppr",
              recover_source = "fem", recover_out = "-";
  recover_cmd->add_option("--element", recover_element, "p1 or p2");
  recover_cmd->add_option("--solution", recover_solution, "exact solution id");
  recover_cmd->add_option("--method", recover_method, "ppr-ppr, zz-zz, zz-ppr or qf");
  recover_cmd->add_option("--source", recover_source, "fem or interpolate")
      ->check(CLI::IsMember({"fem", "interpolate"}));
  recover_cmd->add_option("--out", recover_out, "output CSV, '-' for stdout");

  // stencil
  auto* stencil_cmd = app.add_subcommand("stencil", "print the recovery stencil at a node");
  MeshSource stencil_src;
  stencil_src.add_to(stencil_cmd);
  std::string stencil_element = "p1", stencil_method = "ppr-ppr", stencil_component = "hxx",
              stencil_out = "-";
  double sx = 0.5, sy = 0.5;
  stencil_cmd->add_option("--element", stencil_element, "p1 or p2");
  stencil_cmd->add_option("--method", stencil_method, "ppr-ppr, zz-zz, zz-ppr or qf");
  stencil_cmd->add_option("--component", stencil_component, "gx, gy, hxx, hxy, hyx or hyy");
  stencil_cmd->add_option("--x", sx, "x of the requested node (nearest node is used)");
  stencil_cmd->add_option("--y", sy, "y of the requested node (nearest node is used)");
  stencil_cmd->add_option("--out", stencil_out, "output file, '-' for stdout");

  // study
  auto* study_cmd = app.add_subcommand("study", "convergence study");
  MeshSource study_src;
  int example = 2, levels = 6, n0 = 10;
  std::string study_element = "p1", methods = "ppr-ppr", format = "csv", study_solution = "sinsin",
              study_out = "-", ties = "interior";
  double cutoff = 0.1;
  auto* sp = study_cmd->add_option("--pattern", study_src.pattern, "uniform pattern");
  auto* sm = study_cmd->add_option("--mesh", study_src.mesh_prefix, "initial mesh prefix, refined per level");
  sp->excludes(sm);
  study_cmd->add_option("--example", example, "1: interpolation study, 2: finite element study")
      ->check(CLI::IsMember({1, 2}));
  study_cmd->add_option("--n0", n0, "cells per side on the coarsest uniform level")
      ->check(CLI::Range(2, 1 << 20));
  study_cmd->add_option("--element", study_element, "p1 or p2");
  study_cmd->add_option("--methods", methods, "comma-separated recovery methods");
  study_cmd->add_option("--levels", levels, "number of levels (>= 2)")->check(CLI::Range(2, 30));
  study_cmd->add_option("--L", cutoff, "interior cutoff distance")->check(CLI::NonNegativeNumber);
  study_cmd->add_option("--ties", ties, "nodes at distance exactly L count as: interior or near")
      ->check(CLI::IsMember({"interior", "near"}));
  study_cmd->add_option("--solution", study_solution, "exact solution id");
  study_cmd->add_option("--format", format, "csv or markdown")
      ->check(CLI::IsMember({"csv", "markdown", "md"}));
  study_cmd->add_option("--out", study_out, "output file, '-' for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*mesh_cmd) {
      const Triangulation mesh = generate_uniform(mesh_src.pattern_or_default(), mesh_src.n);
      if (mesh_out == "-")
        std::cout << node_text(mesh) << element_text(mesh);
      else
        write_mesh_files(mesh, mesh_out);
    } else if (*solve_cmd) {
      const int order = element_order(solve_element);
      check_solution(solve_solution);
      const auto space = FESpace::create(solve_src.load(), order);
      const Field uh = source_field(space, "fem", exact_solution(solve_solution));
      write_output(solve_out, solution_csv(uh));
    } else if (*recover_cmd) {
      const int order = element_order(recover_element);
      const RecoveryMethod method = method_from(recover_method);
      check_solution(recover_solution);
      if (!method_supports_order(method, order))
        throw UsageError("method " + recover_method + " needs --element p1");
      const auto space = FESpace::create(recover_src.load(), order);
      const Field u = source_field(space, recover_source, exact_solution(recover_solution));
      const std::vector<std::string> names{"xx", "xy", "yx", "yy"};
      write_output(recover_out, field_csv(recover_hessian(u, method), names));
    } else if (*stencil_cmd) {
      const int order = element_order(stencil_element);
      const RecoveryMethod method = method_from(stencil_method);
      const auto component = parse_component(stencil_component);
      if (!component)
        throw UsageError("unknown component '" + stencil_component + "'");
      if (!method_supports_order(method, order))
        throw UsageError("method " + stencil_method + " needs --element p1");
      const auto space = FESpace::create(stencil_src.load(), order);
      const Point2 p{sx, sy};
      if (space->mesh().find_triangle(p) < 0)
        throw Error("requested point lies outside the mesh");
      const int node = nearest_node(space->dofs(), p);
      write_output(stencil_out, to_json(extract_stencil(*space, method, node, *component)));
    } else if (*study_cmd) {
      StudyConfig config;
      config.kind = example == 1 ? StudyKind::interpolation : StudyKind::fem;
      config.order = element_order(study_element);
      config.levels = levels;
      config.cutoff = cutoff;
      config.ties = ties == "near" ? CutoffTies::near_boundary : CutoffTies::interior;
      config.n0 = n0;
      config.solution = study_solution;
      check_solution(study_solution);
      config.methods.clear();
      std::stringstream list(methods);
      for (std::string item; std::getline(list, item, ',');)
        config.methods.push_back(method_from(item));
      if (config.methods.empty())
        throw UsageError("--methods is empty");
      for (RecoveryMethod m : config.methods)
        if (!method_supports_order(m, config.order))
          throw UsageError("method " + std::string(to_string(m)) + " needs --element p1");
      if (!study_src.mesh_prefix.empty()) {
        config.initial_mesh = read_mesh_files(study_src.mesh_prefix);
        config.mesh_label = study_src.mesh_prefix;
      } else {
        config.pattern = study_src.pattern_or_default();
      }
      const StudyReport report = run_study(config);
      write_output(study_out, emit_report(report, *parse_format(format)));
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
