#include "test_support.hpp"

#include "hessrec/experiments/catalog.hpp"
#include "hessrec/experiments/report.hpp"
#include "hessrec/fem/solve.hpp"
#include "hessrec/recovery/stencil.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace hessrec;
using namespace hessrec::testing;

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(HESSREC_CLI) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe)
    return r;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0)
    r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() /
                   ("hessrec_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  return dir;
}

} // namespace

TEST(Cli, MeshFiles) {
  const auto dir = scratch_dir();
  const std::string prefix = (dir / "reg").string();
  ASSERT_EQ(run("mesh --pattern regular --n 10 --out " + prefix).status, 0);
  const Triangulation m = read_mesh_files(prefix);
  EXPECT_EQ(m.node_count(), 121u);
  EXPECT_EQ(m.triangle_count(), 200u);
  const Triangulation expected = generate_uniform(Pattern::regular, 10);
  EXPECT_EQ(read_file(prefix + ".node"), node_text(expected));
  EXPECT_EQ(read_file(prefix + ".ele"), element_text(expected));

  const RunResult cc = run("mesh --pattern crisscross --n 10 --out -");
  ASSERT_EQ(cc.status, 0);
  const Triangulation c = generate_uniform(Pattern::crisscross, 10);
  EXPECT_EQ(c.node_count(), 221u);
  EXPECT_EQ(cc.out, node_text(c) + element_text(c));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("mesh --pattern hexagon --n 4 --out -").status, 2);
  EXPECT_EQ(run("study --levels 1").status, 2);
  EXPECT_EQ(run("study --methods bogus --levels 2").status, 2);
  EXPECT_EQ(run("study --element p2 --methods qf --levels 2").status, 2);
  EXPECT_EQ(run("solve --element p3").status, 2);
  EXPECT_EQ(run("solve --solution nope").status, 2);
  EXPECT_EQ(run("").status, 2);
  EXPECT_EQ(run("solve --mesh /nonexistent/mesh").status, 1);
  EXPECT_EQ(run("stencil --x 2 --y 2").status, 1);
  EXPECT_EQ(run("--help").status, 0);
}

TEST(Cli, StencilMatchesLibrary) {
  const RunResult r = run("stencil --pattern regular --n 10 --x 0.5 --y 0.5 --component hxy");
  ASSERT_EQ(r.status, 0);
  const auto space = uniform_space(Pattern::regular, 10);
  EXPECT_EQ(r.out, to_json(extract_stencil(*space, RecoveryMethod::ppr_ppr, grid_node(10, 5, 5),
                                           StencilComponent::hxy)));

  const RunResult c = run("stencil --pattern chevron --n 10 --x 0.4 --y 0.5 --method zz-ppr");
  ASSERT_EQ(c.status, 0);
  const auto chevron = uniform_space(Pattern::chevron, 10);
  EXPECT_EQ(c.out, to_json(extract_stencil(*chevron, RecoveryMethod::zz_ppr,
                                           nearest_node(chevron->dofs(), {0.4, 0.5}),
                                           StencilComponent::hxx)));
}

TEST(Cli, SolveAndRecoverMatchLibrary) {
  const RunResult s = run("solve --pattern unionjack --n 4 --element p2");
  ASSERT_EQ(s.status, 0);
  const auto space = uniform_space(Pattern::unionjack, 4, 2);
  const ExactSolution& u = exact_solution("sinsin");
  const Coefficients coeffs = Coefficients::laplace([&u](const Point2& p) { return -u.laplacian(p); });
  const Field uh = solve_dirichlet(space, coeffs, u.value);
  EXPECT_EQ(s.out, solution_csv(uh));

  const std::vector<std::string> names{"xx", "xy", "yx", "yy"};
  const RunResult r = run("recover --pattern unionjack --n 4 --element p2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, field_csv(recover_hessian(uh, RecoveryMethod::ppr_ppr), names));

  const auto mesh = data_path("delaunay139");
  const RunResult i = run("recover --mesh " + mesh + " --method qf --source interpolate --solution cubic");
  ASSERT_EQ(i.status, 0);
  const auto dspace = FESpace::create(delaunay_mesh(), 1);
  EXPECT_EQ(i.out, field_csv(recover_hessian(interpolate(dspace, exact_solution("cubic").value),
                                             RecoveryMethod::qf),
                             names));
}

TEST(Cli, StudyMatchesLibrary) {
  const RunResult r =
      run("study --example 1 --pattern chevron --n0 4 --levels 3 --L 0.25 --methods ppr-ppr,zz-zz");
  ASSERT_EQ(r.status, 0);
  StudyConfig c;
  c.kind = StudyKind::interpolation;
  c.pattern = Pattern::chevron;
  c.n0 = 4;
  c.levels = 3;
  c.cutoff = 0.25;
  c.methods = {RecoveryMethod::ppr_ppr, RecoveryMethod::zz_zz};
  EXPECT_EQ(r.out, emit_report(run_study(c), ReportFormat::csv));

  const auto mesh = data_path("delaunay139");
  const RunResult d = run("study --mesh " + mesh + " --levels 2 --format markdown --ties near");
  ASSERT_EQ(d.status, 0);
  StudyConfig dc;
  dc.initial_mesh = delaunay_mesh();
  dc.mesh_label = mesh;
  dc.levels = 2;
  dc.ties = CutoffTies::near_boundary;
  EXPECT_EQ(d.out, emit_report(run_study(dc), ReportFormat::markdown));
}
