#include "hessrec/recovery/stencil.hpp"

#include "hessrec/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace hessrec {

namespace {

constexpr double kPruneTolerance = 1e-12;
constexpr double kExactnessTolerance = 1e-9;

std::string format_real(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool is_hessian(StencilComponent c) {
  return c != StencilComponent::gx && c != StencilComponent::gy;
}

std::vector<std::pair<int, double>> row_entries(const SparseMatrix& m, int row) {
  std::vector<std::pair<int, double>> out;
  for (SparseMatrix::InnerIterator it(m, row); it; ++it)
    out.emplace_back(static_cast<int>(it.col()), it.value());
  std::sort(out.begin(), out.end());
  return out;
}

double power(double v, int e) {
  double r = 1.0;
  for (int i = 0; i < e; ++i)
    r *= v;
  return r;
}

} // namespace

std::string_view to_string(StencilComponent c) {
  switch (c) {
  case StencilComponent::gx: return "gx";
  case StencilComponent::gy: return "gy";
  case StencilComponent::hxx: return "hxx";
  case StencilComponent::hxy: return "hxy";
  case StencilComponent::hyx: return "hyx";
  case StencilComponent::hyy: return "hyy";
  }
  return "unknown";
}

std::optional<StencilComponent> parse_component(std::string_view name) {
  for (StencilComponent c : {StencilComponent::gx, StencilComponent::gy, StencilComponent::hxx,
                             StencilComponent::hxy, StencilComponent::hyx, StencilComponent::hyy})
    if (name == to_string(c))
      return c;
  return std::nullopt;
}

double Stencil::apply(const Eigen::VectorXd& nodal_values) const {
  double s = 0.0;
  for (const auto& [node, w] : entries)
    s += w * nodal_values[node];
  return s;
}

double Stencil::weight_sum() const {
  double s = 0.0;
  for (const auto& e : entries)
    s += e.second;
  return s;
}

double Stencil::weight(int node) const {
  const auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{node, -std::numeric_limits<double>::infinity()});
  return it != entries.end() && it->first == node ? it->second : 0.0;
}

Stencil extract_stencil(const HessianRecovery& recovery, const FESpace& space, int node,
                        StencilComponent component) {
  if (node < 0 || node >= static_cast<int>(space.dof_count()))
    throw InvalidInput("stencil node " + std::to_string(node) + " out of range");
  Stencil s;
  s.center = node;
  s.component = component;
  s.h = space.mesh().mesh_size();
  s.h_power = is_hessian(component) ? 2 : 1;

  if (component == StencilComponent::gx) {
    s.entries = row_entries(recovery.first_stage().dx, node);
  } else if (component == StencilComponent::gy) {
    s.entries = row_entries(recovery.first_stage().dy, node);
  } else {
    const int c = static_cast<int>(component) - static_cast<int>(StencilComponent::hxx);
    s.entries = row_entries(recovery.assemble_operator().component(c), node);
  }

  double largest = 0.0;
  for (const auto& e : s.entries)
    largest = std::max(largest, std::abs(e.second));
  std::erase_if(s.entries, [&](const auto& e) { return std::abs(e.second) <= kPruneTolerance * largest; });
  return s;
}

Stencil extract_stencil(const FESpace& space, RecoveryMethod method, int node,
                        StencilComponent component) {
  return extract_stencil(HessianRecovery(space, method), space, node, component);
}

int verify_exactness_degree(const HessianOperator& op, const FESpace& space, int node,
                            int max_degree) {
  if (node < 0 || node >= static_cast<int>(space.dof_count()))
    throw InvalidInput("node " + std::to_string(node) + " out of range");
  const DofMap& dofs = space.dofs();
  const double h = space.mesh().mesh_size();
  const Point2 z = dofs.coord(node);

  std::array<std::vector<std::pair<int, double>>, 4> rows;
  for (int c = 0; c < 4; ++c)
    rows[static_cast<std::size_t>(c)] = row_entries(op.component(c), node);

  const auto exact_on = [&](int a, int b) {
    // h^2 times the exact Hessian of ((x-xz)/h)^a ((y-yz)/h)^b at z
    const std::array<double, 4> exact{(a == 2 && b == 0) ? 2.0 : 0.0,
                                       (a == 1 && b == 1) ? 1.0 : 0.0,
                                       (a == 1 && b == 1) ? 1.0 : 0.0,
                                       (a == 0 && b == 2) ? 2.0 : 0.0};
    for (std::size_t c = 0; c < 4; ++c) {
      double value = 0.0, magnitude = 1.0;
      for (const auto& [j, w] : rows[c]) {
        const Point2 p = dofs.coord(j);
        const double term = h * h * w * power((p.x - z.x) / h, a) * power((p.y - z.y) / h, b);
        value += term;
        magnitude += std::abs(term);
      }
      if (std::abs(value - exact[c]) > kExactnessTolerance * magnitude)
        return false;
    }
    return true;
  };

  int degree = -1;
  for (int d = 0; d <= max_degree; ++d) {
    for (int b = 0; b <= d; ++b)
      if (!exact_on(d - b, b))
        return degree;
    degree = d;
  }
  return degree;
}

int verify_exactness_degree(const FESpace& space, RecoveryMethod method, int node,
                            int max_degree) {
  return verify_exactness_degree(HessianRecovery(space, method).assemble_operator(), space, node,
                                 max_degree);
}

int nearest_node(const DofMap& dofs, Point2 p) {
  int best = -1;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < dofs.dof_count(); ++i) {
    const double d = distance(dofs.coords()[i], p);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::string to_json(const Stencil& s) {
  std::string out = "{\"center\": " + std::to_string(s.center) + ", \"component\": \"" +
                    std::string(to_string(s.component)) + "\", \"h\": " + format_real(s.h) +
                    ", \"h_power\": " + std::to_string(s.h_power) + ", \"entries\": [";
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    if (i > 0)
      out += ", ";
    out += "{\"node\": " + std::to_string(s.entries[i].first) +
           ", \"weight\": " + format_real(s.entries[i].second) + "}";
  }
  out += "]}\n";
  return out;
}

} // namespace hessrec
