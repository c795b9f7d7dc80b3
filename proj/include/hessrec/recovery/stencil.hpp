#pragma once

#include "hessrec/recovery/hessian_recovery.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hessrec {

enum class StencilComponent { gx, gy, hxx, hxy, hyx, hyy };

std::string_view to_string(StencilComponent c);
std::optional<StencilComponent> parse_component(std::string_view name);

/// Finite-difference weights a linear recovery operator induces at one node.
struct Stencil {
  int center = -1;
  StencilComponent component = StencilComponent::hxx;
  double h = 0.0;
  /// 1 for gradient components, 2 for Hessian components.
  int h_power = 0;
  /// (node, weight), ascending by node.
  std::vector<std::pair<int, double>> entries;

  double apply(const Eigen::VectorXd& nodal_values) const;
  double weight_sum() const;
  /// Weight of a node, 0 if absent.
  double weight(int node) const;
};

/// Row `node` of the requested operator. Weights with |w| <= 1e-12 max|w|
/// are dropped (cancellation residue of the sparse products).
Stencil extract_stencil(const HessianRecovery& recovery, const FESpace& space, int node,
                        StencilComponent component);
Stencil extract_stencil(const FESpace& space, RecoveryMethod method, int node,
                        StencilComponent component);

/// Largest d such that all four Hessian stencils at `node` reproduce the
/// exact second derivatives of every monomial ((x-x_z)/h)^a ((y-y_z)/h)^b
/// with a+b <= d, within 1e-9 after scaling by h^2. Scans up to max_degree.
int verify_exactness_degree(const FESpace& space, RecoveryMethod method, int node,
                            int max_degree = 10);
int verify_exactness_degree(const HessianOperator& op, const FESpace& space, int node,
                            int max_degree = 10);

/// DOF node closest to p (lowest index on ties).
int nearest_node(const DofMap& dofs, Point2 p);

/// {"center": .., "component": .., "h": .., "h_power": .., "entries": [{"node": .., "weight": ..}]}
/// with reals at 17 significant digits.
std::string to_json(const Stencil& s);

} // namespace hessrec
