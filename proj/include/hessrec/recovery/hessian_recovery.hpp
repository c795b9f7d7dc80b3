#pragma once

#include "hessrec/recovery/gradient_recovery.hpp"

#include <optional>
#include <string_view>

namespace hessrec {

/// Hessian recovery methods.
///   ppr_ppr  PPR applied to both components of the PPR gradient
///   zz_zz    weighted average applied to the weighted-average gradient
///   zz_ppr   weighted average applied to the PPR gradient
///   qf       second derivatives of the quadratic least-squares fit at the node
/// Only ppr_ppr is defined for element orders above 1.
enum class RecoveryMethod { ppr_ppr, zz_zz, zz_ppr, qf };

/// "ppr-ppr", "zz-zz", "zz-ppr", "qf".
std::string_view to_string(RecoveryMethod m);
/// Column-safe name: "ppr_ppr", "zz_zz", "zz_ppr", "qf".
std::string_view column_name(RecoveryMethod m);
/// Accepts both spellings.
std::optional<RecoveryMethod> parse_method(std::string_view name);

bool method_supports_order(RecoveryMethod m, int order);

/// Recovered Hessian components as sparse operators on nodal values.
struct HessianOperator {
  SparseMatrix xx;
  SparseMatrix xy;
  SparseMatrix yx;
  SparseMatrix yy;

  /// 0: xx, 1: xy, 2: yx, 3: yy.
  const SparseMatrix& component(int c) const;
};

/// Hessian recovery on one space.
///
/// Composed methods use a first-stage gradient recovery G and a second-stage
/// recovery R:  xx = R_x(G_x u), xy = R_y(G_x u), yx = R_x(G_y u),
/// yy = R_y(G_y u). The result is never symmetrized.
class HessianRecovery {
public:
  /// Throws InvalidInput if the method is not defined for the space's order.
  HessianRecovery(const FESpace& space, RecoveryMethod method);

  RecoveryMethod method() const { return method_; }

  /// First-stage gradient (PPR for ppr_ppr, zz_ppr and qf).
  const GradientOperator& first_stage() const { return first_; }

  /// 4-component field (xx, xy, yx, yy), computed stage by stage.
  Field apply(const Field& u) const;

  /// Composite operators, e.g. xx = R_x * G_x.
  HessianOperator assemble_operator() const;

private:
  RecoveryMethod method_;
  GradientOperator first_;
  GradientOperator second_;
  HessianOperator direct_; // qf only
};

Field recover_hessian(const Field& u, RecoveryMethod method);

/// H_h u = (G_h(G_h^x u), G_h(G_h^y u)) with PPR G_h.
Field ppr_hessian(const Field& u);

} // namespace hessrec
