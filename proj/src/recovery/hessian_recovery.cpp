#include "hessrec/recovery/hessian_recovery.hpp"

#include "hessrec/error.hpp"
#include "hessrec/recovery/polynomial.hpp"

#include <string>

namespace hessrec {

std::string_view to_string(RecoveryMethod m) {
  switch (m) {
  case RecoveryMethod::ppr_ppr: return "ppr-ppr";
  case RecoveryMethod::zz_zz: return "zz-zz";
  case RecoveryMethod::zz_ppr: return "zz-ppr";
  case RecoveryMethod::qf: return "qf";
  }
  return "unknown";
}

std::string_view column_name(RecoveryMethod m) {
  switch (m) {
  case RecoveryMethod::ppr_ppr: return "ppr_ppr";
  case RecoveryMethod::zz_zz: return "zz_zz";
  case RecoveryMethod::zz_ppr: return "zz_ppr";
  case RecoveryMethod::qf: return "qf";
  }
  return "unknown";
}

std::optional<RecoveryMethod> parse_method(std::string_view name) {
  for (RecoveryMethod m : {RecoveryMethod::ppr_ppr, RecoveryMethod::zz_zz,
                           RecoveryMethod::zz_ppr, RecoveryMethod::qf}) {
    if (name == to_string(m) || name == column_name(m))
      return m;
  }
  return std::nullopt;
}

bool method_supports_order(RecoveryMethod m, int order) {
  return m == RecoveryMethod::ppr_ppr || order == 1;
}

const SparseMatrix& HessianOperator::component(int c) const {
  switch (c) {
  case 0: return xx;
  case 1: return xy;
  case 2: return yx;
  case 3: return yy;
  default: throw InvalidInput("Hessian component index must be 0..3");
  }
}

namespace {

HessianOperator quadratic_fit_operator(const FESpace& space) {
  const DofMap& dofs = space.dofs();
  const std::size_t nv = space.mesh().node_count();
  std::vector<Eigen::Triplet<double>> txx, txy, tyy;
  std::vector<Point2> samples;
  for (std::size_t v = 0; v < nv; ++v) {
    const int z = static_cast<int>(v);
    const Patch patch = build_patch(dofs, z, 2);
    samples.clear();
    for (int d : patch.member_nodes)
      samples.push_back(dofs.coord(d));
    const LeastSquaresFit fit(samples, dofs.coord(z), 2);
    const Eigen::RowVectorXd wxx = fit.second_derivative_weights(dofs.coord(z), 0, 0);
    const Eigen::RowVectorXd wxy = fit.second_derivative_weights(dofs.coord(z), 0, 1);
    const Eigen::RowVectorXd wyy = fit.second_derivative_weights(dofs.coord(z), 1, 1);
    for (std::size_t j = 0; j < patch.member_nodes.size(); ++j) {
      const auto jj = static_cast<Eigen::Index>(j);
      txx.emplace_back(z, patch.member_nodes[j], wxx[jj]);
      txy.emplace_back(z, patch.member_nodes[j], wxy[jj]);
      tyy.emplace_back(z, patch.member_nodes[j], wyy[jj]);
    }
  }
  const auto n = static_cast<Eigen::Index>(nv);
  HessianOperator op;
  op.xx.resize(n, n);
  op.xx.setFromTriplets(txx.begin(), txx.end());
  op.xy.resize(n, n);
  op.xy.setFromTriplets(txy.begin(), txy.end());
  op.yx = op.xy;
  op.yy.resize(n, n);
  op.yy.setFromTriplets(tyy.begin(), tyy.end());
  return op;
}

} // namespace

HessianRecovery::HessianRecovery(const FESpace& space, RecoveryMethod method) : method_(method) {
  if (!method_supports_order(method, space.order()))
    throw InvalidInput("recovery method " + std::string(to_string(method)) +
                       " is defined for linear elements only");
  switch (method) {
  case RecoveryMethod::ppr_ppr:
    first_ = PprRecovery(space).gradient();
    second_ = first_;
    break;
  case RecoveryMethod::zz_zz:
    first_ = weighted_average_operator(space);
    second_ = first_;
    break;
  case RecoveryMethod::zz_ppr:
    first_ = PprRecovery(space).gradient();
    second_ = weighted_average_operator(space);
    break;
  case RecoveryMethod::qf:
    first_ = PprRecovery(space).gradient();
    direct_ = quadratic_fit_operator(space);
    break;
  }
}

Field HessianRecovery::apply(const Field& u) const {
  if (u.components() != 1)
    throw InvalidInput("Hessian recovery needs a scalar field");
  const Eigen::VectorXd v = u.values().col(0);
  Eigen::MatrixXd h(v.size(), 4);
  if (method_ == RecoveryMethod::qf) {
    for (int c = 0; c < 4; ++c)
      h.col(c) = direct_.component(c) * v;
  } else {
    const Eigen::VectorXd gx = first_.dx * v;
    const Eigen::VectorXd gy = first_.dy * v;
    h.col(0) = second_.dx * gx;
    h.col(1) = second_.dy * gx;
    h.col(2) = second_.dx * gy;
    h.col(3) = second_.dy * gy;
  }
  return Field(u.space_ptr(), std::move(h));
}

HessianOperator HessianRecovery::assemble_operator() const {
  if (method_ == RecoveryMethod::qf)
    return direct_;
  HessianOperator op;
  op.xx = second_.dx * first_.dx;
  op.xy = second_.dy * first_.dx;
  op.yx = second_.dx * first_.dy;
  op.yy = second_.dy * first_.dy;
  return op;
}

Field recover_hessian(const Field& u, RecoveryMethod method) {
  return HessianRecovery(u.space(), method).apply(u);
}

Field ppr_hessian(const Field& u) {
  const PprRecovery ppr(u.space());
  const Field g = apply(ppr.gradient(), u);
  const Field gx(u.space_ptr(), Eigen::VectorXd(g.component(0)));
  const Field gy(u.space_ptr(), Eigen::VectorXd(g.component(1)));
  const Field hx = apply(ppr.gradient(), gx);
  const Field hy = apply(ppr.gradient(), gy);
  Eigen::MatrixXd h(g.values().rows(), 4);
  h.col(0) = hx.component(0);
  h.col(1) = hx.component(1);
  h.col(2) = hy.component(0);
  h.col(3) = hy.component(1);
  return Field(u.space_ptr(), std::move(h));
}

} // namespace hessrec
