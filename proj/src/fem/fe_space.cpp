#include "hessrec/fem/fe_space.hpp"

#include "hessrec/error.hpp"

#include <cmath>
#include <string>

namespace hessrec {

FESpace::FESpace(std::shared_ptr<const Triangulation> mesh, int order)
    : mesh_(mesh), dofs_(std::move(mesh), order), basis_(order) {}

std::shared_ptr<const FESpace> FESpace::create(Triangulation mesh, int order) {
  return std::make_shared<const FESpace>(std::make_shared<const Triangulation>(std::move(mesh)),
                                         order);
}

Point2 FESpace::map_point(int t, double xi, double eta) const {
  const Triangle& tri = mesh_->triangle(t);
  const Point2 a = mesh_->node(tri[0]), b = mesh_->node(tri[1]), c = mesh_->node(tri[2]);
  return {a.x + xi * (b.x - a.x) + eta * (c.x - a.x), a.y + xi * (b.y - a.y) + eta * (c.y - a.y)};
}

Eigen::Matrix2d FESpace::inverse_jacobian_transpose(int t) const {
  const Triangle& tri = mesh_->triangle(t);
  const Point2 a = mesh_->node(tri[0]), b = mesh_->node(tri[1]), c = mesh_->node(tri[2]);
  Eigen::Matrix2d j;
  j << b.x - a.x, c.x - a.x, b.y - a.y, c.y - a.y;
  return j.inverse().transpose();
}

Field::Field(std::shared_ptr<const FESpace> space, Eigen::MatrixXd values)
    : space_(std::move(space)), values_(std::move(values)) {
  if (!space_)
    throw InvalidInput("field needs a space");
  if (static_cast<std::size_t>(values_.rows()) != space_->dof_count())
    throw InvalidInput("field length " + std::to_string(values_.rows()) +
                       " does not match dof count " + std::to_string(space_->dof_count()));
  if (!values_.allFinite())
    throw InvalidInput("field has non-finite entries");
}

Field::Field(std::shared_ptr<const FESpace> space, const Eigen::VectorXd& values)
    : Field(std::move(space), Eigen::MatrixXd(values)) {}

Eigen::VectorXd Field::evaluate(int t, double xi, double eta) const {
  const Eigen::VectorXd phi = space_->basis().values(xi, eta);
  const auto dofs = space_->dofs().element_dofs(t);
  Eigen::VectorXd out = Eigen::VectorXd::Zero(values_.cols());
  for (std::size_t a = 0; a < dofs.size(); ++a)
    out += phi[static_cast<Eigen::Index>(a)] * values_.row(dofs[a]).transpose();
  return out;
}

Field interpolate(std::shared_ptr<const FESpace> space, const ScalarFunction& u) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(space->dof_count()));
  for (std::size_t i = 0; i < space->dof_count(); ++i) {
    const double value = u(space->dofs().coords()[i]);
    if (!std::isfinite(value))
      throw InvalidInput("interpolated function is not finite at dof " + std::to_string(i));
    v[static_cast<Eigen::Index>(i)] = value;
  }
  return Field(std::move(space), v);
}

} // namespace hessrec
