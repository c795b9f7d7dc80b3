#include "hessrec/recovery/polynomial.hpp"

#include "hessrec/error.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <string>

namespace hessrec {

int monomial_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

std::vector<std::array<int, 2>> monomial_exponents(int degree) {
  std::vector<std::array<int, 2>> out;
  out.reserve(static_cast<std::size_t>(monomial_count(degree)));
  for (int d = 0; d <= degree; ++d)
    for (int b = 0; b <= d; ++b)
      out.push_back({d - b, b});
  return out;
}

namespace {

// c * s^a t^b with negative exponents treated as zero terms
double power_term(double s, int a, double t, int b) {
  if (a < 0 || b < 0)
    return 0.0;
  double v = 1.0;
  for (int i = 0; i < a; ++i)
    v *= s;
  for (int i = 0; i < b; ++i)
    v *= t;
  return v;
}

double falling(int a, int m) {
  double f = 1.0;
  for (int i = 0; i < m; ++i)
    f *= a - i;
  return f;
}

Eigen::VectorXd derivative_values(int degree, double s, double t, int ds, int dt) {
  const auto exps = monomial_exponents(degree);
  Eigen::VectorXd out(static_cast<Eigen::Index>(exps.size()));
  for (std::size_t i = 0; i < exps.size(); ++i) {
    const int a = exps[i][0], b = exps[i][1];
    out[static_cast<Eigen::Index>(i)] =
        falling(a, ds) * falling(b, dt) * power_term(s, a - ds, t, b - dt);
  }
  return out;
}

Eigen::MatrixXd design_matrix(std::span<const Point2> samples, Point2 center, double scale,
                              int degree) {
  Eigen::MatrixXd a(static_cast<Eigen::Index>(samples.size()), monomial_count(degree));
  for (std::size_t i = 0; i < samples.size(); ++i)
    a.row(static_cast<Eigen::Index>(i)) =
        monomial_values(degree, (samples[i].x - center.x) / scale,
                        (samples[i].y - center.y) / scale)
            .transpose();
  return a;
}

double patch_radius(std::span<const Point2> samples, Point2 center) {
  double r = 0.0;
  for (const Point2& p : samples)
    r = std::max(r, distance(p, center));
  return r;
}

bool full_rank(const Eigen::MatrixXd& a) {
  if (a.rows() < a.cols())
    return false;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(a).singularValues();
  return sv.size() > 0 && sv[sv.size() - 1] > kRankTolerance * sv[0];
}

} // namespace

Eigen::VectorXd monomial_values(int degree, double s, double t) {
  return derivative_values(degree, s, t, 0, 0);
}

Eigen::VectorXd monomial_derivatives(int degree, double s, double t, int dir) {
  return derivative_values(degree, s, t, dir == 0 ? 1 : 0, dir == 0 ? 0 : 1);
}

Eigen::VectorXd monomial_second_derivatives(int degree, double s, double t, int dir1, int dir2) {
  const int ds = (dir1 == 0) + (dir2 == 0);
  return derivative_values(degree, s, t, ds, 2 - ds);
}

bool has_full_rank(std::span<const Point2> samples, Point2 center, int degree) {
  if (static_cast<int>(samples.size()) < monomial_count(degree))
    return false;
  const double scale = patch_radius(samples, center);
  if (!(scale > 0.0))
    return false;
  return full_rank(design_matrix(samples, center, scale, degree));
}

LeastSquaresFit::LeastSquaresFit(std::span<const Point2> samples, Point2 center, int degree)
    : center_(center), scale_(patch_radius(samples, center)), degree_(degree) {
  if (degree < 0)
    throw InvalidInput("fit degree must be nonnegative");
  if (static_cast<int>(samples.size()) < monomial_count(degree) || !(scale_ > 0.0))
    throw RankDeficient("least-squares fit of degree " + std::to_string(degree) + " needs " +
                        std::to_string(monomial_count(degree)) + " sampling points, got " +
                        std::to_string(samples.size()));
  const Eigen::MatrixXd a = design_matrix(samples, center, scale_, degree);
  if (!full_rank(a))
    throw RankDeficient("least-squares design matrix is rank deficient (" +
                        std::to_string(samples.size()) + " points, degree " +
                        std::to_string(degree) + ")");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  map_ = qr.solve(Eigen::MatrixXd::Identity(a.rows(), a.rows()));
}

Eigen::RowVectorXd LeastSquaresFit::gradient_weights(Point2 at, int dir) const {
  const Eigen::VectorXd d = monomial_derivatives(degree_, (at.x - center_.x) / scale_,
                                                 (at.y - center_.y) / scale_, dir);
  return d.transpose() * map_ / scale_;
}

Eigen::RowVectorXd LeastSquaresFit::second_derivative_weights(Point2 at, int dir1,
                                                              int dir2) const {
  const Eigen::VectorXd d = monomial_second_derivatives(
      degree_, (at.x - center_.x) / scale_, (at.y - center_.y) / scale_, dir1, dir2);
  return d.transpose() * map_ / (scale_ * scale_);
}

double PolyFit::value(Point2 p) const {
  return monomial_values(degree, (p.x - center.x) / scale, (p.y - center.y) / scale).dot(coeffs);
}

Eigen::Vector2d PolyFit::gradient(Point2 p) const {
  const double s = (p.x - center.x) / scale, t = (p.y - center.y) / scale;
  return {monomial_derivatives(degree, s, t, 0).dot(coeffs) / scale,
          monomial_derivatives(degree, s, t, 1).dot(coeffs) / scale};
}

Eigen::Matrix2d PolyFit::hessian(Point2 p) const {
  const double s = (p.x - center.x) / scale, t = (p.y - center.y) / scale;
  const double s2 = scale * scale;
  Eigen::Matrix2d h;
  h(0, 0) = monomial_second_derivatives(degree, s, t, 0, 0).dot(coeffs) / s2;
  h(0, 1) = monomial_second_derivatives(degree, s, t, 0, 1).dot(coeffs) / s2;
  h(1, 0) = h(0, 1);
  h(1, 1) = monomial_second_derivatives(degree, s, t, 1, 1).dot(coeffs) / s2;
  return h;
}

PolyFit fit_polynomial(std::span<const Point2> samples, std::span<const double> values,
                       Point2 center, int degree) {
  if (samples.size() != values.size())
    throw InvalidInput("sample and value counts differ");
  Eigen::VectorXd v(static_cast<Eigen::Index>(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!std::isfinite(values[i]))
      throw InvalidInput("non-finite sample value");
    v[static_cast<Eigen::Index>(i)] = values[i];
  }
  const LeastSquaresFit fit(samples, center, degree);
  return {center, fit.scale(), degree, fit.coefficient_map() * v};
}

PolyFit fit_polynomial(const DofMap& dofs, const Patch& patch, std::span<const double> values,
                       int degree) {
  if (values.size() != dofs.dof_count())
    throw InvalidInput("value count does not match dof count");
  std::vector<Point2> samples;
  std::vector<double> local;
  for (int d : patch.member_nodes) {
    samples.push_back(dofs.coord(d));
    local.push_back(values[static_cast<std::size_t>(d)]);
  }
  return fit_polynomial(samples, local, dofs.coord(patch.center), degree);
}

} // namespace hessrec
