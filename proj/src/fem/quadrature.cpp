#include "hessrec/fem/quadrature.hpp"

#include <cmath>

namespace hessrec {

namespace {

void add_orbit3(TriangleQuadrature& q, double a, double w) {
  const double b = 1.0 - 2.0 * a;
  q.points.push_back({a, a});
  q.points.push_back({b, a});
  q.points.push_back({a, b});
  q.weights.insert(q.weights.end(), 3, w);
}

void add_orbit6(TriangleQuadrature& q, double a, double b, double w) {
  const double c = 1.0 - a - b;
  q.points.push_back({a, b});
  q.points.push_back({b, a});
  q.points.push_back({b, c});
  q.points.push_back({c, b});
  q.points.push_back({c, a});
  q.points.push_back({a, c});
  q.weights.insert(q.weights.end(), 6, w);
}

TriangleQuadrature make_seven_point() {
  TriangleQuadrature q;
  q.degree = 5;
  const double s15 = std::sqrt(15.0);
  q.points.push_back({1.0 / 3.0, 1.0 / 3.0});
  q.weights.push_back(9.0 / 40.0);
  add_orbit3(q, (6.0 - s15) / 21.0, (155.0 - s15) / 1200.0);
  add_orbit3(q, (6.0 + s15) / 21.0, (155.0 + s15) / 1200.0);
  return q;
}

// Dunavant degree-6 rule.
TriangleQuadrature make_twelve_point() {
  TriangleQuadrature q;
  q.degree = 6;
  add_orbit3(q, 0.063089014491502228340331602870819157, 0.050844906370206816920936809106869055);
  add_orbit3(q, 0.24928674517091042129163855310701908, 0.11678627572637936602528961138557944);
  add_orbit6(q, 0.053145049844816947353249671631398147, 0.31035245103378440541660773395655215,
             0.082851075618373575193553456420442225);
  return q;
}

} // namespace

const TriangleQuadrature& seven_point_rule() {
  static const TriangleQuadrature rule = make_seven_point();
  return rule;
}

const TriangleQuadrature& twelve_point_rule() {
  static const TriangleQuadrature rule = make_twelve_point();
  return rule;
}

const TriangleQuadrature& quadrature_for_order(int k) {
  return k <= 1 ? seven_point_rule() : twelve_point_rule();
}

} // namespace hessrec
