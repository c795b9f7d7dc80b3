#include "hessrec/experiments/catalog.hpp"

#include "hessrec/error.hpp"

#include <cmath>
#include <numbers>

namespace hessrec {

namespace {

std::vector<ExactSolution> build_catalog() {
  using std::numbers::pi;
  std::vector<ExactSolution> out;

  out.push_back({"sinsin",
                 [](const Point2& p) { return std::sin(pi * p.x) * std::sin(pi * p.y); },
                 [](const Point2& p) {
                   return Eigen::Vector2d(pi * std::cos(pi * p.x) * std::sin(pi * p.y),
                                          pi * std::sin(pi * p.x) * std::cos(pi * p.y));
                 },
                 [](const Point2& p) {
                   const double sx = std::sin(pi * p.x), sy = std::sin(pi * p.y);
                   const double cx = std::cos(pi * p.x), cy = std::cos(pi * p.y);
                   const double xy = pi * pi * cx * cy;
                   return Eigen::Vector4d(-pi * pi * sx * sy, xy, xy, -pi * pi * sx * sy);
                 },
                 [](const Point2& p) {
                   return -2.0 * pi * pi * std::sin(pi * p.x) * std::sin(pi * p.y);
                 }});

  out.push_back({"quadratic", [](const Point2& p) { return p.x * p.x + 3.0 * p.x * p.y; },
                 [](const Point2& p) { return Eigen::Vector2d(2.0 * p.x + 3.0 * p.y, 3.0 * p.x); },
                 [](const Point2&) { return Eigen::Vector4d(2.0, 3.0, 3.0, 0.0); },
                 [](const Point2&) { return 2.0; }});

  out.push_back({"cubic", [](const Point2& p) { return p.x * p.x * p.x; },
                 [](const Point2& p) { return Eigen::Vector2d(3.0 * p.x * p.x, 0.0); },
                 [](const Point2& p) { return Eigen::Vector4d(6.0 * p.x, 0.0, 0.0, 0.0); },
                 [](const Point2& p) { return 6.0 * p.x; }});

  out.push_back({"quartic", [](const Point2& p) { return p.x * p.x * p.x * p.x; },
                 [](const Point2& p) { return Eigen::Vector2d(4.0 * p.x * p.x * p.x, 0.0); },
                 [](const Point2& p) { return Eigen::Vector4d(12.0 * p.x * p.x, 0.0, 0.0, 0.0); },
                 [](const Point2& p) { return 12.0 * p.x * p.x; }});
  return out;
}

const std::vector<ExactSolution>& catalog() {
  static const std::vector<ExactSolution> c = build_catalog();
  return c;
}

} // namespace

const ExactSolution& exact_solution(std::string_view id) {
  for (const ExactSolution& s : catalog())
    if (s.id == id)
      return s;
  throw InvalidInput("unknown solution id '" + std::string(id) + "'");
}

std::vector<std::string> catalog_ids() {
  std::vector<std::string> ids;
  for (const ExactSolution& s : catalog())
    ids.push_back(s.id);
  return ids;
}

} // namespace hessrec
