#include "hessrec/mesh/generators.hpp"

#include "hessrec/error.hpp"

#include <cmath>

namespace hessrec {

namespace {

Triangulation square_grid(Pattern pattern, int n) {
  const int side = n + 1;
  std::vector<Point2> nodes;
  std::vector<bool> boundary;
  const auto grid = [side](int i, int j) { return j * side + i; };

  for (int j = 0; j <= n; ++j) {
    for (int i = 0; i <= n; ++i) {
      nodes.push_back({static_cast<double>(i) / n, static_cast<double>(j) / n});
      boundary.push_back(i == 0 || j == 0 || i == n || j == n);
    }
  }

  std::vector<Triangle> tris;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      const int v00 = grid(i, j), v10 = grid(i + 1, j);
      const int v01 = grid(i, j + 1), v11 = grid(i + 1, j + 1);
      if (pattern == Pattern::crisscross) {
        const int c = static_cast<int>(nodes.size());
        nodes.push_back({(i + 0.5) / n, (j + 0.5) / n});
        boundary.push_back(false);
        tris.push_back({v00, v10, c});
        tris.push_back({v10, v11, c});
        tris.push_back({v11, v01, c});
        tris.push_back({v01, v00, c});
        continue;
      }
      bool rising = true;
      if (pattern == Pattern::chevron)
        rising = i % 2 == 0;
      else if (pattern == Pattern::unionjack)
        rising = (i + j) % 2 == 0;
      if (rising) {
        tris.push_back({v00, v10, v11});
        tris.push_back({v00, v11, v01});
      } else {
        tris.push_back({v00, v10, v01});
        tris.push_back({v10, v11, v01});
      }
    }
  }
  return Triangulation(std::move(nodes), std::move(tris), std::move(boundary), pattern);
}

int equilateral_rows(int n) {
  int m = static_cast<int>(std::floor(2.0 * n / std::sqrt(3.0)));
  while (m > 0 && std::sqrt(3.0) / 2.0 * m / n > 1.0)
    --m;
  return m;
}

Triangulation equilateral(int n) {
  const int m = equilateral_rows(n);
  const double row_height = std::sqrt(3.0) / 2.0 / n;
  std::vector<Point2> nodes;
  std::vector<bool> boundary;
  std::vector<int> row_start;

  for (int r = 0; r <= m; ++r) {
    row_start.push_back(static_cast<int>(nodes.size()));
    const double y = r * row_height;
    const bool edge_row = r == 0 || r == m;
    if (r % 2 == 0) {
      for (int i = 0; i <= n; ++i) {
        nodes.push_back({static_cast<double>(i) / n, y});
        boundary.push_back(edge_row || i == 0 || i == n);
      }
    } else {
      nodes.push_back({0.0, y});
      boundary.push_back(true);
      for (int i = 0; i < n; ++i) {
        nodes.push_back({(i + 0.5) / n, y});
        boundary.push_back(edge_row);
      }
      nodes.push_back({1.0, y});
      boundary.push_back(true);
    }
  }

  std::vector<Triangle> tris;
  for (int r = 0; r < m; ++r) {
    const int lo = row_start[static_cast<std::size_t>(r)];
    const int up = row_start[static_cast<std::size_t>(r) + 1];
    if (r % 2 == 0) {
      // lower row: n+1 nodes at i/n; upper row: 0, (i+1/2)/n, 1
      tris.push_back({lo, up + 1, up});
      for (int i = 0; i < n; ++i)
        tris.push_back({lo + i, lo + i + 1, up + i + 1});
      for (int i = 0; i + 1 < n; ++i)
        tris.push_back({lo + i + 1, up + i + 2, up + i + 1});
      tris.push_back({lo + n, up + n + 1, up + n});
    } else {
      tris.push_back({lo, lo + 1, up});
      for (int i = 0; i < n; ++i)
        tris.push_back({lo + i + 1, up + i + 1, up + i});
      for (int i = 0; i + 1 < n; ++i)
        tris.push_back({lo + i + 1, lo + i + 2, up + i + 1});
      tris.push_back({lo + n, lo + n + 1, up + n});
    }
  }
  return Triangulation(std::move(nodes), std::move(tris), std::move(boundary),
                       Pattern::equilateral);
}

} // namespace

double equilateral_height(int n) { return std::sqrt(3.0) / 2.0 * equilateral_rows(n) / n; }

Triangulation generate_uniform(Pattern pattern, int n) {
  if (n < 2)
    throw InvalidInput("uniform mesh needs n >= 2 to have an interior node");
  switch (pattern) {
  case Pattern::regular:
  case Pattern::chevron:
  case Pattern::crisscross:
  case Pattern::unionjack:
    return square_grid(pattern, n);
  case Pattern::equilateral:
    return equilateral(n);
  case Pattern::imported:
    break;
  }
  throw InvalidInput("unknown uniform pattern");
}

} // namespace hessrec
