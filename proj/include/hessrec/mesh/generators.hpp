#pragma once

#include "hessrec/mesh/triangulation.hpp"

namespace hessrec {

/// Uniform triangulation of the unit square with n cells per side.
///
/// Vertices are numbered lexicographically by (y, x); criss-cross cell centers
/// are appended after the grid vertices. Diagonals:
///   regular     all cells split along (1,1);
///   chevron     even columns (1,1), odd columns (1,-1);
///   unionjack   (1,1) when i+j is even, (1,-1) otherwise;
///   crisscross  both diagonals through an added center node.
/// The equilateral pattern uses edge length 1/n and m = floor(2n/sqrt(3)) rows,
/// covering [0,1] x [0, m*sqrt(3)/(2n)]; odd rows are closed at x = 0 and x = 1
/// by half triangles.
///
/// Throws InvalidInput for n < 2 or Pattern::imported.
Triangulation generate_uniform(Pattern pattern, int n);

/// Height of the rectangle covered by the equilateral pattern.
double equilateral_height(int n);

} // namespace hessrec
