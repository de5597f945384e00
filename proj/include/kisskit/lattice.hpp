// Exact lattice tools: short-vector enumeration, coordinates in a basis and
// Hermite normal form.
//
// Enumeration writes |c + z B|^2 as sum_i d_i (x_i + sum_{j>i} mu_ji x_j)^2
// with x = z + y, y the coordinates of c, and walks the integers outward
// from the vertex of each one-dimensional parabola.  No square roots are
// taken, so the search is exhaustive by construction.

#pragma once

#include <optional>
#include <vector>

#include "kisskit/linalg.hpp"

namespace kisskit {

struct LatticePoint {
  std::vector<long> z;  // coefficients in the basis
  Vec v;                // c + z B
  QuadScalar norm2;
};

/// Every lattice point of c + Lambda with squared norm <= bound.  Basis rows
/// must be linearly independent and span the ambient space.
std::vector<LatticePoint> enumerate_lattice(const Mat& basis, const Vec& c,
                                            const QuadScalar& bound);

/// y with y B = v; DegenerateBasis if B is singular.
Vec coordinates(const Mat& basis, const Vec& v);
/// v lies in the lattice spanned by the basis rows.
bool in_lattice(const Mat& basis, const Vec& v);

/// Row Hermite normal form of an integer matrix; zero rows dropped.
std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows);

}  // namespace kisskit
