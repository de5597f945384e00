// The four 40-point kissing configurations in five dimensions.
//
// D5 is the root system.  L5, Q5 and R5 come from D5 by replacing one
// four-dimensional layer: L5 swaps the fifth-coordinate-1 layer for a
// half-integer cross polytope, Q5 and R5 replace the coordinate-sum-2 layer
// of D5 and L5 with the mirror image of the coordinate-sum-(-2) layer.

#pragma once

#include <string>
#include <vector>

#include "kisskit/pointset.hpp"

namespace kisskit {

enum class Kind5 { D5, L5, Q5, R5 };

const char* to_string(Kind5 k);
/// "d5", "D5", ... -> Kind5; Parse error otherwise.
Kind5 parse_kind5(const std::string& s);
std::vector<Kind5> all_kinds5();

/// Points of D4 (norm 2) embedded with fifth coordinate `last`.
std::vector<Vec> d4_layer(const QuadScalar& last);
/// The eight points (+-1/2,...,+-1/2, last) with an odd (or even) number of
/// minus signs among the first four coordinates.
std::vector<Vec> half_layer(bool odd, const QuadScalar& last);

PointConfiguration build_d5();
PointConfiguration build_l5();
PointConfiguration build_q5();
PointConfiguration build_r5();
PointConfiguration build5(Kind5 k);

/// The alternative layer surgeries on D5: either or both of the
/// fifth-coordinate +-1 layers replaced by half-integer points of either
/// sign parity.  Each entry is isometric to D5 or L5.
std::vector<PointConfiguration> l5_variants();

struct TrialityReport {
  bool orthogonal = false;
  /// A maps cross polytope i onto cross polytope i+1 (mod 3).
  bool cycles = false;
  /// A^3 fixes each cross polytope as a set.
  bool cube_identity = false;
  bool ok() const { return orthogonal && cycles && cube_identity; }
};

Mat triality_matrix();
/// The integer, odd half-integer and even half-integer cross polytopes in
/// R^4, in that order.
std::vector<std::vector<Vec>> d4_cross_polytopes();
TrialityReport triality_check();

}  // namespace kisskit
