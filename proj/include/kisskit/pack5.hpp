// Five-dimensional periodic packings built from four-colored planar point
// sets.
//
// A site v of color c in the plane carries the fiber {v} x (D3 + t_c), where
// t_c = c (1/2,1/2,1/2) modulo D3.  Sphere radius is sqrt(2)/2, so the
// packing condition is squared distance >= 2 between centers.  Planar
// distances that color pairs must respect: same color 2, adjacent colors
// (differ by 1 mod 4) 5/4, opposite colors 1.

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kisskit/groups.hpp"
#include "kisskit/kiss5.hpp"
#include "kisskit/pointset.hpp"

namespace kisskit {

struct ColoredSite {
  Vec pos;  // two coordinates
  int color = 0;
};

struct ColoredConfig2D {
  std::string name;
  Mat basis;  // two rows of two coordinates
  std::vector<ColoredSite> sites;
};

struct PeriodicPacking {
  std::string name;
  std::size_t dim = 5;
  Mat basis;               // rows generate Lambda
  std::vector<Vec> translates;
  QuadScalar radius2 = Rational(1, 2);
};

/// Translate vectors t_0..t_3 in R^3.
std::vector<Vec> d3_translates();
/// Rows (1,1,0), (1,-1,0), (0,1,-1).
Mat d3_basis();

/// Minimum planar squared distance allowed between two colors.
QuadScalar color_bound(int a, int b);

struct ColoringViolation {
  std::size_t i = 0, j = 0;
  Vec offset;  // lattice vector added to site j
  QuadScalar dist2;
};

struct ColoringReport {
  bool valid = false;
  std::vector<ColoringViolation> violations;
};

ColoringReport validate_coloring(const ColoredConfig2D& cc);

/// InvalidColoring unless the coloring validates.
PeriodicPacking assemble_packing(const ColoredConfig2D& cc);

/// Exact minimal squared distance between distinct centers.
QuadScalar min_distance2(const PeriodicPacking& p, Exec exec = Exec::Parallel);
/// sqrt of min_distance2; RadicalMismatch if that is not in a quadratic field.
QuadScalar min_distance(const PeriodicPacking& p, Exec exec = Exec::Parallel);

/// density = q pi^2 sqrt(2).
struct DensityValue {
  Rational q;
};
DensityValue density(const PeriodicPacking& p);

struct LocalKissing {
  PointConfiguration config;  // neighbors minus the center
  std::optional<Kind5> kind;  // isometry class among D5, L5, Q5, R5
};

/// Neighbors at squared distance exactly 2 from translate `center`.
/// NotTight if the packing has distances below sqrt(2).
LocalKissing local_kissing(const PeriodicPacking& p, std::size_t center);

struct Arrangement {
  char type = '?';  // 'a'..'d'
  /// For a and b: whether the marked neighbors p and q share a color.
  std::optional<bool> pq_same;
  /// Kissing configuration predicted by the arrangement table.
  Kind5 predicted = Kind5::D5;
};

/// Classifies the triangles around a site from neighbor counts at squared
/// distances 1, 5/4 and 2.  UnrecognizedNeighborhood otherwise.
Arrangement vertex_arrangement(const ColoredConfig2D& cc, std::size_t site);

struct PeriodReport {
  std::size_t m = 0;          // translates given
  std::size_t minimal_m = 0;  // after absorbing all periods
  std::size_t periods = 0;    // order of the period group modulo Lambda
  PeriodicPacking reduced;
};

PeriodReport period_minimality(const PeriodicPacking& p);

/// x -> A x + t maps the center set to itself.  NotOrthogonal,
/// LatticeNotPreserved.
bool verify_affine_symmetry(const PeriodicPacking& p, const Mat& a, const Vec& t);

/// The two packings of the periodic table, with their lattice bases and
/// translation vectors.
PeriodicPacking table_packing(Kind5 kind);

struct CosetRow {
  std::string label;     // e.g. "(-r)H"
  std::size_t size = 0;  // elements of G in this coset
  std::size_t translate = 0;
  bool paired_ok = false;       // every element works with its x_i
  bool others_rejected = false;  // and with no other x_j
};

struct CosetReport {
  std::size_t group_order = 0;
  std::size_t subgroup_order = 0;
  std::size_t m = 0;
  std::vector<CosetRow> rows;
  bool ok = false;
};

/// Enumerates G from its generators, splits it into the cosets H_i and checks
/// each against the table translation vectors (Q5 or R5 only).
CosetReport verify_symmetry_coset_table(Kind5 kind);

/// Orthogonal A and t with A P + t = Q as center sets, if the packings are
/// isometric; translate 0 of P is matched against each translate of Q.
struct PackingIsometry {
  Mat a;
  Vec t;
};
std::optional<PackingIsometry> packing_isometry(const PeriodicPacking& p,
                                                const PeriodicPacking& q);
/// Some isometry of the packing maps each translate to every other.
bool is_uniform(const PeriodicPacking& p);

enum class Verdict { Unique, NotUnique, Undetermined };
const char* to_string(Verdict v);

struct PointVerdict {
  Verdict verdict = Verdict::Undetermined;
  std::size_t overlap = 0;  // points in the final overlap
  std::size_t classes = 0;  // embedding classes modulo Aut(K0)
  std::size_t round = 0;    // round in which the verdict became final
};

struct UniquenessReport {
  std::vector<PointVerdict> points;  // indexed like K0
  std::size_t rounds = 0;
  std::size_t unique_count() const;
};

/// Determines neighbor configurations K_v from overlaps with known points,
/// iterating to a fixpoint.
UniquenessReport uniform_uniqueness(const PointConfiguration& k0, Exec exec = Exec::Parallel);

struct GapReport {
  Rational blichfeldt_density;  // 4 * 788.5785
  Rational target;              // 2^13
  Rational margin;
  bool gap = false;
  Integer denominator;  // 12! 2^13 in pi^12 / (12! 2^13)
};

GapReport leech24_gap_check();

/// Built-in colorings: "q5" and "r5" (the uniform packings), "d5" (the root
/// lattice) and "l5m2", "l5m3", "l5m4" (uniform packings with L5 kissing
/// configurations and 2, 3, 4 translates, from square and triangle strips).
ColoredConfig2D builtin_coloring(const std::string& name);

/// SVG drawing of a few fundamental domains.
std::string render_svg(const ColoredConfig2D& cc);

}  // namespace kisskit
