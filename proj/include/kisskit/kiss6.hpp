// Deep holes of the five-dimensional configurations and the 72-point
// six-dimensional extensions built from them.
//
// Holes sit on the same sphere as the configuration (squared norm 2), with
// coordinates that are rational multiples of sqrt(10) = 5 sqrt(2/5).  Two
// holes can share a six-dimensional layer iff their inner product is at most
// 2/5; a layer needs 16 of them.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kisskit/kiss5.hpp"
#include "kisskit/pointset.hpp"

namespace kisskit {

struct HoleSet {
  Kind5 base = Kind5::D5;
  PointConfiguration holes;   // radical 10
  std::vector<std::string> tags;  // family of each hole
};

HoleSet holes_for(Kind5 kind);

struct HoleReport {
  bool valid = false;
  std::vector<std::size_t> bad_norms;  // hole indices
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // (point, hole)
};

/// Every hole has squared norm 2 and inner product at most 2 sqrt(2/5) with
/// every configuration point.
HoleReport verify_holes(const PointConfiguration& config, const HoleSet& holes);

using HoleSubset = std::vector<int>;

/// Every 16-subset of holes with pairwise inner products <= 2/5, each sorted,
/// list sorted.  Exhaustive clique search.
std::vector<HoleSubset> hole_subsets_16(const HoleSet& holes, Exec exec = Exec::Parallel);

/// Scaled bottom holes at height -sqrt(3)/2, the configuration at 0 and scaled
/// top holes at sqrt(3)/2.  Coordinates lie in Q(sqrt 3).
PointConfiguration extend_6d(const PointConfiguration& config5, const HoleSet& holes,
                             const HoleSubset& bottom, const HoleSubset& top,
                             std::string name = "ext6");

struct Extension6 {
  std::size_t bottom = 0;  // index into subsets
  std::size_t top = 0;
  PointConfiguration config;
};

struct Classification6 {
  std::vector<HoleSubset> subsets;
  std::vector<Extension6> extensions;  // every ordered pair
  /// Isometry classes as indices into `extensions`, ordered by first member.
  std::vector<std::vector<std::size_t>> classes;
};

Classification6 classify_6d_extensions(Kind5 kind);

/// Index of the subset containing the hole sqrt(2/5)(1,1,1,1,1).
std::size_t all_plus_subset(const HoleSet& holes, const std::vector<HoleSubset>& subsets);
/// Index of the subset whose complement is not a subset, if any.
std::optional<std::size_t> unpaired_subset(const HoleSet& holes,
                                           const std::vector<HoleSubset>& subsets);

/// The named six-dimensional configurations: e6, leech6, cs6a, cs6b.
PointConfiguration build_named6(const std::string& name);

}  // namespace kisskit
