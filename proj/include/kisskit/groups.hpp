// Permutation groups of point configurations.
//
// Automorphisms are point permutations preserving the Gram matrix; for a
// spanning configuration they correspond one-to-one to orthogonal maps that
// preserve the point set.  Generators come from the backtracking kernel in
// search.hpp, and the group order from a Schreier-Sims stabilizer chain.

#pragma once

#include <optional>
#include <vector>

#include "kisskit/exact.hpp"
#include "kisskit/linalg.hpp"
#include "kisskit/pointset.hpp"

namespace kisskit {

/// images[i] is the image of point i.
using Perm = std::vector<int>;

Perm identity_perm(std::size_t n);
/// (a * b)(i) = a(b(i)): apply b first.
Perm compose(const Perm& a, const Perm& b);
Perm invert(const Perm& p);
bool is_identity(const Perm& p);
std::string render(const Perm& p);

/// Base and strong generating set, built by incremental Schreier-Sims.
class StabilizerChain {
 public:
  StabilizerChain() = default;
  StabilizerChain(std::size_t degree, const std::vector<Perm>& generators);

  std::size_t degree() const { return degree_; }
  Integer order() const;
  bool contains(const Perm& g) const;
  const std::vector<int>& base() const { return base_; }
  std::vector<std::size_t> orbit_sizes() const;

 private:
  struct Level {
    std::vector<Perm> gens;
    std::vector<Perm> transversal;  // indexed by point; empty if outside orbit
    std::vector<int> orbit;
  };
  void rebuild_orbit(std::size_t level);
  std::pair<Perm, std::size_t> strip(Perm g, std::size_t from) const;

  std::size_t degree_ = 0;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

struct AutGroup {
  std::size_t degree = 0;
  std::vector<Perm> generators;
  Integer order;
  StabilizerChain chain;
};

/// Group generated by `generators`, order from the stabilizer chain.
AutGroup group_from_generators(std::size_t degree, std::vector<Perm> generators);

/// Full automorphism group of a spanning configuration.
AutGroup automorphisms(const PointConfiguration& config);

/// Every element of the group by closure; nullopt if there are more than
/// `limit`.  Sorted.
std::optional<std::vector<Perm>> enumerate_elements(const AutGroup& group, std::size_t limit);

std::vector<std::vector<int>> orbits(std::size_t degree, const std::vector<Perm>& generators);
bool is_transitive(const AutGroup& group, std::size_t m);

/// The linear map A with A*src[i] = dst[i] for all i.  src must span.
Mat linear_map_from_images(const std::vector<Vec>& src, const std::vector<Vec>& dst);

/// The orthogonal matrix realizing a Gram-preserving permutation.
Mat realize_orthogonal(const PointConfiguration& config, const Perm& perm);

/// The point permutation induced by x -> A x; NotAnAutomorphism if some
/// image is not a point of the configuration.
Perm point_permutation(const PointConfiguration& config, const Mat& a);

/// Every injection preserving the Gram matrix, in lexicographic order of
/// images.
std::vector<Perm> embeddings(const PointConfiguration& pattern, const PointConfiguration& host);

/// Orbits of the injections under post-composition with the group; each
/// class lists indices into `maps`, classes ordered by smallest member.
std::vector<std::vector<std::size_t>> equivalent_mod_aut(const std::vector<Perm>& maps,
                                                         const AutGroup& group);

}  // namespace kisskit
