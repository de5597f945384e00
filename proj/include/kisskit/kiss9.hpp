// The length-9 constant-weight code and the 306-point configurations in R^9.
//
// Coordinates are numbered 1..9 row-major on a 3x3 grid; a codeword is a
// 9-bit mask with bit k-1 set for coordinate k.  Points are stored at squared
// norm 4, so the kissing threshold is <u,v> <= 2.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kisskit/groups.hpp"
#include "kisskit/pointset.hpp"

namespace kisskit {

using Word = std::uint16_t;

struct BinaryCode {
  std::vector<Word> words;
};

/// "110110000" <-> mask; character k is coordinate k+1.
Word parse_word(const std::string& bits);
std::string render_word(Word w);
bool same_words(const BinaryCode& a, const BinaryCode& b);

BinaryCode build_code_table();
/// Nonzero squares and non-squares of F9 = F3(i) and their translates, with
/// a + b i at grid position 3b + a + 1.
BinaryCode build_code_f9();

struct CodeReport {
  bool valid = false;
  std::vector<std::size_t> bad_weights;
  std::vector<std::pair<std::size_t, std::size_t>> overlaps;  // overlap > 2
};
CodeReport code_valid(const BinaryCode& code);

/// Coordinate permutations (degree 9) mapping the word set to itself.
AutGroup code_automorphisms(const BinaryCode& code);
/// All elements of code_automorphisms, sorted.
std::vector<Perm> code_automorphism_elements(const BinaryCode& code);
/// x -> a x + b and x -> a x^3 + b over F9 as coordinate permutations.
std::vector<Perm> affine_semilinear_perms();
/// Action of coordinate permutations on the words (by word index).
std::vector<Perm> word_action(const BinaryCode& code, const std::vector<Perm>& perms);

/// Signs on the support of every word plus the 18 points (+-2, 0, ..., 0).
PointConfiguration build_kissing9(const BinaryCode& code);
/// The eight words through coordinate 1 used by the modified layer.
BinaryCode modified_codewords();
PointConfiguration build_modified9();

/// The stated generators of Aut(modified9) as point permutations: code
/// automorphisms fixing coordinate 1 and the modified layer, sign changes off
/// coordinate 1, and the sign-flip-and-swap map.
std::vector<Perm> modified9_stated_generators(const PointConfiguration& modified9);

struct TriplesReport {
  /// Triples in coordinates 2..9 not contained in any word avoiding
  /// coordinate 1.
  std::vector<Word> consistent;
  /// Every 8-set of consistent triples with pairwise overlap <= 1.
  std::vector<std::vector<Word>> eight_sets;
};
TriplesReport alternative_triples_search();

enum class RieszOutcome { ADominates, BDominates, Equal, IncomparableSameSupport };
const char* to_string(RieszOutcome o);

struct RieszVerdict {
  RieszOutcome outcome = RieszOutcome::Equal;
  std::optional<QuadScalar> decided_at;  // normalized inner product t
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  /// Whether t is the largest inner product occurring in either set.
  bool at_minimal_distance = false;
};

/// Large-s Riesz energy comparison: walk the spectra from the largest inner
/// product (smallest distance) down; fewer pairs at the first difference
/// means lower energy.  Requires equal point counts and squared norms.
RieszVerdict riesz_lex_compare(const PointConfiguration& a, const PointConfiguration& b);

}  // namespace kisskit
