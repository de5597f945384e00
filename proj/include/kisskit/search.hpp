// Backtracking search for Gram-preserving point maps.
//
// Both isometry testing and automorphism/embedding enumeration run on this
// kernel.  Gram entries are first interned to small integers so the inner
// loop never touches big rationals.  Each assignment pattern[p] -> host[h]
// refines a cell partition of both sides by the inner product with the
// newly assigned point; a branch dies as soon as some cell holds more
// pattern points than host points (or a different number, for bijections).

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "kisskit/pointset.hpp"

namespace kisskit {

struct IntGram {
  std::size_t m = 0;
  std::vector<std::int32_t> ids;
  std::int32_t operator()(std::size_t i, std::size_t j) const { return ids[i * m + j]; }
};

/// Interns the entries of both matrices with one shared dictionary.
std::pair<IntGram, IntGram> encode(const GramMatrix& a, const GramMatrix& b);
IntGram encode(const GramMatrix& a);

class EmbeddingSearch {
 public:
  /// Receives pattern->host images; return false to stop the search.
  using Visitor = std::function<bool(std::span<const int>)>;

  EmbeddingSearch(const IntGram& pattern, const IntGram& host, bool bijective);

  /// Enumerates every Gram-preserving injection extending `prefix`
  /// (pattern index, host index).  Returns the number of maps visited.
  std::uint64_t run(std::span<const std::pair<int, int>> prefix, const Visitor& visit) const;

  /// Convenience: first map extending prefix, or empty.
  std::vector<int> first(std::span<const std::pair<int, int>> prefix = {}) const;

 private:
  struct State;
  bool assign(State& s, int p, int h) const;
  bool search(State& s, const Visitor& visit, std::uint64_t& visited) const;

  const IntGram& pattern_;
  const IntGram& host_;
  bool bijective_;
  std::vector<std::int32_t> initial_p_;
  std::vector<std::int32_t> initial_h_;
};

}  // namespace kisskit
