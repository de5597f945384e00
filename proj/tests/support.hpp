// Shared fixtures and brute-force oracles for the test suites.

#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "kisskit/io.hpp"
#include "kisskit/kiss5.hpp"
#include "kisskit/kiss6.hpp"
#include "kisskit/kiss9.hpp"
#include "kisskit/pointset.hpp"

namespace testing {

using namespace kisskit;

inline std::string data_path(const std::string& file) { return std::string(KISSKIT_DATA_DIR) + "/" + file; }

inline PointConfiguration fixture(const std::string& stem) {
  return read_kcfg(read_file(data_path(stem + ".kcfg")), stem);
}

inline std::vector<PointConfiguration> all_built() {
  std::vector<PointConfiguration> out;
  for (Kind5 k : all_kinds5()) out.push_back(build5(k));
  for (const char* n : {"e6", "leech6", "cs6a", "cs6b"}) out.push_back(build_named6(n));
  out.push_back(build_kissing9(build_code_table()));
  out.push_back(build_modified9());
  return out;
}

// Coordinate-wise inner product without the library's dot.
inline QuadScalar naive_dot(const Vec& x, const Vec& y) {
  QuadScalar s;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

// Kissing condition checked on every ordered pair.
inline bool brute_force_kissing(const PointConfiguration& c) {
  const QuadScalar n = naive_dot(c[0], c[0]);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (naive_dot(c[i], c[i]) != n) return false;
    for (std::size_t j = 0; j < c.size(); ++j)
      if (i != j && naive_dot(c[i], c[j]) * QuadScalar(2) > n) return false;
  }
  return true;
}

inline std::map<std::string, std::uint64_t> brute_force_spectrum(const PointConfiguration& c) {
  std::map<std::string, std::uint64_t> m;
  const QuadScalar n = naive_dot(c[0], c[0]);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) ++m[(naive_dot(c[i], c[j]) / n).str()];
  return m;
}

inline std::map<std::string, std::uint64_t> as_map(const Spectrum& s) {
  std::map<std::string, std::uint64_t> m;
  for (const auto& e : s) m[e.t.str()] = e.count;
  return m;
}

// Random coordinate permutation with random signs, and shuffled point order.
inline PointConfiguration random_signed_permutation(const PointConfiguration& c, std::mt19937& rng) {
  std::vector<std::size_t> perm(c.dim());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> signs(c.dim());
  for (auto& s : signs) s = (rng() & 1) ? 1 : -1;
  std::vector<Vec> pts;
  for (const auto& p : c.points()) {
    Vec q(c.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) q[perm[i]] = p[i] * QuadScalar(signs[i]);
    pts.push_back(q);
  }
  std::shuffle(pts.begin(), pts.end(), rng);
  return PointConfiguration(c.name() + "'", c.dim(), std::move(pts));
}

}  // namespace testing
