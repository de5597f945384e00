#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "kisskit/lattice.hpp"

using namespace kisskit;

namespace {

// Every z in the box [-r, r]^n with |c + zB|^2 <= bound.
std::set<std::vector<long>> box_search(const Mat& b, const Vec& c, const QuadScalar& bound, long r) {
  const std::size_t n = b.size();
  std::set<std::vector<long>> out;
  std::vector<long> z(n, -r);
  while (true) {
    Vec v = c;
    for (std::size_t i = 0; i < n; ++i) v = add(v, scale(QuadScalar(z[i]), b[i]));
    QuadScalar s;
    for (const auto& x : v) s += x * x;
    if (s <= bound) out.insert(z);
    std::size_t k = 0;
    while (k < n && z[k] == r) z[k++] = -r;
    if (k == n) break;
    ++z[k];
  }
  return out;
}

}  // namespace

TEST_CASE("enumeration agrees with a box search") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> entry(-2, 2), shift(-3, 3);
  int tested = 0;
  while (tested < 12) {
    const std::size_t n = 2 + tested % 3;
    Mat b(n, Vec(n));
    for (auto& row : b)
      for (auto& x : row) x = QuadScalar(entry(rng));
    const QuadScalar det = determinant(b);
    if (det.is_zero()) continue;
    Vec c(n);
    for (auto& x : c) x = QuadScalar(Rational(shift(rng), 2));
    const QuadScalar bound(6);
    // z = (v - c) B^-1 with |v_j - c_j| < 4 bounds every coefficient.
    const Mat inv = *inverse(b);
    Rational widest = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Rational w = 0;
      for (std::size_t j = 0; j < n; ++j) w += abs(inv[j][i].rational_part());
      widest = std::max(widest, w);
    }
    const long r = floor(Rational(4 * widest)).get_si() + 1;
    if (std::pow(2.0 * r + 1, n) > 3e5) continue;
    const auto expect = box_search(b, c, bound, r);
    const auto got = enumerate_lattice(b, c, bound);
    std::set<std::vector<long>> zs;
    for (const auto& p : got) {
      zs.insert(p.z);
      QuadScalar s;
      for (const auto& x : p.v) s += x * x;
      CHECK(s == p.norm2);
    }
    CHECK(zs.size() == got.size());
    CHECK(zs == expect);
    ++tested;
  }
}

TEST_CASE("irrational basis rows") {
  const Mat b{{QuadScalar(0, 2, 5), QuadScalar(0)}, {QuadScalar(0), QuadScalar(0, Rational(4, 5), 5)}};
  const auto pts = enumerate_lattice(b, Vec{QuadScalar(0), QuadScalar(0)}, QuadScalar(20));
  const auto expect = box_search(b, Vec{QuadScalar(0), QuadScalar(0)}, QuadScalar(20), 6);
  std::set<std::vector<long>> zs;
  for (const auto& p : pts) zs.insert(p.z);
  CHECK(zs == expect);
}

TEST_CASE("coordinates and membership") {
  const Mat b{rational_vec({1, 1, 0}), rational_vec({1, -1, 0}), rational_vec({0, 1, -1})};
  CHECK(in_lattice(b, rational_vec({2, 0, 0})));
  CHECK(in_lattice(b, rational_vec({1, 0, 1})));
  CHECK_FALSE(in_lattice(b, rational_vec({1, 0, 0})));
  CHECK(coordinates(b, rational_vec({2, 0, 0})) == rational_vec({1, 1, 0}));
  CHECK_THROWS_AS(coordinates({rational_vec({1, 1}), rational_vec({2, 2})}, rational_vec({1, 0})), Error);
}

TEST_CASE("Hermite normal form") {
  const auto h = hermite_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}, {0, 0, 0}});
  REQUIRE(h.size() == 3);
  for (std::size_t i = 0; i < h.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) CHECK(h[i][j] == 0);
    CHECK(h[i][i] > 0);
    for (std::size_t k = 0; k < i; ++k) {
      CHECK(h[k][i] >= 0);
      CHECK(h[k][i] < h[i][i]);
    }
  }
  // Same lattice: |det| of a 3x3 full-rank HNF equals the gcd of the 3x3 minors.
  CHECK(h[0][0] * h[1][1] * h[2][2] == 144);
}
