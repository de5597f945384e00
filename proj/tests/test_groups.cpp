#include <set>

#include "doctest.h"
#include "kisskit/groups.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Closure by repeated multiplication, independent of the stabilizer chain.
std::set<Perm> naive_closure(const std::vector<Perm>& gens, std::size_t degree) {
  std::set<Perm> seen{identity_perm(degree)};
  std::vector<Perm> frontier{identity_perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const auto& g : frontier)
      for (const auto& s : gens) {
        Perm h(degree);
        for (std::size_t i = 0; i < degree; ++i) h[i] = s[g[i]];
        if (seen.insert(h).second) next.push_back(h);
      }
    frontier = std::move(next);
  }
  return seen;
}

PointConfiguration cross_polytope(std::size_t n) {
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < n; ++i)
    for (int s : {1, -1}) {
      Vec v(n);
      v[i] = QuadScalar(s);
      pts.push_back(v);
    }
  return PointConfiguration("cross", n, pts);
}

}  // namespace

TEST_CASE("permutation algebra") {
  const Perm a{1, 2, 0, 3}, b{0, 1, 3, 2};
  CHECK(compose(a, b) == Perm{1, 2, 3, 0});
  CHECK(is_identity(compose(a, invert(a))));
  CHECK(is_identity(compose(invert(b), b)));
  CHECK(render(a) == "[1 2 0 3]");
}

TEST_CASE("stabilizer chain order matches closure") {
  const std::vector<std::vector<Perm>> cases = {
      {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}},
      {{1, 2, 3, 4, 5, 0}},
      {{1, 0, 3, 2, 5, 4, 7, 6}, {2, 3, 0, 1, 6, 7, 4, 5}, {4, 5, 6, 7, 0, 1, 2, 3}},
      {{1, 2, 0, 3, 4, 5, 6}, {0, 1, 3, 4, 5, 6, 2}},
      {{0, 2, 1, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7, 0}},
  };
  for (const auto& gens : cases) {
    const std::size_t n = gens[0].size();
    const auto g = group_from_generators(n, gens);
    const auto all = naive_closure(gens, n);
    CHECK(g.order == Integer(all.size()));
    const auto e = enumerate_elements(g, 100000);
    REQUIRE(e.has_value());
    CHECK(std::set<Perm>(e->begin(), e->end()) == all);
    for (const auto& p : all) CHECK(g.chain.contains(p));
  }
  const auto s8 = group_from_generators(8, {{0, 2, 1, 3, 4, 5, 6, 7}, {1, 2, 3, 4, 5, 6, 7, 0}});
  CHECK(s8.order == 40320);
  CHECK_FALSE(enumerate_elements(s8, 1000).has_value());
}

TEST_CASE("automorphisms of cross polytopes") {
  for (std::size_t n : {2u, 3u, 4u}) {
    const auto g = automorphisms(cross_polytope(n));
    Integer expect = 1;
    for (std::size_t i = 1; i <= n; ++i) expect *= 2 * i;
    CHECK(g.order == expect);
    CHECK(is_transitive(g, 2 * n));
  }
}

TEST_CASE("orbits and embedding classes") {
  const auto d5 = build5(Kind5::D5);
  const auto g = automorphisms(d5);
  CHECK(orbits(d5.size(), g.generators).size() == 1);
  const auto l5 = build5(Kind5::L5);
  const auto gl = automorphisms(l5);
  std::size_t total = 0;
  for (const auto& o : orbits(l5.size(), gl.generators)) total += o.size();
  CHECK(total == 40);
  CHECK_FALSE(is_transitive(gl, 40));

  // Orthogonal pairs of D5 roots: e1+e2 with +-(e1-e2), or with a root on
  // three other coordinates.
  std::size_t j = 1;
  while (dot(d5[0], d5[j]) != QuadScalar(0)) ++j;
  const PointConfiguration pair("pair", 5, {d5[0], d5[j]});
  const auto maps = embeddings(pair, d5);
  const auto sp = spectrum(d5);
  CHECK(maps.size() == 2 * count_at(sp, QuadScalar(0)));
  const auto classes = equivalent_mod_aut(maps, g);
  REQUIRE(classes.size() == 2);
  std::multiset<std::size_t> sizes{classes[0].size(), classes[1].size()};
  CHECK(sizes == std::multiset<std::size_t>{80, 480});
}

TEST_CASE("linear maps from point images") {
  const auto c = build5(Kind5::Q5);
  const auto g = automorphisms(c);
  for (const auto& p : g.generators) {
    const Mat a = realize_orthogonal(c, p);
    CHECK(is_orthogonal(a));
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(kisskit::apply(a, c[i]) == c[p[i]]);
  }
  CHECK_THROWS_AS(point_permutation(c, multiply(identity(5), negate(identity(5)))), Error);
}
