#include <set>

#include "doctest.h"
#include "kisskit/groups.hpp"
#include "support.hpp"

using namespace testing;

namespace {

// Plain recursive clique count over an explicit adjacency matrix.
void extend_clique(const std::vector<std::vector<bool>>& adj, std::vector<int>& clique, int from,
                   std::set<std::vector<int>>& out) {
  if (clique.size() == 16) {
    out.insert(clique);
    return;
  }
  const int n = static_cast<int>(adj.size());
  for (int v = from; v < n; ++v) {
    if (static_cast<int>(clique.size()) + (n - v) < 16) return;
    bool ok = true;
    for (int u : clique) ok = ok && adj[u][v];
    if (!ok) continue;
    clique.push_back(v);
    extend_clique(adj, clique, v + 1, out);
    clique.pop_back();
  }
}

std::set<std::vector<int>> naive_subsets(const HoleSet& h) {
  const std::size_t n = h.holes.size();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n));
  const QuadScalar bound(Rational(2, 5));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      adj[i][j] = i != j && naive_dot(h.holes[i], h.holes[j]) <= bound;
  std::set<std::vector<int>> out;
  std::vector<int> clique;
  extend_clique(adj, clique, 0, out);
  return out;
}

// E6 roots: E8 roots with x6 = x7 = x8, in an orthonormal basis of that
// subspace (last coordinate sqrt(3) x6).
PointConfiguration e6_roots() {
  std::vector<std::vector<Rational>> e8;
  for (int i = 0; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          std::vector<Rational> v(8, 0);
          v[i] = si;
          v[j] = sj;
          e8.push_back(v);
        }
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2) continue;
    std::vector<Rational> v(8);
    for (int i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    e8.push_back(v);
  }
  std::vector<Vec> pts;
  for (const auto& v : e8) {
    if (v[5] != v[6] || v[6] != v[7]) continue;
    Vec p;
    for (int i = 0; i < 5; ++i) p.push_back(QuadScalar(v[i]));
    p.push_back(QuadScalar(0, v[5], 3));
    pts.push_back(p);
  }
  return PointConfiguration("E6", 6, pts);
}

}  // namespace

TEST_CASE("holes are valid and the 16-subsets match an independent search") {
  const std::size_t expected[4] = {2, 3, 0, 0};
  const auto kinds = all_kinds5();
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    CAPTURE(to_string(kinds[i]));
    const auto h = holes_for(kinds[i]);
    CHECK(h.holes.radical() == 10);
    CHECK(h.tags.size() == h.holes.size());
    CHECK(verify_holes(build5(kinds[i]), h).valid);
    const auto par = hole_subsets_16(h, Exec::Parallel);
    CHECK(par == hole_subsets_16(h, Exec::Serial));
    CHECK(par.size() == expected[i]);
    CHECK(std::set<std::vector<int>>(par.begin(), par.end()) == naive_subsets(h));
  }
}

TEST_CASE("a hole too close to the configuration fails verification") {
  auto h = holes_for(Kind5::D5);
  auto pts = h.holes.points();
  pts[0] = scale(QuadScalar(Rational(1, 2)), add(pts[0], pts[1]));
  h.holes = PointConfiguration("bad", 5, pts);
  CHECK_FALSE(verify_holes(build5(Kind5::D5), h).valid);
}

TEST_CASE("extensions over D5 fall into two classes") {
  const auto c = classify_6d_extensions(Kind5::D5);
  REQUIRE(c.subsets.size() == 2);
  CHECK(c.extensions.size() == 4);
  for (const auto& e : c.extensions) {
    CHECK(e.config.size() == 72);
    CHECK(validate_kissing(e.config).valid);
    CHECK(brute_force_kissing(e.config));
  }
  CHECK(c.classes.size() == 2);
  for (const auto& cls : c.classes) CHECK(cls.size() == 2);
  // Same subset on both sides vs opposite subsets.
  const auto same = [&](std::size_t i) { return c.extensions[i].bottom == c.extensions[i].top; };
  for (const auto& cls : c.classes)
    for (std::size_t i : cls) CHECK(same(i) == same(cls.front()));
}

TEST_CASE("extensions over L5 isolate the unpaired subset on both sides") {
  const auto c = classify_6d_extensions(Kind5::L5);
  REQUIRE(c.subsets.size() == 3);
  const auto h = holes_for(Kind5::L5);
  const auto u = unpaired_subset(h, c.subsets);
  REQUIRE(u.has_value());
  for (const auto& e : c.extensions) {
    CHECK(e.config.size() == 72);
    CHECK(validate_kissing(e.config).valid);
  }
  CHECK(c.classes.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& cls : c.classes) {
    sizes.insert(cls.size());
    if (cls.size() == 1) {
      CHECK(c.extensions[cls[0]].bottom == *u);
      CHECK(c.extensions[cls[0]].top == *u);
    }
  }
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 6});
}

TEST_CASE("named six-dimensional configurations") {
  struct Expect {
    const char* name;
    long aut;
    std::uint64_t antipodal;
  };
  const Expect expect[] = {{"e6", 103680, 36}, {"leech6", 3840, 20}, {"cs6a", 2304, 12}, {"cs6b", 384, 12}};
  for (const auto& e : expect) {
    INFO(e.name);
    const auto c = build_named6(e.name);
    CHECK(c.size() == 72);
    CHECK(antipodal_count(c) == e.antipodal);
    CHECK(automorphisms(c).order == e.aut);
  }
  const auto e6 = build_named6("e6");
  const auto roots = e6_roots();
  REQUIRE(roots.size() == 72);
  CHECK(isometric(e6, roots).has_value());
  CHECK_FALSE(isometric(build_named6("leech6"), roots).has_value());
  CHECK_THROWS_AS(build_named6("e7"), Error);
}
