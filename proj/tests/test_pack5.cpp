#include <set>

#include "doctest.h"
#include "kisskit/lattice.hpp"
#include "kisskit/pack5.hpp"
#include "support.hpp"

using namespace testing;

namespace {

QuadScalar laplace_det(const Mat& a) {
  const std::size_t n = a.size();
  if (n == 1) return a[0][0];
  QuadScalar s;
  for (std::size_t j = 0; j < n; ++j) {
    Mat minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(a[i][k]);
      minor.push_back(row);
    }
    const QuadScalar term = a[0][j] * laplace_det(minor);
    s += (j % 2) ? -term : term;
  }
  return s;
}

// Smallest squared distance over lattice coefficients in [-r, r]^5; an upper
// bound for the true minimum that is exact once the box is large enough.
QuadScalar box_min_distance2(const PeriodicPacking& p, long r) {
  std::optional<QuadScalar> best;
  std::vector<long> z(5, -r);
  while (true) {
    Vec l(5);
    for (std::size_t i = 0; i < 5; ++i) l = add(l, scale(QuadScalar(z[i]), p.basis[i]));
    for (const auto& a : p.translates)
      for (const auto& b : p.translates) {
        const Vec d = add(sub(b, a), l);
        if (is_zero(d)) continue;
        const QuadScalar n = naive_dot(d, d);
        if (!best || n < *best) best = n;
      }
    std::size_t k = 0;
    while (k < 5 && z[k] == r) z[k++] = -r;
    if (k == 5) break;
    ++z[k];
  }
  return *best;
}

}  // namespace

TEST_CASE("builtin colorings validate and assemble") {
  for (const char* name : {"q5", "r5", "d5", "l5m2", "l5m3", "l5m4"}) {
    INFO(name);
    const auto cc = builtin_coloring(name);
    CHECK(validate_coloring(cc).valid);
    const auto p = assemble_packing(cc);
    CHECK(p.translates.size() == cc.sites.size());
    const QuadScalar d2 = min_distance2(p, Exec::Parallel);
    CHECK(d2 == min_distance2(p, Exec::Serial));
    CHECK(d2 == QuadScalar(2));
    CHECK(box_min_distance2(p, 1) == d2);
    CHECK(min_distance(p) == QuadScalar::sqrt_of(2));
    CHECK(density(p).q == Rational(1, 30));
    const QuadScalar det = laplace_det(p.basis);
    // density = m * (8 pi^2 / 15) r^5 / |det| with r^5 = sqrt(2) / 8.
    CHECK(QuadScalar(frac(p.translates.size(), 15)) / (det < QuadScalar(0) ? -det : det) ==
          QuadScalar(density(p).q));
  }
}

TEST_CASE("a recolored site is rejected") {
  auto cc = builtin_coloring("q5");
  cc.sites[1].color = cc.sites[0].color;
  const auto r = validate_coloring(cc);
  CHECK_FALSE(r.valid);
  CHECK_FALSE(r.violations.empty());
  CHECK_THROWS_AS(assemble_packing(cc), Error);
}

TEST_CASE("local kissing and vertex arrangements") {
  struct Expect {
    const char* name;
    Kind5 kind;
    std::string types;
  };
  const Expect expect[] = {{"q5", Kind5::Q5, "a"},   {"r5", Kind5::R5, "a"},   {"d5", Kind5::D5, "d"},
                           {"l5m2", Kind5::L5, "c"}, {"l5m3", Kind5::L5, "bc"}, {"l5m4", Kind5::L5, "c"}};
  for (const auto& e : expect) {
    INFO(e.name);
    const auto cc = builtin_coloring(e.name);
    const auto p = assemble_packing(cc);
    for (std::size_t i = 0; i < p.translates.size(); ++i) {
      const auto lk = local_kissing(p, i);
      CHECK(lk.config.size() == 40);
      REQUIRE(lk.kind.has_value());
      CHECK(*lk.kind == e.kind);
    }
    for (std::size_t s = 0; s < cc.sites.size(); ++s) {
      const auto a = vertex_arrangement(cc, s);
      CHECK(e.types.find(a.type) != std::string::npos);
      CHECK(a.predicted == e.kind);
    }
  }
}

TEST_CASE("period minimality") {
  struct Expect {
    const char* name;
    std::size_t m, minimal;
  };
  for (const auto& e : {Expect{"q5", 8, 2}, Expect{"r5", 4, 4}, Expect{"d5", 2, 1},
                        Expect{"l5m2", 8, 2}, Expect{"l5m3", 6, 3}, Expect{"l5m4", 8, 4}}) {
    INFO(e.name);
    const auto p = assemble_packing(builtin_coloring(e.name));
    const auto r = period_minimality(p);
    CHECK(r.m == e.m);
    CHECK(r.minimal_m == e.minimal);
    CHECK(r.periods * r.minimal_m == r.m);
    CHECK(r.reduced.translates.size() == r.minimal_m);
    CHECK(density(r.reduced).q == Rational(1, 30));
    CHECK(min_distance2(r.reduced) == QuadScalar(2));
  }
  for (Kind5 k : {Kind5::Q5, Kind5::R5}) {
    const auto r = period_minimality(table_packing(k));
    CHECK(r.minimal_m == r.m);
  }
}

TEST_CASE("assembled packings match the periodic table") {
  const auto q = packing_isometry(assemble_packing(builtin_coloring("q5")), table_packing(Kind5::Q5));
  REQUIRE(q.has_value());
  CHECK(is_orthogonal(q->a));
  const auto r = packing_isometry(assemble_packing(builtin_coloring("r5")), table_packing(Kind5::R5));
  REQUIRE(r.has_value());
  CHECK(is_orthogonal(r->a));
  CHECK_FALSE(packing_isometry(assemble_packing(builtin_coloring("q5")), table_packing(Kind5::R5)));
  for (Kind5 k : {Kind5::Q5, Kind5::R5}) {
    const auto p = table_packing(k);
    CHECK(min_distance2(p) == QuadScalar(2));
    CHECK(density(p).q == Rational(1, 30));
    CHECK(local_kissing(p, 0).kind == k);
  }
}

TEST_CASE("uniform packings") {
  std::vector<PeriodicPacking> l5;
  for (const char* name : {"q5", "r5", "d5", "l5m2", "l5m3", "l5m4"}) {
    INFO(name);
    const auto p = assemble_packing(builtin_coloring(name));
    CHECK(is_uniform(p));
    if (std::string(name).rfind("l5", 0) == 0) l5.push_back(p);
  }
  for (std::size_t i = 0; i < l5.size(); ++i)
    for (std::size_t j = 0; j < l5.size(); ++j)
      CHECK(packing_isometry(l5[i], l5[j]).has_value() == (i == j));

  // Triangle strips whose rows alternate between L5 and D5 neighborhoods.
  ColoredConfig2D mixed;
  mixed.basis = {rational_vec({2, 0}), rational_vec({0, 4})};
  const int colors[4] = {0, 1, 2, 1};
  for (int j = 0; j < 4; ++j)
    for (int k = 0; k < 2; ++k)
      mixed.sites.push_back({rational_vec({frac(j, 2) + k, j}), (colors[j] + 2 * k) % 4});
  const auto p = assemble_packing(mixed);
  std::set<Kind5> kinds;
  for (std::size_t i = 0; i < p.translates.size(); ++i) kinds.insert(*local_kissing(p, i).kind);
  CHECK(kinds == std::set<Kind5>{Kind5::D5, Kind5::L5});
  CHECK_FALSE(is_uniform(p));
}

TEST_CASE("symmetry coset tables") {
  const auto q = verify_symmetry_coset_table(Kind5::Q5);
  CHECK(q.ok);
  CHECK(q.group_order == 480);
  CHECK(q.subgroup_order == 240);
  CHECK(q.rows.size() == 2);
  const auto r = verify_symmetry_coset_table(Kind5::R5);
  CHECK(r.ok);
  CHECK(r.group_order == 192);
  CHECK(r.subgroup_order == 48);
  CHECK(r.rows.size() == 4);
  for (const auto* rep : {&q, &r})
    for (const auto& row : rep->rows) {
      CHECK(row.paired_ok);
      CHECK(row.others_rejected);
    }

  const auto p = table_packing(Kind5::Q5);
  const Mat minus = negate(identity(5));
  CHECK_FALSE(verify_affine_symmetry(p, minus, Vec(5)));
  CHECK(verify_affine_symmetry(p, minus, p.translates[1]));
  CHECK(verify_affine_symmetry(p, identity(5), Vec(5)));
  CHECK_FALSE(verify_affine_symmetry(p, identity(5), p.translates[1]));
  Mat skew = identity(5);
  skew[0][1] = QuadScalar(1);
  CHECK_THROWS_AS(verify_affine_symmetry(p, skew, Vec(5)), Error);
}

TEST_CASE("uniform uniqueness") {
  for (Kind5 k : all_kinds5()) {
    CAPTURE(to_string(k));
    const auto c = build5(k);
    const auto r = uniform_uniqueness(c, Exec::Parallel);
    CHECK(r.points.size() == 40);
    CHECK(r.unique_count() == (k == Kind5::L5 ? 24u : 40u));
    if (k == Kind5::L5) {
      // The undetermined points are the two layers x5 = +-1.
      for (std::size_t i = 0; i < c.size(); ++i)
        CHECK((r.points[i].verdict == Verdict::Unique) == (c[i][4] == QuadScalar(0)));
    }
  }
  const auto s = uniform_uniqueness(build5(Kind5::R5), Exec::Serial);
  const auto p = uniform_uniqueness(build5(Kind5::R5), Exec::Parallel);
  for (std::size_t i = 0; i < 40; ++i) CHECK(s.points[i].verdict == p.points[i].verdict);
}

TEST_CASE("Leech 24-dimensional density gap") {
  const auto g = leech24_gap_check();
  CHECK(g.gap);
  CHECK(g.target == 8192);
  CHECK(g.margin == g.target - g.blichfeldt_density);
  CHECK(g.blichfeldt_density == frac(4 * 7885785, 10000));
  Integer f = 1;
  for (int i = 2; i <= 12; ++i) f *= i;
  CHECK(g.denominator == f * 8192);
}

TEST_CASE("svg drawing") {
  const std::string svg = render_svg(builtin_coloring("q5"));
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("stroke-dasharray=\"6,4\"") != std::string::npos);
  CHECK(svg == render_svg(builtin_coloring("q5")));
}

TEST_CASE("period minimality ignores basis choice and translate order") {
  for (const char* name : {"q5", "r5", "l5m3"}) {
    INFO(name);
    const auto p = assemble_packing(builtin_coloring(name));
    auto q = p;
    q.basis[0] = add(q.basis[0], q.basis[1]);
    q.basis[2] = sub(q.basis[2], scale(QuadScalar(2), q.basis[4]));
    std::swap(q.basis[1], q.basis[3]);
    std::reverse(q.translates.begin(), q.translates.end());
    q.translates[0] = add(q.translates[0], q.basis[2]);
    const auto a = period_minimality(p), b = period_minimality(q);
    CHECK(a.minimal_m == b.minimal_m);
    CHECK(a.periods == b.periods);
    CHECK(packing_isometry(p, q).has_value());
  }
}

TEST_CASE("affine symmetries compose") {
  const auto p = table_packing(Kind5::R5);
  const auto c = verify_symmetry_coset_table(Kind5::R5);
  REQUIRE(c.ok);
  const Mat r = [&] {
    const Vec& w = p.basis[3];
    const QuadScalar n = dot(w, w);
    Mat m = identity(5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m[i][j] -= QuadScalar(2) * w[i] * w[j] / n;
    return m;
  }();
  const Mat minus = negate(identity(5));
  // r pairs with x2 and -1 with x3 in the table.
  const Vec& t = p.translates[2];
  const Vec& u = p.translates[3];
  REQUIRE(verify_affine_symmetry(p, r, t));
  REQUIRE(verify_affine_symmetry(p, minus, u));
  CHECK(verify_affine_symmetry(p, multiply(r, minus), add(kisskit::apply(r, u), t)));
  CHECK(verify_affine_symmetry(p, multiply(minus, r), add(kisskit::apply(minus, t), u)));
}
