#include <random>

#include "doctest.h"
#include "support.hpp"

using namespace testing;

TEST_CASE("serial and parallel kernels agree") {
  for (const auto& c : all_built()) {
    CAPTURE(c.name());
    CHECK(gram(c, Exec::Serial) == gram(c, Exec::Parallel));
    CHECK(spectrum(c, Exec::Serial) == spectrum(c, Exec::Parallel));
    const auto s = validate_kissing(c, std::nullopt, Exec::Serial);
    const auto p = validate_kissing(c, std::nullopt, Exec::Parallel);
    CHECK(s.valid == p.valid);
    CHECK(s.violations == p.violations);
  }
}

TEST_CASE("every built configuration passes exhaustive pair validation") {
  for (const auto& c : all_built()) {
    CAPTURE(c.name());
    CHECK(brute_force_kissing(c));
    CHECK(validate_kissing(c).valid);
    CHECK_FALSE(c.has_duplicates());
    CHECK(c.spans());
    CHECK(as_map(spectrum(c)) == brute_force_spectrum(c));
  }
}

TEST_CASE("validation reports a point moved too close") {
  auto pts = build5(Kind5::D5).points();
  pts[1] = pts[0];
  const PointConfiguration bad("bad", 5, pts);
  CHECK(bad.has_duplicates());
  const auto r = validate_kissing(bad);
  CHECK_FALSE(r.valid);
  CHECK(std::find(r.violations.begin(), r.violations.end(), std::pair<std::size_t, std::size_t>{0, 1}) !=
        r.violations.end());
  CHECK_FALSE(brute_force_kissing(bad));

  auto scaled = build5(Kind5::L5).points();
  scaled[3] = scale(QuadScalar(2), scaled[3]);
  const auto r2 = validate_kissing(PointConfiguration("scaled", 5, scaled));
  CHECK_FALSE(r2.valid);
  CHECK(r2.bad_norms == std::vector<std::size_t>{3});
}

TEST_CASE("spectra are invariant under random signed permutations") {
  std::mt19937 rng(2024);
  for (const auto& c : all_built()) {
    CAPTURE(c.name());
    for (int trial = 0; trial < 3; ++trial) {
      const auto d = random_signed_permutation(c, rng);
      CHECK(spectrum(d) == spectrum(c));
      CHECK(antipodal_count(d) == antipodal_count(c));
    }
  }
}

TEST_CASE("isometric finds a Gram-preserving bijection") {
  std::mt19937 rng(7);
  for (Kind5 k : all_kinds5()) {
    const auto c = build5(k);
    const auto d = random_signed_permutation(c, rng);
    const auto pi = isometric(c, d);
    REQUIRE(pi.has_value());
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = 0; j < c.size(); ++j)
        CHECK(naive_dot(c[i], c[j]) == naive_dot(d[(*pi)[i]], d[(*pi)[j]]));
  }
}

TEST_CASE("layers and reflections") {
  const auto d5 = build5(Kind5::D5);
  const auto layers = split_layers(d5, rational_vec({0, 0, 0, 0, 1}));
  REQUIRE(layers.size() == 3);
  CHECK(layers[0].height == QuadScalar(1));
  CHECK(layers[0].indices.size() == 8);
  CHECK(layers[1].indices.size() == 24);
  CHECK(layers[2].indices.size() == 8);

  const Vec w = coordinate_sum_normal(5);
  CHECK(dot(w, w) == QuadScalar(1));
  const auto pts = d5.points();
  CHECK(reflect_hyperplane(pts, w) == reflect_coordinate_sum(pts));
  const auto twice = reflect_coordinate_sum(reflect_coordinate_sum(pts));
  CHECK(twice == pts);
  CHECK_THROWS_AS(reflect_hyperplane(pts, rational_vec({1, 1, 0, 0, 0})), Error);
  CHECK_THROWS_AS(replace_layer(d5, rational_vec({0, 0, 0, 0, 1}), QuadScalar(1),
                                {rational_vec({1, 0, 0, 0, 0})}, "x"),
                  Error);
}

TEST_CASE("configurations reject mixed radicals and wrong dimensions") {
  CHECK_THROWS_AS(PointConfiguration("x", 2, {Vec{QuadScalar(0, 1, 2), QuadScalar(0, 1, 3)}}), Error);
  CHECK_THROWS_AS(PointConfiguration("x", 2, {Vec{QuadScalar(1)}}), Error);
  const auto a = build5(Kind5::Q5);
  auto pts = a.points();
  std::reverse(pts.begin(), pts.end());
  CHECK(same_point_set(a, PointConfiguration("rev", 5, pts)));
  CHECK_FALSE(same_point_set(a, build5(Kind5::R5)));
}
