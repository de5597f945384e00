#include "doctest.h"
#include "kisskit/groups.hpp"
#include "support.hpp"

using namespace testing;

namespace {

struct Row {
  Kind5 kind;
  std::uint64_t counts[9];
};

// Columns -1, -4/5, -3/4, -1/2, -3/10, -1/4, 0, 1/5, 1/2.
const char* kColumns[9] = {"-1", "-4/5", "-3/4", "-1/2", "-3/10", "-1/4", "0", "1/5", "1/2"};
const Row kTable[4] = {
    {Kind5::D5, {20, 0, 0, 240, 0, 0, 280, 0, 240}},
    {Kind5::L5, {12, 0, 32, 192, 0, 32, 272, 0, 240}},
    {Kind5::Q5, {10, 30, 0, 180, 60, 0, 250, 10, 240}},
    {Kind5::R5, {6, 30, 20, 144, 60, 28, 242, 10, 240}},
};

}  // namespace

TEST_CASE("5d inner-product table") {
  for (const auto& row : kTable) {
    CAPTURE(to_string(row.kind));
    const auto s = spectrum(build5(row.kind));
    std::uint64_t listed = 0;
    for (int j = 0; j < 9; ++j) {
      CHECK(count_at(s, QuadScalar::parse(kColumns[j])) == row.counts[j]);
      listed += row.counts[j];
    }
    CHECK(total_pairs(s) == 780);
    CHECK(listed == 780);
  }
}

TEST_CASE("builders match the coordinate fixtures") {
  for (Kind5 k : all_kinds5()) {
    const std::string name = to_string(k);
    std::string stem = name;
    stem[0] = static_cast<char>(std::tolower(stem[0]));
    const auto f = fixture(stem);
    CAPTURE(name);
    CHECK(f.size() == 40);
    CHECK(same_point_set(build5(k), f));
    CHECK(validate_kissing(f).valid);
  }
}

TEST_CASE("antipodal pairs and pairwise non-isometry") {
  const std::uint64_t antipodal[4] = {20, 12, 10, 6};
  const auto kinds = all_kinds5();
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const auto a = build5(kinds[i]);
    CHECK(antipodal_count(a) == antipodal[i]);
    for (std::size_t j = i + 1; j < kinds.size(); ++j) {
      INFO(to_string(kinds[i]), " vs ", to_string(kinds[j]));
      CHECK_FALSE(isometric(a, build5(kinds[j])).has_value());
    }
    CHECK(isometric(a, a).has_value());
  }
}

TEST_CASE("symmetry orders agree with brute-force closure") {
  const long orders[4] = {3840, 384, 240, 48};
  const auto kinds = all_kinds5();
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    CAPTURE(to_string(kinds[i]));
    const auto c = build5(kinds[i]);
    const auto g = automorphisms(c);
    CHECK(g.order == orders[i]);
    const auto elements = enumerate_elements(g, 10000);
    REQUIRE(elements.has_value());
    CHECK(Integer(elements->size()) == g.order);
    for (std::size_t e = 0; e < elements->size(); e += 97) {
      const Mat a = realize_orthogonal(c, (*elements)[e]);
      CHECK(is_orthogonal(a));
      CHECK(point_permutation(c, a) == (*elements)[e]);
    }
  }
}

TEST_CASE("layer surgery variants") {
  const auto d5 = build5(Kind5::D5);
  const auto l5 = build5(Kind5::L5);
  int as_l5 = 0, as_d5 = 0;
  for (const auto& v : l5_variants()) {
    CAPTURE(v.name());
    CHECK(validate_kissing(v).valid);
    if (isometric(v, l5)) ++as_l5;
    if (isometric(v, d5)) ++as_d5;
  }
  CHECK(as_l5 == 4);
  CHECK(as_d5 == 2);
}

TEST_CASE("triality permutes the three cross polytopes") {
  const auto r = triality_check();
  CHECK(r.orthogonal);
  CHECK(r.cycles);
  CHECK(r.cube_identity);
  CHECK(d4_cross_polytopes().size() == 3);
}

TEST_CASE("kind names") {
  for (Kind5 k : all_kinds5()) {
    std::string s = to_string(k);
    s[0] = static_cast<char>(std::tolower(s[0]));
    CHECK(parse_kind5(s) == k);
  }
  CHECK_THROWS_AS(parse_kind5("e8"), Error);
}
