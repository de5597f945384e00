#include <cmath>
#include <random>

#include "doctest.h"
#include "kisskit/exact.hpp"

using namespace kisskit;

namespace {

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-40, 40), den(1, 12);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

QuadScalar random_scalar(std::mt19937& rng, std::uint32_t radical) {
  return QuadScalar(random_rational(rng), random_rational(rng), radical);
}

// Sign of a + b sqrt(n) from a 200-bit float evaluation.
int float_sign(const QuadScalar& x) {
  mpf_class a(x.rational_part(), 200), b(x.radical_part(), 200), r(x.radical(), 200);
  mpf_class v = a + b * sqrt(r);
  return sgn(v);
}

}  // namespace

TEST_CASE("field axioms on random scalars") {
  std::mt19937 rng(12345);
  for (std::uint32_t n : {0u, 2u, 3u, 5u, 10u}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto x = random_scalar(rng, n), y = random_scalar(rng, n), z = random_scalar(rng, n);
      CHECK(x + y == y + x);
      CHECK(x * y == y * x);
      CHECK((x + y) + z == x + (y + z));
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x + QuadScalar(0) == x);
      CHECK(x * QuadScalar(1) == x);
      CHECK(x + (-x) == QuadScalar(0));
      CHECK(x - y == x + (-y));
      if (!x.is_zero()) {
        CHECK(x * (QuadScalar(1) / x) == QuadScalar(1));
        CHECK((y / x) * x == y);
      }
      CHECK(x * x.conjugate() == QuadScalar(x.norm()));
    }
  }
}

TEST_CASE("order agrees with a high-precision float oracle") {
  std::mt19937 rng(777);
  for (std::uint32_t n : {2u, 3u, 5u, 10u}) {
    for (int trial = 0; trial < 500; ++trial) {
      const auto x = random_scalar(rng, n), y = random_scalar(rng, n);
      CHECK(sign(x) == float_sign(x));
      CHECK(compare(x, y) == float_sign(x - y));
      CHECK(((x < y) == (float_sign(y - x) > 0)));
      CHECK(floor(x) == Integer(floor(mpf_class(x.rational_part(), 200) +
                                      mpf_class(x.radical_part(), 200) * sqrt(mpf_class(n, 200)))));
    }
  }
  CHECK(sign(QuadScalar(Rational(-3), Rational(1), 10)) == 1);
  CHECK(sign(QuadScalar(Rational(-4), Rational(1), 10)) == -1);
}

TEST_CASE("canonical representation") {
  CHECK(QuadScalar(Rational(2, 4)).str() == "1/2");
  CHECK(QuadScalar(Rational(6, 4), Rational(0), 5).radical() == 0);
  CHECK(QuadScalar(Rational(6, 4), Rational(0), 5) == QuadScalar(Rational(3, 2)));
  CHECK(frac(2, 2) == 1);
  CHECK(frac(2, 2).get_den() == 1);
  CHECK_THROWS_AS(frac(1, 0), Error);
  const QuadScalar r5 = QuadScalar::sqrt_of(5);
  CHECK(r5 * r5 == QuadScalar(5));
  CHECK(QuadScalar::sqrt_of(Rational(8, 5)) == QuadScalar(0, Rational(2, 5), 10));
  CHECK(QuadScalar::sqrt_of(Rational(9, 4)) == QuadScalar(Rational(3, 2)));
  CHECK_THROWS_AS(QuadScalar::sqrt_of(-1), Error);
  CHECK_THROWS_AS(QuadScalar(0, 1, 4), Error);
}

TEST_CASE("mixing radicals is an error") {
  const QuadScalar a(0, 1, 2), b(0, 1, 3);
  CHECK_THROWS_AS(a + b, Error);
  CHECK_THROWS_AS(a * b, Error);
  CHECK_THROWS_AS((void)(a < b), Error);
  CHECK(a * QuadScalar(Rational(1, 3)) == QuadScalar(0, Rational(1, 3), 2));
  try {
    (void)(a + b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::RadicalMismatch);
  }
  CHECK_THROWS_AS(QuadScalar(1) / QuadScalar(0), Error);
}

TEST_CASE("parse and render round-trip") {
  std::mt19937 rng(99);
  for (std::uint32_t n : {0u, 3u, 5u, 10u}) {
    for (int trial = 0; trial < 300; ++trial) {
      const auto x = random_scalar(rng, n);
      CHECK(QuadScalar::parse(x.str()) == x);
      CHECK(QuadScalar::parse(x.str()).str() == x.str());
    }
  }
  CHECK(QuadScalar::parse("-1/2+3/5*r10") == QuadScalar(Rational(-1, 2), Rational(3, 5), 10));
  CHECK(QuadScalar::parse("0-1*r3").str() == "0-1*r3");
  CHECK(QuadScalar::parse("7") == QuadScalar(7));
  for (const char* bad : {"", "1/0", " 1", "1 ", "+1", "1/2+", "1+2*r4", "1+2*rx", "a", "1+-2*r5", "--1", "1/"})
    CHECK_THROWS_AS(QuadScalar::parse(bad), Error);
}
