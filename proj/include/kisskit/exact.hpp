// Exact arithmetic over Q and Q(sqrt N).
//
// Every coordinate and inner product in kisskit is a QuadScalar a + b*sqrt(N)
// with rational a, b and a squarefree radical N.  N = 0 encodes plain
// rationals; any scalar with b = 0 is normalized to N = 0 so that rational
// values interoperate with every radical context.  Mixing two different
// nonzero radicals is an error, never a coercion.

#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace kisskit {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  RadicalMismatch,
  DivisionByZero,
  InvalidRadical,
  Parse,
  NotSpanning,
  NormalNotUnit,
  HeightMismatch,
  NotAnAutomorphism,
  InvalidSubset,
  InvalidColoring,
  DegenerateBasis,
  WrongRadius,
  NotOrthogonal,
  LatticeNotPreserved,
  UnrecognizedNeighborhood,
  InvalidCode,
  MismatchedSphere,
  NotTight,
  Io,
  Usage,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& what);

/// a/b in lowest terms (mpq_class(a, b) does not canonicalize).
Rational frac(const Integer& a, const Integer& b);

/// Strict rational token: -?[0-9]+(/[0-9]+)?, denominator nonzero.
Rational parse_rational(std::string_view text);
/// Canonical "a" or "a/b".
std::string render(const Rational& q);

/// Largest integer <= q.
Integer floor(const Rational& q);

/// true iff n is 0 or a squarefree integer >= 2.
bool is_valid_radical(std::uint32_t n);

class QuadScalar {
 public:
  QuadScalar() = default;
  QuadScalar(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& a) : a_(a) { a_.canonicalize(); }  // NOLINT(google-explicit-constructor)
  QuadScalar(const Rational& a, const Rational& b, std::uint32_t radical);

  /// sqrt(q) for a nonnegative rational q, as c*sqrt(N) with N squarefree.
  static QuadScalar sqrt_of(const Rational& q);
  /// Grammar: `a/b` or `a/b+c/d*rN`; denominators of 1 omitted.
  static QuadScalar parse(std::string_view text);

  const Rational& rational_part() const { return a_; }
  const Rational& radical_part() const { return b_; }
  std::uint32_t radical() const { return n_; }
  bool is_rational() const { return n_ == 0; }
  bool is_zero() const { return n_ == 0 && sgn(a_) == 0; }

  std::string str() const;
  /// Floating approximation, used only for drawing.
  double approx() const;

  QuadScalar operator-() const;
  QuadScalar& operator+=(const QuadScalar& y);
  QuadScalar& operator-=(const QuadScalar& y);
  QuadScalar& operator*=(const QuadScalar& y);
  QuadScalar& operator/=(const QuadScalar& y);

  friend QuadScalar operator+(QuadScalar x, const QuadScalar& y) { return x += y; }
  friend QuadScalar operator-(QuadScalar x, const QuadScalar& y) { return x -= y; }
  friend QuadScalar operator*(QuadScalar x, const QuadScalar& y) { return x *= y; }
  friend QuadScalar operator/(QuadScalar x, const QuadScalar& y) { return x /= y; }

  /// Structural equality; compatible with numeric equality since the
  /// representation is canonical.
  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.n_ == y.n_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  /// Numeric order.  Throws RadicalMismatch on incompatible radicals.
  friend std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y);

  /// Conjugate a - b*sqrt(N).
  QuadScalar conjugate() const;
  /// Field norm a^2 - b^2 N.
  Rational norm() const;

 private:
  void normalize();
  static std::uint32_t common_radical(const QuadScalar& x, const QuadScalar& y);

  Rational a_;
  Rational b_;
  std::uint32_t n_ = 0;
};

/// -1, 0 or +1.
int sign(const QuadScalar& x);
int compare(const QuadScalar& x, const QuadScalar& y);
Integer floor(const QuadScalar& x);

/// Total order on representations (radical, a, b); never throws.  For
/// containers that may hold scalars from several radicals.
struct StructuralLess {
  bool operator()(const QuadScalar& x, const QuadScalar& y) const;
};

struct QuadScalarHash {
  std::size_t operator()(const QuadScalar& x) const;
};

}  // namespace kisskit
