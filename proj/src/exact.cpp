#include "kisskit/exact.hpp"

#include <cmath>
#include <functional>

namespace kisskit {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::RadicalMismatch: return "RadicalMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::InvalidRadical: return "InvalidRadical";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::NotSpanning: return "NotSpanning";
    case ErrorKind::NormalNotUnit: return "NormalNotUnit";
    case ErrorKind::HeightMismatch: return "HeightMismatch";
    case ErrorKind::NotAnAutomorphism: return "NotAnAutomorphism";
    case ErrorKind::InvalidSubset: return "InvalidSubset";
    case ErrorKind::InvalidColoring: return "InvalidColoring";
    case ErrorKind::DegenerateBasis: return "DegenerateBasis";
    case ErrorKind::WrongRadius: return "WrongRadius";
    case ErrorKind::NotOrthogonal: return "NotOrthogonal";
    case ErrorKind::LatticeNotPreserved: return "LatticeNotPreserved";
    case ErrorKind::UnrecognizedNeighborhood: return "UnrecognizedNeighborhood";
    case ErrorKind::InvalidCode: return "InvalidCode";
    case ErrorKind::MismatchedSphere: return "MismatchedSphere";
    case ErrorKind::NotTight: return "NotTight";
    case ErrorKind::Io: return "IoError";
    case ErrorKind::Usage: return "UsageError";
  }
  return "Error";
}

void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational frac(const Integer& a, const Integer& b) {
  if (b == 0) fail(ErrorKind::DivisionByZero, "zero denominator");
  Rational q(a, b);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1")
                                                               : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorKind::Parse, "bad rational '" + std::string(text) + "'");
  Integer d(std::string(den), 10);
  if (d == 0) fail(ErrorKind::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  if (text.front() == '-') n = -n;
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string render(const Rational& q) { return q.get_str(); }

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

bool is_valid_radical(std::uint32_t n) {
  if (n == 0) return true;
  if (n < 2) return false;
  for (std::uint32_t p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

QuadScalar::QuadScalar(const Rational& a, const Rational& b, std::uint32_t radical)
    : a_(a), b_(b), n_(radical) {
  a_.canonicalize();
  b_.canonicalize();
  if (radical == 1) {
    a_ += b_;
    b_ = 0;
    n_ = 0;
  } else if (!is_valid_radical(radical)) {
    fail(ErrorKind::InvalidRadical, std::to_string(radical) + " is not squarefree");
  }
  normalize();
}

void QuadScalar::normalize() {
  if (n_ == 0 || sgn(b_) == 0) {
    b_ = 0;
    n_ = 0;
  }
}

QuadScalar QuadScalar::sqrt_of(const Rational& q) {
  if (sgn(q) < 0) fail(ErrorKind::InvalidRadical, "square root of negative " + render(q));
  if (sgn(q) == 0) return {};
  // sqrt(p/d) = sqrt(p*d)/d; split p*d = k^2 * N.
  Integer t = q.get_num() * q.get_den();
  Integer k = 1;
  Integer rest = 1;
  for (Integer f = 2; f * f <= t; ++f) {
    unsigned e = 0;
    while (mpz_divisible_p(t.get_mpz_t(), f.get_mpz_t())) {
      t /= f;
      ++e;
    }
    for (unsigned i = 0; i + 1 < e; i += 2) k *= f;
    if (e % 2 == 1) rest *= f;
  }
  rest *= t;
  Rational coef(k, q.get_den());
  coef.canonicalize();
  if (rest == 1) return QuadScalar(coef);
  if (!rest.fits_ulong_p() || rest.get_ui() > UINT32_MAX)
    fail(ErrorKind::InvalidRadical, "radical too large");
  return QuadScalar(0, coef, static_cast<std::uint32_t>(rest.get_ui()));
}

QuadScalar QuadScalar::parse(std::string_view text) {
  const auto star = text.find("*r");
  if (star == std::string_view::npos) return QuadScalar(parse_rational(text));
  const std::string_view head = text.substr(0, star);
  const std::string_view rad = text.substr(star + 2);
  if (!all_digits(rad)) fail(ErrorKind::Parse, "bad radical in '" + std::string(text) + "'");
  std::size_t sep = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if (head[i] == '+' || head[i] == '-') {
      sep = i;
      break;
    }
  }
  if (sep == std::string_view::npos)
    fail(ErrorKind::Parse, "missing rational part in '" + std::string(text) + "'");
  const Rational a = parse_rational(head.substr(0, sep));
  const std::string_view btext = head[sep] == '+' ? head.substr(sep + 1) : head.substr(sep);
  if (!btext.empty() && btext[0] == '-' && head[sep] == '+')
    fail(ErrorKind::Parse, "bad sign in '" + std::string(text) + "'");
  const Rational b = parse_rational(btext);
  const unsigned long n = std::stoul(std::string(rad));
  if (n > UINT32_MAX) fail(ErrorKind::InvalidRadical, std::string(rad));
  return QuadScalar(a, b, static_cast<std::uint32_t>(n));
}

std::string QuadScalar::str() const {
  if (n_ == 0) return render(a_);
  std::string s = render(a_);
  if (sgn(b_) > 0) s += '+';
  s += render(b_);
  s += "*r";
  s += std::to_string(n_);
  return s;
}

double QuadScalar::approx() const {
  return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(n_));
}

std::uint32_t QuadScalar::common_radical(const QuadScalar& x, const QuadScalar& y) {
  if (x.n_ == y.n_ || y.n_ == 0) return x.n_;
  if (x.n_ == 0) return y.n_;
  fail(ErrorKind::RadicalMismatch,
       "sqrt(" + std::to_string(x.n_) + ") vs sqrt(" + std::to_string(y.n_) + ")");
}

QuadScalar QuadScalar::operator-() const {
  QuadScalar r = *this;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadScalar& QuadScalar::operator+=(const QuadScalar& y) {
  n_ = common_radical(*this, y);
  a_ += y.a_;
  b_ += y.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator-=(const QuadScalar& y) {
  n_ = common_radical(*this, y);
  a_ -= y.a_;
  b_ -= y.b_;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator*=(const QuadScalar& y) {
  const std::uint32_t n = common_radical(*this, y);
  if (y.n_ == 0) {
    a_ *= y.a_;
    b_ *= y.a_;
  } else if (n_ == 0) {
    b_ = a_ * y.b_;
    a_ *= y.a_;
  } else {
    Rational a = a_ * y.a_ + b_ * y.b_ * n;
    b_ = a_ * y.b_ + b_ * y.a_;
    a_ = std::move(a);
  }
  n_ = n;
  normalize();
  return *this;
}

QuadScalar& QuadScalar::operator/=(const QuadScalar& y) {
  if (y.is_zero()) fail(ErrorKind::DivisionByZero, "division by zero");
  if (y.n_ == 0) {
    common_radical(*this, y);
    a_ /= y.a_;
    b_ /= y.a_;
    normalize();
    return *this;
  }
  const Rational nrm = y.norm();
  *this *= y.conjugate();
  a_ /= nrm;
  b_ /= nrm;
  normalize();
  return *this;
}

QuadScalar QuadScalar::conjugate() const {
  QuadScalar r = *this;
  r.b_ = -r.b_;
  return r;
}

Rational QuadScalar::norm() const { return a_ * a_ - b_ * b_ * n_; }

int sign(const QuadScalar& x) {
  const int sa = sgn(x.rational_part());
  const int sb = sgn(x.radical_part());
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Signs differ: the larger of a^2 and b^2 N wins.  Equality is impossible
  // for squarefree N >= 2 unless both vanish.
  const Rational a2 = x.rational_part() * x.rational_part();
  const Rational b2n = x.radical_part() * x.radical_part() * x.radical();
  return a2 > b2n ? sa : sb;
}

int compare(const QuadScalar& x, const QuadScalar& y) { return sign(x - y); }

std::strong_ordering operator<=>(const QuadScalar& x, const QuadScalar& y) {
  const int s = compare(x, y);
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Integer floor(const QuadScalar& x) {
  if (x.is_rational()) return floor(x.rational_part());
  const Rational& b = x.radical_part();
  const Rational r = b * b * x.radical();
  Integer k;
  mpz_sqrt(k.get_mpz_t(), floor(r).get_mpz_t());
  // sqrt(r) is irrational, so floor(b sqrt N) is k or -k-1.
  const Integer fl = sgn(b) > 0 ? k : Integer(-k - 1);
  Integer g = floor(Rational(x.rational_part() + fl));
  if (sign(x - QuadScalar(Rational(g + 1))) >= 0) ++g;
  return g;
}

bool StructuralLess::operator()(const QuadScalar& x, const QuadScalar& y) const {
  if (x.radical() != y.radical()) return x.radical() < y.radical();
  const int ca = cmp(x.rational_part(), y.rational_part());
  if (ca != 0) return ca < 0;
  return cmp(x.radical_part(), y.radical_part()) < 0;
}

namespace {

std::size_t hash_mpz(mpz_srcptr z) {
  std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
  if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0));
  return h * static_cast<std::size_t>(mpz_sgn(z) + 2);
}

}  // namespace

std::size_t QuadScalarHash::operator()(const QuadScalar& x) const {
  std::size_t h = x.radical();
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(hash_mpz(x.rational_part().get_num_mpz_t()));
  mix(hash_mpz(x.rational_part().get_den_mpz_t()));
  mix(hash_mpz(x.radical_part().get_num_mpz_t()));
  mix(hash_mpz(x.radical_part().get_den_mpz_t()));
  return h;
}

}  // namespace kisskit
