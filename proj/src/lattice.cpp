#include "kisskit/lattice.hpp"

#include <algorithm>

namespace kisskit {

namespace {

struct Decomposition {
  std::vector<QuadScalar> d;
  std::vector<Vec> mu;  // mu[j][i] for j > i
};

Decomposition decompose(const Mat& basis) {
  const std::size_t k = basis.size();
  Mat g(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g[i][j] = dot(basis[i], basis[j]);
  Decomposition dec;
  dec.d.resize(k);
  dec.mu.assign(k, Vec(k));
  Mat r(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      QuadScalar s = g[j][i];
      for (std::size_t l = 0; l < i; ++l) s -= dec.mu[i][l] * r[j][l];
      r[j][i] = s;
    }
    dec.d[i] = r[i][i];
    if (sign(dec.d[i]) <= 0) fail(ErrorKind::DegenerateBasis, "basis rows are dependent");
    for (std::size_t j = i + 1; j < k; ++j) dec.mu[j][i] = r[j][i] / dec.d[i];
  }
  return dec;
}

}  // namespace

Vec coordinates(const Mat& basis, const Vec& v) {
  if (basis.empty() || basis.size() != basis[0].size())
    fail(ErrorKind::DegenerateBasis, "basis is not square");
  const auto inv = inverse(basis);
  if (!inv) fail(ErrorKind::DegenerateBasis, "basis is singular");
  // y B = v  <=>  y = v B^-1.
  const std::size_t n = basis.size();
  Vec y(n);
  for (std::size_t j = 0; j < n; ++j) {
    QuadScalar s;
    for (std::size_t i = 0; i < n; ++i) s += v[i] * (*inv)[i][j];
    y[j] = s;
  }
  return y;
}

bool in_lattice(const Mat& basis, const Vec& v) {
  for (const auto& y : coordinates(basis, v))
    if (!y.is_rational() || y.rational_part().get_den() != 1) return false;
  return true;
}

std::vector<LatticePoint> enumerate_lattice(const Mat& basis, const Vec& c,
                                            const QuadScalar& bound) {
  const std::size_t k = basis.size();
  const Decomposition dec = decompose(basis);
  const Vec y = coordinates(basis, c);
  std::vector<LatticePoint> out;
  std::vector<long> z(k, 0);
  // x_i + sum_{j>i} mu_ji x_j with x = z + y, accumulated from the top.
  auto rec = [&](auto&& self, std::ptrdiff_t i, const QuadScalar& used) -> void {
    if (i < 0) {
      LatticePoint p;
      p.z = z;
      p.v = c;
      for (std::size_t r = 0; r < k; ++r)
        if (z[r]) p.v = add(p.v, scale(QuadScalar(z[r]), basis[r]));
      p.norm2 = used;
      out.push_back(std::move(p));
      return;
    }
    QuadScalar shift = y[i];
    for (std::size_t j = static_cast<std::size_t>(i) + 1; j < k; ++j)
      shift += dec.mu[j][i] * (QuadScalar(z[j]) + y[j]);
    const QuadScalar room = bound - used;
    auto cost = [&](long zi) {
      const QuadScalar u = QuadScalar(zi) + shift;
      return dec.d[i] * u * u;
    };
    const long start = floor(-shift).get_si();
    for (long zi = start;; --zi) {
      const QuadScalar cz = cost(zi);
      if (cz > room) break;
      z[i] = zi;
      self(self, i - 1, used + cz);
    }
    for (long zi = start + 1;; ++zi) {
      const QuadScalar cz = cost(zi);
      if (cz > room) break;
      z[i] = zi;
      self(self, i - 1, used + cz);
    }
    z[i] = 0;
  };
  rec(rec, static_cast<std::ptrdiff_t>(k) - 1, QuadScalar(0));
  std::sort(out.begin(), out.end(),
            [](const LatticePoint& a, const LatticePoint& b) { return a.z < b.z; });
  return out;
}

std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  const std::size_t n = rows[0].size();
  std::size_t top = 0;
  for (std::size_t col = 0; col < n && top < rows.size(); ++col) {
    // Euclid down the column until one nonzero entry remains at `top`.
    for (;;) {
      std::size_t pivot = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r)
        if (rows[r][col] != 0 &&
            (pivot == rows.size() || abs(rows[r][col]) < abs(rows[pivot][col])))
          pivot = r;
      if (pivot == rows.size()) break;
      std::swap(rows[top], rows[pivot]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) break;
    }
    if (top < rows.size() && rows[top][col] != 0) {
      if (rows[top][col] < 0)
        for (auto& x : rows[top]) x = -x;
      for (std::size_t r = 0; r < top; ++r) {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < n; ++c) rows[r][c] -= q * rows[top][c];
      }
      ++top;
    }
  }
  rows.resize(top);
  return rows;
}

}  // namespace kisskit
