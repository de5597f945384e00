#include "kisskit/linalg.hpp"

#include <numeric>

namespace kisskit {

QuadScalar dot(std::span<const QuadScalar> x, std::span<const QuadScalar> y) {
  QuadScalar s;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!x[i].is_zero() && !y[i].is_zero()) s += x[i] * y[i];
  return s;
}

Vec add(const Vec& x, const Vec& y) {
  Vec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += y[i];
  return r;
}

Vec sub(const Vec& x, const Vec& y) {
  Vec r(x);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= y[i];
  return r;
}

Vec scale(const QuadScalar& c, const Vec& x) {
  Vec r(x);
  for (auto& v : r) v *= c;
  return r;
}

Vec negate(const Vec& x) {
  Vec r(x);
  for (auto& v : r) v = -v;
  return r;
}

bool is_zero(const Vec& x) {
  for (const auto& v : x)
    if (!v.is_zero()) return false;
  return true;
}

Vec rational_vec(std::initializer_list<Rational> xs) {
  Vec r;
  r.reserve(xs.size());
  for (const auto& q : xs) r.emplace_back(q);
  return r;
}

std::string render(const Vec& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ',';
    s += x[i].str();
  }
  return s + ")";
}

Mat identity(std::size_t n) {
  Mat m(n, Vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat transpose(const Mat& a) {
  if (a.empty()) return {};
  Mat t(a[0].size(), Vec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

Mat multiply(const Mat& a, const Mat& b) {
  const Mat bt = transpose(b);
  Mat c(a.size(), Vec(bt.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < bt.size(); ++j) c[i][j] = dot(a[i], bt[j]);
  return c;
}

Vec apply(const Mat& a, const Vec& x) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = dot(a[i], x);
  return r;
}

Mat negate(const Mat& a) {
  Mat r(a);
  for (auto& row : r) row = negate(row);
  return r;
}

namespace {

// Reduces `row` against an echelon basis; returns true if it stays nonzero
// and appends the reduced row.
bool absorb(std::vector<Vec>& echelon, std::vector<std::size_t>& pivots, Vec row) {
  for (std::size_t k = 0; k < echelon.size(); ++k) {
    const std::size_t p = pivots[k];
    if (row[p].is_zero()) continue;
    const QuadScalar f = row[p] / echelon[k][p];
    for (std::size_t j = 0; j < row.size(); ++j)
      if (!echelon[k][j].is_zero()) row[j] -= f * echelon[k][j];
  }
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) {
      echelon.push_back(std::move(row));
      pivots.push_back(j);
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<std::size_t> independent_rows(const std::vector<Vec>& rows,
                                          std::span<const std::size_t> order) {
  std::vector<std::size_t> idx;
  if (order.empty()) {
    idx.resize(rows.size());
    std::iota(idx.begin(), idx.end(), 0);
  } else {
    idx.assign(order.begin(), order.end());
  }
  std::vector<Vec> echelon;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> chosen;
  const std::size_t n = rows.empty() ? 0 : rows[0].size();
  for (std::size_t i : idx) {
    if (chosen.size() == n) break;
    if (absorb(echelon, pivots, rows[i])) chosen.push_back(i);
  }
  return chosen;
}

std::size_t rank(const std::vector<Vec>& rows) { return independent_rows(rows).size(); }

QuadScalar determinant(Mat a) {
  const std::size_t n = a.size();
  QuadScalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (a[r][c].is_zero()) continue;
      const QuadScalar f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return det;
}

std::optional<Mat> inverse(const Mat& a) {
  const std::size_t n = a.size();
  Mat m(a);
  Mat inv = identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return std::nullopt;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const QuadScalar piv = m[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] /= piv;
      inv[c][j] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c].is_zero()) continue;
      const QuadScalar f = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] -= f * m[c][j];
        inv[r][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

bool is_orthogonal(const Mat& a) {
  const Mat ata = multiply(transpose(a), a);
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (ata[i][j] != QuadScalar(i == j ? 1 : 0)) return false;
  return true;
}

}  // namespace kisskit
