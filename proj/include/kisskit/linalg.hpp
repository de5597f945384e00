// Dense exact linear algebra over Q(sqrt N).

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "kisskit/exact.hpp"

namespace kisskit {

using Vec = std::vector<QuadScalar>;
/// Row-major; m[i] is row i.
using Mat = std::vector<Vec>;

QuadScalar dot(std::span<const QuadScalar> x, std::span<const QuadScalar> y);
Vec add(const Vec& x, const Vec& y);
Vec sub(const Vec& x, const Vec& y);
Vec scale(const QuadScalar& c, const Vec& x);
Vec negate(const Vec& x);
bool is_zero(const Vec& x);

Vec rational_vec(std::initializer_list<Rational> xs);
std::string render(const Vec& x);

Mat identity(std::size_t n);
Mat transpose(const Mat& a);
Mat multiply(const Mat& a, const Mat& b);
Vec apply(const Mat& a, const Vec& x);
Mat negate(const Mat& a);

/// Rank of the row set.
std::size_t rank(const std::vector<Vec>& rows);
/// Indices of a maximal linearly independent subset, greedily in the given
/// order.
std::vector<std::size_t> independent_rows(const std::vector<Vec>& rows,
                                          std::span<const std::size_t> order = {});
QuadScalar determinant(Mat a);
/// Inverse of a square matrix; nullopt when singular.
std::optional<Mat> inverse(const Mat& a);
/// True iff a^T a = I.
bool is_orthogonal(const Mat& a);

}  // namespace kisskit
