// Point configurations with exact coordinates: Gram matrices, kissing
// validity, inner-product spectra, layers, reflections and isometry testing.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kisskit/exact.hpp"
#include "kisskit/linalg.hpp"

namespace kisskit {

/// Execution policy for the pair kernels.  Serial is the reference
/// implementation; Parallel splits rows across OpenMP threads and must
/// produce identical results.
enum class Exec { Serial, Parallel };

class PointConfiguration {
 public:
  PointConfiguration() = default;
  /// All points must have `dim` coordinates sharing one radical.
  PointConfiguration(std::string name, std::size_t dim, std::vector<Vec> points);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return dim_; }
  std::uint32_t radical() const { return radical_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<Vec>& points() const { return points_; }
  const Vec& operator[](std::size_t i) const { return points_[i]; }

  PointConfiguration renamed(std::string name) const;
  bool contains(const Vec& p) const;
  /// Index of p, if present.
  std::optional<std::size_t> find(const Vec& p) const;
  bool has_duplicates() const;
  /// Rank of the point set equals the dimension.
  bool spans() const;

 private:
  std::string name_;
  std::size_t dim_ = 0;
  std::uint32_t radical_ = 0;
  std::vector<Vec> points_;
};

/// Order-insensitive equality of point sets (multiplicity counts).
bool same_point_set(const PointConfiguration& a, const PointConfiguration& b);
/// Points sorted by the structural order; canonical form for set comparisons.
std::vector<Vec> canonical_points(const PointConfiguration& c);

class GramMatrix {
 public:
  GramMatrix() = default;
  GramMatrix(std::size_t m, std::vector<QuadScalar> entries)
      : m_(m), entries_(std::move(entries)) {}
  std::size_t size() const { return m_; }
  const QuadScalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * m_ + j]; }
  bool operator==(const GramMatrix&) const = default;

 private:
  std::size_t m_ = 0;
  std::vector<QuadScalar> entries_;
};

GramMatrix gram(const PointConfiguration& config, Exec exec = Exec::Parallel);
GramMatrix gram(const std::vector<Vec>& points, Exec exec = Exec::Parallel);

struct SpectrumEntry {
  QuadScalar t;
  std::uint64_t count = 0;
  bool operator==(const SpectrumEntry&) const = default;
};
/// Sorted by t, strictly increasing.
using Spectrum = std::vector<SpectrumEntry>;

/// Normalized inner products t = <u,v>/|u|^2 over unordered distinct pairs.
/// Assumes all points share one squared norm (taken from point 0).
Spectrum spectrum(const PointConfiguration& config, Exec exec = Exec::Parallel);
Spectrum spectrum(const GramMatrix& g, Exec exec = Exec::Parallel);
std::uint64_t total_pairs(const Spectrum& s);
std::uint64_t count_at(const Spectrum& s, const QuadScalar& t);
std::string render(const Spectrum& s);

struct KissingReport {
  bool valid = false;
  QuadScalar norm2;  // the common squared norm checked against
  std::vector<std::size_t> bad_norms;
  std::vector<std::pair<std::size_t, std::size_t>> violations;  // i < j
};

/// Every point has squared norm `norm2` (default: that of point 0) and every
/// off-diagonal inner product is at most norm2/2.
KissingReport validate_kissing(const PointConfiguration& config,
                               std::optional<QuadScalar> norm2 = std::nullopt,
                               Exec exec = Exec::Parallel);

std::uint64_t antipodal_count(const PointConfiguration& config);

struct Layer {
  QuadScalar height;
  std::vector<std::size_t> indices;
  PointConfiguration points;
};

/// Partition by the exact value of <p, functional>; heights descending.
std::vector<Layer> split_layers(const PointConfiguration& config, const Vec& functional);

/// v -> v - 2<v,w>w; requires <w,w> = 1 exactly.
std::vector<Vec> reflect_hyperplane(const std::vector<Vec>& points, const Vec& w);
/// Reflection across the coordinate-sum hyperplane written without the
/// normal's sqrt(n): subtracts 2s/n from every coordinate, s the coordinate
/// sum.  Works for points over any radical.
std::vector<Vec> reflect_coordinate_sum(const std::vector<Vec>& points);
/// The unit normal (1,...,1)/sqrt(n) of the coordinate-sum hyperplane.
Vec coordinate_sum_normal(std::size_t n);

/// Removes the layer at `height` and appends `new_points`, which must all lie
/// at that height.
PointConfiguration replace_layer(const PointConfiguration& config, const Vec& functional,
                                 const QuadScalar& height, const std::vector<Vec>& new_points,
                                 std::string name);

/// Point bijection pi with Gram(a)[i][j] = Gram(b)[pi(i)][pi(j)], or nullopt.
/// Both configurations must span their space.
std::optional<std::vector<int>> isometric(const PointConfiguration& a,
                                          const PointConfiguration& b);

}  // namespace kisskit
