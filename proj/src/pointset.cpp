#include "kisskit/pointset.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "kisskit/search.hpp"

namespace kisskit {

namespace {

struct VecLess {
  bool operator()(const Vec& x, const Vec& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), StructuralLess{});
  }
};

}  // namespace

PointConfiguration::PointConfiguration(std::string name, std::size_t dim, std::vector<Vec> points)
    : name_(std::move(name)), dim_(dim), points_(std::move(points)) {
  for (const auto& p : points_) {
    if (p.size() != dim_)
      fail(ErrorKind::Parse, name_ + ": point of dimension " + std::to_string(p.size()) +
                                 ", expected " + std::to_string(dim_));
    for (const auto& x : p) {
      if (x.radical() == 0) continue;
      if (radical_ == 0) radical_ = x.radical();
      if (radical_ != x.radical())
        fail(ErrorKind::RadicalMismatch, name_ + ": coordinates mix sqrt(" +
                                             std::to_string(radical_) + ") and sqrt(" +
                                             std::to_string(x.radical()) + ")");
    }
  }
}

PointConfiguration PointConfiguration::renamed(std::string name) const {
  PointConfiguration c = *this;
  c.name_ = std::move(name);
  return c;
}

std::optional<std::size_t> PointConfiguration::find(const Vec& p) const {
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (points_[i] == p) return i;
  return std::nullopt;
}

bool PointConfiguration::contains(const Vec& p) const { return find(p).has_value(); }

bool PointConfiguration::has_duplicates() const {
  std::set<Vec, VecLess> seen;
  for (const auto& p : points_)
    if (!seen.insert(p).second) return true;
  return false;
}

bool PointConfiguration::spans() const { return rank(points_) == dim_; }

std::vector<Vec> canonical_points(const PointConfiguration& c) {
  std::vector<Vec> pts = c.points();
  std::sort(pts.begin(), pts.end(), VecLess{});
  return pts;
}

bool same_point_set(const PointConfiguration& a, const PointConfiguration& b) {
  return a.dim() == b.dim() && canonical_points(a) == canonical_points(b);
}

GramMatrix gram(const std::vector<Vec>& points, Exec exec) {
  const std::size_t m = points.size();
  std::vector<QuadScalar> e(m * m);
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i; j < m; ++j) {
        e[i * m + j] = dot(points[i], points[j]);
        e[j * m + i] = e[i * m + j];
      }
    }
  } else {
    const auto mi = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel for schedule(dynamic, 4)
    for (std::ptrdiff_t i = 0; i < mi; ++i) {
      for (std::size_t j = static_cast<std::size_t>(i); j < m; ++j) {
        e[i * m + j] = dot(points[i], points[j]);
        e[j * m + i] = e[i * m + j];
      }
    }
  }
  return GramMatrix(m, std::move(e));
}

GramMatrix gram(const PointConfiguration& config, Exec exec) { return gram(config.points(), exec); }

namespace {

using Counts = std::map<QuadScalar, std::uint64_t, StructuralLess>;

Spectrum to_spectrum(const Counts& counts, const QuadScalar& norm2) {
  Spectrum s;
  for (const auto& [g, c] : counts) s.push_back({g / norm2, c});
  std::sort(s.begin(), s.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) { return x.t < y.t; });
  return s;
}

}  // namespace

Spectrum spectrum(const GramMatrix& g, Exec exec) {
  const std::size_t m = g.size();
  if (m == 0) return {};
  Counts counts;
  if (exec == Exec::Serial) {
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) ++counts[g(i, j)];
  } else {
    const auto mi = static_cast<std::ptrdiff_t>(m);
#pragma omp parallel
    {
      Counts local;
#pragma omp for schedule(dynamic, 8) nowait
      for (std::ptrdiff_t i = 0; i < mi; ++i)
        for (std::size_t j = static_cast<std::size_t>(i) + 1; j < m; ++j) ++local[g(i, j)];
#pragma omp critical
      for (const auto& [v, c] : local) counts[v] += c;
    }
  }
  return to_spectrum(counts, g(0, 0));
}

Spectrum spectrum(const PointConfiguration& config, Exec exec) {
  return spectrum(gram(config, exec), exec);
}

std::uint64_t total_pairs(const Spectrum& s) {
  std::uint64_t n = 0;
  for (const auto& e : s) n += e.count;
  return n;
}

std::uint64_t count_at(const Spectrum& s, const QuadScalar& t) {
  for (const auto& e : s)
    if (e.t == t) return e.count;
  return 0;
}

std::string render(const Spectrum& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += s[i].t.str() + ":" + std::to_string(s[i].count);
  }
  return out + "}";
}

KissingReport validate_kissing(const PointConfiguration& config, std::optional<QuadScalar> norm2,
                               Exec exec) {
  KissingReport r;
  if (config.size() == 0) {
    r.valid = true;
    return r;
  }
  const GramMatrix g = gram(config, exec);
  r.norm2 = norm2 ? *norm2 : g(0, 0);
  const QuadScalar bound = r.norm2 / 2;
  const std::size_t m = g.size();
  for (std::size_t i = 0; i < m; ++i)
    if (g(i, i) != r.norm2) r.bad_norms.push_back(i);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (g(i, j) > bound) r.violations.emplace_back(i, j);
  r.valid = r.bad_norms.empty() && r.violations.empty();
  return r;
}

std::uint64_t antipodal_count(const PointConfiguration& config) {
  std::set<Vec, VecLess> pts(config.points().begin(), config.points().end());
  std::uint64_t n = 0;
  for (const auto& p : pts)
    if (pts.count(negate(p))) ++n;
  return n / 2;
}

std::vector<Layer> split_layers(const PointConfiguration& config, const Vec& functional) {
  std::vector<Layer> layers;
  for (std::size_t i = 0; i < config.size(); ++i) {
    const QuadScalar h = dot(config[i], functional);
    auto it = std::find_if(layers.begin(), layers.end(), [&h](const Layer& l) { return l.height == h; });
    if (it == layers.end()) {
      layers.push_back({h, {}, {}});
      it = std::prev(layers.end());
    }
    it->indices.push_back(i);
  }
  std::sort(layers.begin(), layers.end(),
            [](const Layer& a, const Layer& b) { return a.height > b.height; });
  for (auto& l : layers) {
    std::vector<Vec> pts;
    for (std::size_t i : l.indices) pts.push_back(config[i]);
    l.points = PointConfiguration(config.name() + "@" + l.height.str(), config.dim(), std::move(pts));
  }
  return layers;
}

std::vector<Vec> reflect_hyperplane(const std::vector<Vec>& points, const Vec& w) {
  if (dot(w, w) != QuadScalar(1)) fail(ErrorKind::NormalNotUnit, "<w,w> = " + dot(w, w).str());
  std::vector<Vec> out;
  out.reserve(points.size());
  for (const auto& v : points) out.push_back(sub(v, scale(2 * dot(v, w), w)));
  return out;
}

std::vector<Vec> reflect_coordinate_sum(const std::vector<Vec>& points) {
  std::vector<Vec> out;
  out.reserve(points.size());
  for (const auto& v : points) {
    QuadScalar s;
    for (const auto& x : v) s += x;
    const QuadScalar shift = 2 * s / QuadScalar(static_cast<long>(v.size()));
    Vec r = v;
    for (auto& x : r) x -= shift;
    out.push_back(std::move(r));
  }
  return out;
}

Vec coordinate_sum_normal(std::size_t n) {
  const QuadScalar c = QuadScalar::sqrt_of(frac(1, static_cast<long>(n)));
  return Vec(n, c);
}

PointConfiguration replace_layer(const PointConfiguration& config, const Vec& functional,
                                 const QuadScalar& height, const std::vector<Vec>& new_points,
                                 std::string name) {
  for (const auto& p : new_points)
    if (dot(p, functional) != height)
      fail(ErrorKind::HeightMismatch, render(p) + " is not at height " + height.str());
  std::vector<Vec> pts;
  for (const auto& p : config.points())
    if (dot(p, functional) != height) pts.push_back(p);
  pts.insert(pts.end(), new_points.begin(), new_points.end());
  return PointConfiguration(std::move(name), config.dim(), std::move(pts));
}

std::optional<std::vector<int>> isometric(const PointConfiguration& a, const PointConfiguration& b) {
  if (!a.spans()) fail(ErrorKind::NotSpanning, a.name());
  if (!b.spans()) fail(ErrorKind::NotSpanning, b.name());
  if (a.size() != b.size() || a.dim() != b.dim()) return std::nullopt;
  const auto [ga, gb] = encode(gram(a), gram(b));
  EmbeddingSearch search(ga, gb, /*bijective=*/true);
  std::vector<int> img = search.first();
  if (img.empty() && a.size() > 0) return std::nullopt;
  return img;
}

}  // namespace kisskit
