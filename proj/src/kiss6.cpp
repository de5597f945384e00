#include "kisskit/kiss6.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace kisskit {

namespace {

// sqrt(2/5) * c as a radical-10 scalar: sqrt(2/5) = sqrt(10)/5.
QuadScalar r25(const Rational& c) { return QuadScalar(0, c / 5, 10); }

Vec hole(std::initializer_list<int> cs) {
  Vec v;
  for (int c : cs) v.push_back(r25(c));
  return v;
}

std::vector<Vec> d5_holes() {
  std::vector<Vec> out;
  for (int mask = 0; mask < 32; ++mask) {
    Vec v;
    for (int i = 0; i < 5; ++i) v.push_back(r25((mask >> i & 1) ? -1 : 1));
    out.push_back(v);
  }
  return out;
}

std::string parity_tag(const Vec& h) {
  int minus = 0;
  for (const auto& x : h)
    if (sign(x) < 0) ++minus;
  return minus % 2 ? "odd" : "even";
}

HoleSet reflected(const HoleSet& src, Kind5 kind) {
  const Vec ones(5, QuadScalar(1));
  HoleSet out;
  out.base = kind;
  std::vector<Vec> pts;
  for (std::size_t i = 0; i < src.holes.size(); ++i) {
    if (sign(dot(src.holes[i], ones)) < 0) {
      pts.push_back(src.holes[i]);
      out.tags.push_back(src.tags[i]);
    }
  }
  const std::size_t low = pts.size();
  const auto mirrored = reflect_coordinate_sum(pts);
  for (std::size_t i = 0; i < low; ++i) {
    pts.push_back(mirrored[i]);
    out.tags.push_back("reflected-" + out.tags[i]);
  }
  out.holes = PointConfiguration(std::string(to_string(kind)) + "-holes", 5, std::move(pts));
  return out;
}

Rational rational_of(const QuadScalar& x) {
  if (!x.is_rational()) fail(ErrorKind::RadicalMismatch, "expected a rational, got " + x.str());
  return x.rational_part();
}

void check_subset(const HoleSet& holes, const HoleSubset& s) {
  if (s.size() != 16) fail(ErrorKind::InvalidSubset, "subset has " + std::to_string(s.size()) + " holes");
  const QuadScalar bound = Rational(2, 5);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] < 0 || static_cast<std::size_t>(s[i]) >= holes.holes.size())
      fail(ErrorKind::InvalidSubset, "hole index out of range");
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (s[i] == s[j] || dot(holes.holes[s[i]], holes.holes[s[j]]) > bound)
        fail(ErrorKind::InvalidSubset, "holes " + std::to_string(s[i]) + " and " +
                                           std::to_string(s[j]) + " are too close");
  }
}

void extend_cliques(const std::vector<std::uint32_t>& adj, std::uint32_t chosen,
                    std::uint32_t cand, std::vector<std::uint32_t>& out) {
  const int have = std::popcount(chosen);
  if (have == 16) {
    out.push_back(chosen);
    return;
  }
  if (have + std::popcount(cand) < 16) return;
  while (cand) {
    if (have + std::popcount(cand) < 16) return;
    const int v = std::countr_zero(cand);
    cand &= cand - 1;
    extend_cliques(adj, chosen | (1u << v), cand & adj[v], out);
  }
}

}  // namespace

HoleSet holes_for(Kind5 kind) {
  HoleSet out;
  out.base = kind;
  switch (kind) {
    case Kind5::D5: {
      auto pts = d5_holes();
      for (const auto& h : pts) out.tags.push_back(parity_tag(h));
      out.holes = PointConfiguration("D5-holes", 5, std::move(pts));
      return out;
    }
    case Kind5::L5: {
      std::vector<Vec> pts;
      for (const auto& h : d5_holes()) {
        if (sign(h[4]) < 0) {
          pts.push_back(h);
          out.tags.push_back(parity_tag(h));
        }
      }
      for (int i = 0; i < 4; ++i)
        for (int s : {2, -2}) {
          Vec v(5, QuadScalar(0));
          v[i] = r25(s);
          v[4] = r25(1);
          pts.push_back(v);
          out.tags.push_back("axis");
        }
      for (int mask = 0; mask < 16; ++mask) {
        if (std::popcount(static_cast<unsigned>(mask)) % 2) continue;
        Vec v;
        for (int i = 0; i < 4; ++i) v.push_back(r25((mask >> i & 1) ? -1 : 1));
        v.push_back(r25(1));
        pts.push_back(v);
        out.tags.push_back("half");
      }
      out.holes = PointConfiguration("L5-holes", 5, std::move(pts));
      return out;
    }
    case Kind5::Q5: return reflected(holes_for(Kind5::D5), Kind5::Q5);
    case Kind5::R5: return reflected(holes_for(Kind5::L5), Kind5::R5);
  }
  fail(ErrorKind::Usage, "bad kind");
}

HoleReport verify_holes(const PointConfiguration& config, const HoleSet& holes) {
  if (config.radical() != 0 || (holes.holes.radical() != 0 && holes.holes.radical() != 10))
    fail(ErrorKind::RadicalMismatch, "holes live in Q(sqrt 10) against a rational configuration");
  HoleReport r;
  const QuadScalar bound = r25(2);  // 2 sqrt(2/5)
  for (std::size_t j = 0; j < holes.holes.size(); ++j)
    if (dot(holes.holes[j], holes.holes[j]) != QuadScalar(2)) r.bad_norms.push_back(j);
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = 0; j < holes.holes.size(); ++j)
      if (dot(config[i], holes.holes[j]) > bound) r.violations.emplace_back(i, j);
  r.valid = r.bad_norms.empty() && r.violations.empty();
  return r;
}

std::vector<HoleSubset> hole_subsets_16(const HoleSet& holes, Exec exec) {
  const std::size_t n = holes.holes.size();
  if (n > 32) fail(ErrorKind::InvalidSubset, "at most 32 holes supported");
  const Rational bound(2, 5);
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && rational_of(dot(holes.holes[i], holes.holes[j])) <= bound)
        adj[i] |= 1u << j;

  // Branch on the smallest vertex of each clique; higher vertices only.
  auto above = [n](std::size_t v) {
    const std::uint64_t all = (std::uint64_t{1} << n) - 1;
    return static_cast<std::uint32_t>(all & ~((std::uint64_t{2} << v) - 1));
  };
  std::vector<std::vector<std::uint32_t>> per(n);
  if (exec == Exec::Serial) {
    for (std::size_t v = 0; v < n; ++v)
      extend_cliques(adj, 1u << v, adj[v] & above(v), per[v]);
  } else {
    const auto ni = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t v = 0; v < ni; ++v)
      extend_cliques(adj, 1u << v, adj[v] & above(static_cast<std::size_t>(v)), per[v]);
  }
  std::vector<HoleSubset> out;
  for (const auto& masks : per)
    for (std::uint32_t m : masks) {
      HoleSubset s;
      for (std::size_t v = 0; v < n; ++v)
        if (m >> v & 1) s.push_back(static_cast<int>(v));
      out.push_back(s);
    }
  std::sort(out.begin(), out.end());
  return out;
}

PointConfiguration extend_6d(const PointConfiguration& config5, const HoleSet& holes,
                             const HoleSubset& bottom, const HoleSubset& top, std::string name) {
  check_subset(holes, bottom);
  check_subset(holes, top);
  // sqrt(5/8) * c sqrt(10) = (5/2) c.
  auto scaled = [&](int idx, const QuadScalar& last) {
    Vec v;
    for (const auto& x : holes.holes[idx]) {
      if (sgn(x.rational_part()) != 0)
        fail(ErrorKind::RadicalMismatch, "hole coordinate " + x.str());
      v.emplace_back(Rational(5, 2) * x.radical_part());
    }
    v.push_back(last);
    return v;
  };
  const QuadScalar h(0, Rational(1, 2), 3);
  std::vector<Vec> pts;
  for (int i : bottom) pts.push_back(scaled(i, -h));
  for (const auto& p : config5.points()) {
    Vec v = p;
    v.emplace_back(0);
    pts.push_back(v);
  }
  for (int i : top) pts.push_back(scaled(i, h));
  return PointConfiguration(std::move(name), 6, std::move(pts));
}

Classification6 classify_6d_extensions(Kind5 kind) {
  Classification6 c;
  const PointConfiguration base = build5(kind);
  const HoleSet holes = holes_for(kind);
  c.subsets = hole_subsets_16(holes);
  for (std::size_t b = 0; b < c.subsets.size(); ++b)
    for (std::size_t t = 0; t < c.subsets.size(); ++t)
      c.extensions.push_back({b, t,
                              extend_6d(base, holes, c.subsets[b], c.subsets[t],
                                        std::string(to_string(kind)) + "[" + std::to_string(b) +
                                            "," + std::to_string(t) + "]")});
  for (std::size_t i = 0; i < c.extensions.size(); ++i) {
    bool placed = false;
    for (auto& cls : c.classes) {
      if (isometric(c.extensions[cls.front()].config, c.extensions[i].config)) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) c.classes.push_back({i});
  }
  return c;
}

std::size_t all_plus_subset(const HoleSet& holes, const std::vector<HoleSubset>& subsets) {
  const Vec plus = hole({1, 1, 1, 1, 1});
  const auto idx = holes.holes.find(plus);
  if (!idx) fail(ErrorKind::InvalidSubset, "no all-plus hole");
  for (std::size_t s = 0; s < subsets.size(); ++s)
    if (std::find(subsets[s].begin(), subsets[s].end(), static_cast<int>(*idx)) != subsets[s].end())
      return s;
  fail(ErrorKind::InvalidSubset, "no subset contains the all-plus hole");
}

std::optional<std::size_t> unpaired_subset(const HoleSet& holes,
                                           const std::vector<HoleSubset>& subsets) {
  const int n = static_cast<int>(holes.holes.size());
  for (std::size_t s = 0; s < subsets.size(); ++s) {
    HoleSubset comp;
    for (int v = 0; v < n; ++v)
      if (!std::binary_search(subsets[s].begin(), subsets[s].end(), v)) comp.push_back(v);
    if (std::find(subsets.begin(), subsets.end(), comp) == subsets.end()) return s;
  }
  return std::nullopt;
}

PointConfiguration build_named6(const std::string& name) {
  const Kind5 kind = (name == "e6" || name == "leech6") ? Kind5::D5 : Kind5::L5;
  if (name != "e6" && name != "leech6" && name != "cs6a" && name != "cs6b")
    fail(ErrorKind::Parse, "unknown six-dimensional configuration '" + name + "'");
  const HoleSet holes = holes_for(kind);
  const auto subsets = hole_subsets_16(holes);
  const std::size_t plus = all_plus_subset(holes, subsets);
  std::size_t bottom = plus, top = plus;
  if (name == "e6") {
    top = plus == 0 ? 1 : 0;
  } else if (name == "cs6a") {
    bottom = top = *unpaired_subset(holes, subsets);
  }
  return extend_6d(build5(kind), holes, subsets[bottom], subsets[top], name);
}

}  // namespace kisskit
