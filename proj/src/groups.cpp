#include "kisskit/groups.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "kisskit/search.hpp"

namespace kisskit {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm invert(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::string render(const Perm& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

// ---------------------------------------------------------------------------
// Schreier-Sims

StabilizerChain::StabilizerChain(std::size_t degree, const std::vector<Perm>& generators)
    : degree_(degree) {
  std::vector<Perm> gens;
  for (const auto& g : generators) {
    if (g.size() != degree) throw std::invalid_argument("generator degree mismatch");
    if (!is_identity(g)) gens.push_back(g);
  }
  if (gens.empty()) return;

  // Initial base: every generator moves some base point.
  for (const auto& g : gens) {
    bool moves = false;
    for (int b : base_)
      if (g[b] != b) moves = true;
    if (moves) continue;
    for (std::size_t x = 0; x < degree_; ++x) {
      if (g[x] != static_cast<int>(x)) {
        base_.push_back(static_cast<int>(x));
        break;
      }
    }
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    for (const auto& g : gens) {
      bool fixes_prefix = true;
      for (std::size_t k = 0; k < i; ++k)
        if (g[base_[k]] != base_[k]) fixes_prefix = false;
      if (fixes_prefix) levels_[i].gens.push_back(g);
    }
    rebuild_orbit(i);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(base_.size()) - 1;
  while (i >= 0) {
    bool restart = false;
    Level& lv = levels_[i];
    for (std::size_t oi = 0; !restart && oi < lv.orbit.size(); ++oi) {
      const int beta = lv.orbit[oi];
      const Perm& u_beta = lv.transversal[beta];
      for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
        const Perm g1 = compose(lv.gens[gi], u_beta);
        const Perm& u1 = lv.transversal[g1[base_[i]]];
        if (g1 == u1) continue;
        auto [h, j] = strip(compose(invert(u1), g1), static_cast<std::size_t>(i) + 1);
        if (j == base_.size()) {
          if (is_identity(h)) continue;
          for (std::size_t x = 0; x < degree_; ++x) {
            if (h[x] != static_cast<int>(x)) {
              base_.push_back(static_cast<int>(x));
              levels_.emplace_back();
              break;
            }
          }
        }
        for (std::size_t l = static_cast<std::size_t>(i) + 1; l <= j; ++l) {
          levels_[l].gens.push_back(h);
          rebuild_orbit(l);
        }
        i = static_cast<std::ptrdiff_t>(j);
        restart = true;
        break;
      }
    }
    if (!restart) --i;
  }
}

void StabilizerChain::rebuild_orbit(std::size_t level) {
  Level& lv = levels_[level];
  const int b = base_[level];
  lv.transversal.assign(degree_, Perm());
  lv.orbit.clear();
  lv.transversal[b] = identity_perm(degree_);
  lv.orbit.push_back(b);
  for (std::size_t k = 0; k < lv.orbit.size(); ++k) {
    const int x = lv.orbit[k];
    for (const auto& g : lv.gens) {
      const int y = g[x];
      if (!lv.transversal[y].empty()) continue;
      lv.transversal[y] = compose(g, lv.transversal[x]);
      lv.orbit.push_back(y);
    }
  }
}

std::pair<Perm, std::size_t> StabilizerChain::strip(Perm g, std::size_t from) const {
  for (std::size_t l = from; l < base_.size(); ++l) {
    const int beta = g[base_[l]];
    const Perm& u = levels_[l].transversal[beta];
    if (u.empty()) return {std::move(g), l};
    g = compose(invert(u), g);
  }
  return {std::move(g), base_.size()};
}

Integer StabilizerChain::order() const {
  Integer n = 1;
  for (const auto& lv : levels_) n *= static_cast<unsigned long>(lv.orbit.size());
  return n;
}

std::vector<std::size_t> StabilizerChain::orbit_sizes() const {
  std::vector<std::size_t> r;
  for (const auto& lv : levels_) r.push_back(lv.orbit.size());
  return r;
}

bool StabilizerChain::contains(const Perm& g) const {
  if (g.size() != degree_) return false;
  auto [h, j] = strip(g, 0);
  return j == base_.size() && is_identity(h);
}

AutGroup group_from_generators(std::size_t degree, std::vector<Perm> generators) {
  AutGroup g;
  g.degree = degree;
  g.chain = StabilizerChain(degree, generators);
  g.order = g.chain.order();
  g.generators = std::move(generators);
  return g;
}

// ---------------------------------------------------------------------------
// Automorphism search

namespace {

struct VecOrder {
  bool operator()(const Vec& x, const Vec& y) const {
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), StructuralLess{});
  }
};

std::vector<int> orbit_of(int start, std::size_t degree, const std::vector<Perm>& gens) {
  std::vector<char> seen(degree, 0);
  std::vector<int> orb{start};
  seen[start] = 1;
  for (std::size_t k = 0; k < orb.size(); ++k)
    for (const auto& g : gens) {
      const int y = g[orb[k]];
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
  return orb;
}

}  // namespace

AutGroup automorphisms(const PointConfiguration& config) {
  if (!config.spans()) fail(ErrorKind::NotSpanning, config.name());
  const std::size_t m = config.size();
  const IntGram g = encode(gram(config));

  // Base: a spanning subset, rarest row fingerprints first.  Fixing a
  // spanning set pointwise leaves only the identity.
  std::map<std::vector<std::int32_t>, std::size_t> print_count;
  std::vector<std::vector<std::int32_t>> prints(m);
  for (std::size_t i = 0; i < m; ++i) {
    prints[i].assign(g.ids.begin() + static_cast<std::ptrdiff_t>(i * m),
                     g.ids.begin() + static_cast<std::ptrdiff_t>((i + 1) * m));
    std::sort(prints[i].begin(), prints[i].end());
    ++print_count[prints[i]];
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return print_count[prints[a]] < print_count[prints[b]];
  });
  const std::vector<std::size_t> base = independent_rows(config.points(), order);

  EmbeddingSearch search(g, g, /*bijective=*/true);
  std::vector<std::vector<Perm>> level_gens(base.size());
  Integer product = 1;
  for (std::size_t i = base.size(); i-- > 0;) {
    std::vector<Perm> stab;  // generators fixing base[0..i-1]
    for (std::size_t k = i; k < base.size(); ++k)
      stab.insert(stab.end(), level_gens[k].begin(), level_gens[k].end());
    std::vector<char> in_orbit(m, 0);
    for (int x : orbit_of(static_cast<int>(base[i]), m, stab)) in_orbit[x] = 1;

    std::vector<std::pair<int, int>> prefix;
    for (std::size_t k = 0; k < i; ++k)
      prefix.emplace_back(static_cast<int>(base[k]), static_cast<int>(base[k]));
    prefix.emplace_back(static_cast<int>(base[i]), 0);
    for (std::size_t c = 0; c < m; ++c) {
      if (in_orbit[c]) continue;
      prefix.back().second = static_cast<int>(c);
      std::vector<int> found = search.first(prefix);
      if (found.empty()) continue;
      level_gens[i].push_back(found);
      stab.push_back(found);
      std::fill(in_orbit.begin(), in_orbit.end(), 0);
      for (int x : orbit_of(static_cast<int>(base[i]), m, stab)) in_orbit[x] = 1;
    }
    product *= static_cast<unsigned long>(std::count(in_orbit.begin(), in_orbit.end(), 1));
  }

  std::vector<Perm> gens;
  for (auto& lg : level_gens) gens.insert(gens.end(), lg.begin(), lg.end());
  AutGroup group = group_from_generators(m, std::move(gens));
  if (group.order != product)
    throw std::logic_error("stabilizer chain order disagrees with orbit product");
  return group;
}

std::optional<std::vector<Perm>> enumerate_elements(const AutGroup& group, std::size_t limit) {
  std::set<Perm> seen{identity_perm(group.degree)};
  std::deque<Perm> queue{identity_perm(group.degree)};
  while (!queue.empty()) {
    const Perm p = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : group.generators) {
      Perm q = compose(g, p);
      if (seen.insert(q).second) {
        if (seen.size() > limit) return std::nullopt;
        queue.push_back(std::move(q));
      }
    }
  }
  return std::vector<Perm>(seen.begin(), seen.end());
}

std::vector<std::vector<int>> orbits(std::size_t degree, const std::vector<Perm>& generators) {
  std::vector<char> seen(degree, 0);
  std::vector<std::vector<int>> out;
  for (std::size_t x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    auto orb = orbit_of(static_cast<int>(x), degree, generators);
    for (int y : orb) seen[y] = 1;
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

bool is_transitive(const AutGroup& group, std::size_t m) {
  if (m == 0) return true;
  return orbit_of(0, m, group.generators).size() == m;
}

Mat linear_map_from_images(const std::vector<Vec>& src, const std::vector<Vec>& dst) {
  const std::size_t n = src.empty() ? 0 : src[0].size();
  const auto basis = independent_rows(src);
  if (basis.size() != n) fail(ErrorKind::NotSpanning, "source points do not span");
  Mat p, q;
  for (std::size_t i : basis) {
    p.push_back(src[i]);
    q.push_back(dst[i]);
  }
  // A P^T = Q^T.
  const auto pinv = inverse(transpose(p));
  return multiply(transpose(q), *pinv);
}

Mat realize_orthogonal(const PointConfiguration& config, const Perm& perm) {
  if (!config.spans()) fail(ErrorKind::NotSpanning, config.name());
  const GramMatrix g = gram(config);
  for (std::size_t i = 0; i < config.size(); ++i)
    for (std::size_t j = i; j < config.size(); ++j)
      if (g(i, j) != g(perm[i], perm[j]))
        fail(ErrorKind::NotAnAutomorphism, "Gram entry (" + std::to_string(i) + "," +
                                               std::to_string(j) + ") not preserved");
  std::vector<Vec> images;
  for (std::size_t i = 0; i < config.size(); ++i) images.push_back(config[perm[i]]);
  Mat a = linear_map_from_images(config.points(), images);
  for (std::size_t i = 0; i < config.size(); ++i)
    if (kisskit::apply(a, config[i]) != images[i])
      fail(ErrorKind::NotAnAutomorphism, "no linear map realizes the permutation");
  return a;
}

Perm point_permutation(const PointConfiguration& config, const Mat& a) {
  std::map<Vec, int, VecOrder> index;
  for (std::size_t i = 0; i < config.size(); ++i) index.emplace(config[i], static_cast<int>(i));
  Perm p(config.size());
  for (std::size_t i = 0; i < config.size(); ++i) {
    auto it = index.find(kisskit::apply(a, config[i]));
    if (it == index.end())
      fail(ErrorKind::NotAnAutomorphism, "image of " + render(config[i]) + " is not a point");
    p[i] = it->second;
  }
  return p;
}

std::vector<Perm> embeddings(const PointConfiguration& pattern, const PointConfiguration& host) {
  const auto [gp, gh] = encode(gram(pattern), gram(host));
  EmbeddingSearch search(gp, gh, /*bijective=*/false);
  std::vector<Perm> out;
  search.run({}, [&out](std::span<const int> img) {
    out.emplace_back(img.begin(), img.end());
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<std::size_t>> equivalent_mod_aut(const std::vector<Perm>& maps,
                                                         const AutGroup& group) {
  std::map<Perm, std::size_t> index;
  for (std::size_t i = 0; i < maps.size(); ++i) index.emplace(maps[i], i);
  std::vector<std::size_t> parent(maps.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < maps.size(); ++i) {
    for (const auto& g : group.generators) {
      Perm moved(maps[i].size());
      for (std::size_t k = 0; k < moved.size(); ++k) moved[k] = g[maps[i][k]];
      auto it = index.find(moved);
      if (it == index.end())
        throw std::invalid_argument("map list is not closed under the group");
      const std::size_t a = find(i), b = find(it->second);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < maps.size(); ++i) classes[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

}  // namespace kisskit
