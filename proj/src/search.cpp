#include "kisskit/search.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

namespace kisskit {

namespace {

IntGram encode_with(const GramMatrix& g,
                    std::unordered_map<QuadScalar, std::int32_t, QuadScalarHash>& dict) {
  IntGram r;
  r.m = g.size();
  r.ids.resize(r.m * r.m);
  for (std::size_t i = 0; i < r.m; ++i) {
    for (std::size_t j = i; j < r.m; ++j) {
      auto [it, inserted] = dict.try_emplace(g(i, j), static_cast<std::int32_t>(dict.size()));
      r.ids[i * r.m + j] = it->second;
      r.ids[j * r.m + i] = it->second;
    }
  }
  return r;
}

// Sorted multiset of a row's entries, interned across both matrices.
void fingerprints(const IntGram& a, const IntGram& b, std::vector<std::int32_t>& fa,
                  std::vector<std::int32_t>& fb) {
  std::map<std::vector<std::int32_t>, std::int32_t> dict;
  auto run = [&dict](const IntGram& g, std::vector<std::int32_t>& out) {
    out.resize(g.m);
    std::vector<std::int32_t> row(g.m);
    for (std::size_t i = 0; i < g.m; ++i) {
      for (std::size_t j = 0; j < g.m; ++j) row[j] = g(i, j);
      std::sort(row.begin(), row.end());
      // Diagonal first so points of different norms never share a print.
      row.insert(row.begin(), g(i, i));
      auto [it, inserted] = dict.try_emplace(row, static_cast<std::int32_t>(dict.size()));
      out[i] = it->second;
      row.erase(row.begin());
    }
  };
  run(a, fa);
  run(b, fb);
}

}  // namespace

std::pair<IntGram, IntGram> encode(const GramMatrix& a, const GramMatrix& b) {
  std::unordered_map<QuadScalar, std::int32_t, QuadScalarHash> dict;
  IntGram ea = encode_with(a, dict);
  IntGram eb = encode_with(b, dict);
  return {std::move(ea), std::move(eb)};
}

IntGram encode(const GramMatrix& a) {
  std::unordered_map<QuadScalar, std::int32_t, QuadScalarHash> dict;
  return encode_with(a, dict);
}

struct EmbeddingSearch::State {
  std::vector<int> img;
  std::vector<char> used;
  std::vector<std::int32_t> cp;
  std::vector<std::int32_t> ch;
  std::size_t assigned = 0;
};

EmbeddingSearch::EmbeddingSearch(const IntGram& pattern, const IntGram& host, bool bijective)
    : pattern_(pattern), host_(host), bijective_(bijective) {
  if (bijective_) {
    fingerprints(pattern_, host_, initial_p_, initial_h_);
  } else {
    initial_p_.resize(pattern_.m);
    initial_h_.resize(host_.m);
    for (std::size_t i = 0; i < pattern_.m; ++i) initial_p_[i] = pattern_(i, i);
    for (std::size_t i = 0; i < host_.m; ++i) initial_h_[i] = host_(i, i);
  }
}

bool EmbeddingSearch::assign(State& s, int p, int h) const {
  if (s.img[p] >= 0 || s.used[h] || s.cp[p] != s.ch[h]) return false;
  s.img[p] = h;
  s.used[h] = 1;
  ++s.assigned;

  std::unordered_map<std::uint64_t, std::int32_t> ids;
  ids.reserve(pattern_.m * 2);
  auto key = [](std::int32_t cell, std::int32_t g) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(cell)) << 32) |
           static_cast<std::uint32_t>(g);
  };
  for (std::size_t x = 0; x < pattern_.m; ++x) {
    auto [it, inserted] =
        ids.try_emplace(key(s.cp[x], pattern_(x, p)), static_cast<std::int32_t>(ids.size()));
    s.cp[x] = it->second;
  }
  const std::size_t ncells = ids.size();
  std::vector<std::int32_t> count(ncells, 0);
  for (std::size_t x = 0; x < pattern_.m; ++x) ++count[s.cp[x]];
  for (std::size_t y = 0; y < host_.m; ++y) {
    if (s.ch[y] < 0) continue;
    auto it = ids.find(key(s.ch[y], host_(y, h)));
    if (it == ids.end()) {
      if (bijective_) return false;
      s.ch[y] = -1;
    } else {
      s.ch[y] = it->second;
      --count[it->second];
    }
  }
  for (std::int32_t c : count)
    if (bijective_ ? c != 0 : c > 0) return false;
  for (std::size_t x = 0; x < pattern_.m; ++x)
    if (s.img[x] >= 0 && s.cp[x] != s.ch[s.img[x]]) return false;
  return true;
}

bool EmbeddingSearch::search(State& s, const Visitor& visit, std::uint64_t& visited) const {
  if (s.assigned == pattern_.m) {
    ++visited;
    return visit(s.img);
  }
  std::unordered_map<std::int32_t, std::int32_t> free_hosts;
  for (std::size_t y = 0; y < host_.m; ++y)
    if (!s.used[y] && s.ch[y] >= 0) ++free_hosts[s.ch[y]];

  int best = -1;
  std::int32_t best_count = 0;
  std::int32_t worst_count = 0;
  for (std::size_t x = 0; x < pattern_.m; ++x) {
    if (s.img[x] >= 0) continue;
    auto it = free_hosts.find(s.cp[x]);
    const std::int32_t c = it == free_hosts.end() ? 0 : it->second;
    if (c == 0) return true;
    worst_count = std::max(worst_count, c);
    if (best < 0 || c < best_count) {
      best = static_cast<int>(x);
      best_count = c;
    }
  }

  if (worst_count == 1) {
    // Every remaining pattern point has exactly one candidate: complete the
    // map directly and check the pairs among the forced points.
    std::unordered_map<std::int32_t, int> host_of_cell;
    for (std::size_t y = 0; y < host_.m; ++y)
      if (!s.used[y] && s.ch[y] >= 0) host_of_cell[s.ch[y]] = static_cast<int>(y);
    std::vector<int> forced;
    for (std::size_t x = 0; x < pattern_.m; ++x) {
      if (s.img[x] >= 0) continue;
      const int y = host_of_cell.at(s.cp[x]);
      if (s.used[y]) return true;
      s.img[x] = y;
      s.used[y] = 1;
      forced.push_back(static_cast<int>(x));
    }
    for (std::size_t i = 0; i < forced.size(); ++i)
      for (std::size_t j = i + 1; j < forced.size(); ++j)
        if (pattern_(forced[i], forced[j]) != host_(s.img[forced[i]], s.img[forced[j]]))
          return true;
    ++visited;
    return visit(s.img);
  }

  for (std::size_t y = 0; y < host_.m; ++y) {
    if (s.used[y] || s.ch[y] != s.cp[best]) continue;
    State next = s;
    if (!assign(next, best, static_cast<int>(y))) continue;
    if (!search(next, visit, visited)) return false;
  }
  return true;
}

std::uint64_t EmbeddingSearch::run(std::span<const std::pair<int, int>> prefix,
                                   const Visitor& visit) const {
  std::uint64_t visited = 0;
  if (pattern_.m > host_.m || (bijective_ && pattern_.m != host_.m)) return 0;
  State s;
  s.img.assign(pattern_.m, -1);
  s.used.assign(host_.m, 0);
  s.cp = initial_p_;
  s.ch = initial_h_;
  if (bijective_) {
    std::vector<std::int32_t> balance;
    for (auto c : s.cp) {
      if (static_cast<std::size_t>(c) >= balance.size()) balance.resize(c + 1, 0);
      ++balance[c];
    }
    for (auto c : s.ch) {
      if (static_cast<std::size_t>(c) >= balance.size()) return 0;
      --balance[c];
    }
    for (auto b : balance)
      if (b != 0) return 0;
  }
  for (const auto& [p, h] : prefix)
    if (!assign(s, p, h)) return 0;
  search(s, visit, visited);
  return visited;
}

std::vector<int> EmbeddingSearch::first(std::span<const std::pair<int, int>> prefix) const {
  std::vector<int> found;
  run(prefix, [&found](std::span<const int> img) {
    found.assign(img.begin(), img.end());
    return false;
  });
  return found;
}

}  // namespace kisskit
