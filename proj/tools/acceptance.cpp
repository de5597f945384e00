// Acceptance suite: one PASS/FAIL line per criterion.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "kisskit/groups.hpp"
#include "kisskit/io.hpp"
#include "kisskit/kiss5.hpp"
#include "kisskit/kiss6.hpp"
#include "kisskit/kiss9.hpp"
#include "kisskit/pack5.hpp"

#ifndef KISSKIT_DATA_DIR
#define KISSKIT_DATA_DIR "data"
#endif

using namespace kisskit;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string data(const std::string& file) { return std::string(KISSKIT_DATA_DIR) + "/" + file; }

PointConfiguration fixture(const std::string& stem) { return read_kcfg(read_file(data(stem + ".kcfg")), stem); }

std::string lower(std::string s) {
  for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

Outcome spectra5() {
  Outcome o;
  const char* ts[9] = {"-1", "-4/5", "-3/4", "-1/2", "-3/10", "-1/4", "0", "1/5", "1/2"};
  const std::uint64_t rows[4][9] = {{20, 0, 0, 240, 0, 0, 280, 0, 240},
                                    {12, 0, 32, 192, 0, 32, 272, 0, 240},
                                    {10, 30, 0, 180, 60, 0, 250, 10, 240},
                                    {6, 30, 20, 144, 60, 28, 242, 10, 240}};
  const auto kinds = all_kinds5();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto s = spectrum(build5(kinds[i]));
    std::uint64_t sum = 0;
    for (int j = 0; j < 9; ++j) {
      o.require(count_at(s, QuadScalar::parse(ts[j])) == rows[i][j],
                std::string(to_string(kinds[i])) + " count at " + ts[j]);
      sum += rows[i][j];
    }
    o.require(total_pairs(s) == 780 && sum == 780, std::string(to_string(kinds[i])) + " row sum");
  }
  return o;
}

Outcome coordinates() {
  Outcome o;
  for (Kind5 k : {Kind5::Q5, Kind5::R5}) {
    const std::string name = to_string(k);
    o.require(same_point_set(build5(k), fixture(lower(name))), name + " differs from fixture");
  }
  return o;
}

Outcome non_isometry() {
  Outcome o;
  const auto kinds = all_kinds5();
  const std::uint64_t antipodal[4] = {20, 12, 10, 6};
  for (std::size_t i = 0; i < 4; ++i) {
    const auto a = build5(kinds[i]);
    o.require(antipodal_count(a) == antipodal[i], std::string(to_string(kinds[i])) + " antipodal pairs");
    for (std::size_t j = i + 1; j < 4; ++j)
      o.require(!isometric(a, build5(kinds[j])),
                std::string(to_string(kinds[i])) + " ~ " + to_string(kinds[j]));
  }
  return o;
}

Outcome symmetry_orders() {
  Outcome o;
  const long orders[4] = {3840, 384, 240, 48};
  const auto kinds = all_kinds5();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto g = automorphisms(build5(kinds[i]));
    o.require(g.order == orders[i], std::string(to_string(kinds[i])) + " order " + g.order.get_str());
    const auto e = enumerate_elements(g, 10000);
    o.require(e && Integer(e->size()) == g.order, std::string(to_string(kinds[i])) + " element count");
  }
  const auto g9 = automorphisms(build_kissing9(build_code_table()));
  o.require(g9.order == 73728, "leech9 order " + g9.order.get_str());
  const auto m9 = automorphisms(build_modified9());
  o.require(m9.order == 8192, "modified9 order " + m9.order.get_str());
  return o;
}

Outcome holes() {
  Outcome o;
  const std::size_t expected[4] = {2, 3, 0, 0};
  const auto kinds = all_kinds5();
  for (std::size_t i = 0; i < 4; ++i) {
    const auto h = holes_for(kinds[i]);
    o.require(verify_holes(build5(kinds[i]), h).valid, std::string(to_string(kinds[i])) + " holes invalid");
    const auto n = hole_subsets_16(h).size();
    o.require(n == expected[i], std::string(to_string(kinds[i])) + " subsets " + std::to_string(n));
  }
  return o;
}

Outcome extensions() {
  Outcome o;
  const auto d = classify_6d_extensions(Kind5::D5);
  for (const auto& e : d.extensions)
    o.require(e.config.size() == 72 && validate_kissing(e.config).valid, e.config.name() + " invalid");
  o.require(d.classes.size() == 2, "D5 classes " + std::to_string(d.classes.size()));
  const auto l = classify_6d_extensions(Kind5::L5);
  for (const auto& e : l.extensions)
    o.require(e.config.size() == 72 && validate_kissing(e.config).valid, e.config.name() + " invalid");
  const auto u = unpaired_subset(holes_for(Kind5::L5), l.subsets);
  o.require(u.has_value(), "L5 has no unpaired subset");
  o.require(l.classes.size() == 3, "L5 classes " + std::to_string(l.classes.size()));
  bool isolated = false;
  for (const auto& cls : l.classes)
    if (cls.size() == 1 && u && l.extensions[cls[0]].bottom == *u && l.extensions[cls[0]].top == *u)
      isolated = true;
  o.require(isolated, "unpaired subset on both sides is not isolated");
  return o;
}

Outcome packings() {
  Outcome o;
  const std::pair<const char*, Kind5> cases[2] = {{"q5", Kind5::Q5}, {"r5", Kind5::R5}};
  const std::size_t minimal[2] = {2, 4};
  for (int i = 0; i < 2; ++i) {
    const std::string name = cases[i].first;
    const auto cc = read_kcol(read_file(data(name + ".kcol")), name);
    o.require(validate_coloring(cc).valid, name + " coloring invalid");
    const auto p = assemble_packing(cc);
    o.require(min_distance(p) == QuadScalar::sqrt_of(2), name + " min distance");
    o.require(density(p).q == Rational(1, 30), name + " density");
    for (std::size_t t = 0; t < p.translates.size(); ++t)
      o.require(local_kissing(p, t).kind == cases[i].second, name + " local kissing");
    for (std::size_t s = 0; s < cc.sites.size(); ++s)
      o.require(vertex_arrangement(cc, s).predicted == cases[i].second, name + " arrangement");
    o.require(period_minimality(p).minimal_m == minimal[i], name + " period");
  }
  return o;
}

Outcome symmetry_tables() {
  Outcome o;
  for (Kind5 k : {Kind5::Q5, Kind5::R5}) {
    const auto r = verify_symmetry_coset_table(k);
    o.require(r.ok, std::string(to_string(k)) + " coset table");
  }
  const auto p = table_packing(Kind5::Q5);
  const Mat minus = negate(identity(5));
  o.require(!verify_affine_symmetry(p, minus, Vec(5)), "-I with t = 0 accepted for Q5");
  o.require(verify_affine_symmetry(p, minus, p.translates[1]), "-I with x1 rejected for Q5");
  return o;
}

Outcome uniqueness() {
  Outcome o;
  for (Kind5 k : all_kinds5()) {
    const std::size_t n = uniform_uniqueness(build5(k)).unique_count();
    o.require(n == (k == Kind5::L5 ? 24u : 40u), std::string(to_string(k)) + " unique " + std::to_string(n));
  }
  return o;
}

Outcome nine() {
  Outcome o;
  const auto code = build_code_table();
  o.require(same_words(code, build_code_f9()), "table code differs from F9 code");
  const auto g = code_automorphisms(code);
  o.require(g.order == 144, "code automorphism order " + g.order.get_str());
  o.require(orbits(code.words.size(), word_action(code, g.generators)).size() == 1, "not transitive on words");
  const char* ts[7] = {"-1", "-3/4", "-1/2", "-1/4", "0", "1/4", "1/2"};
  const std::uint64_t rows[2][7] = {{153, 0, 8640, 4608, 20016, 4608, 8640},
                                    {89, 384, 7680, 5888, 19056, 4992, 8576}};
  const PointConfiguration configs[2] = {build_kissing9(code), build_modified9()};
  for (int r = 0; r < 2; ++r) {
    o.require(configs[r].size() == 306 && validate_kissing(configs[r]).valid, configs[r].name() + " invalid");
    const auto s = spectrum(configs[r]);
    for (int j = 0; j < 7; ++j)
      o.require(count_at(s, QuadScalar::parse(ts[j])) == rows[r][j], configs[r].name() + " count at " + ts[j]);
  }
  const auto t = alternative_triples_search();
  o.require(t.eight_sets.size() == 2, "eight-sets " + std::to_string(t.eight_sets.size()));
  return o;
}

Outcome energy() {
  Outcome o;
  const auto v = riesz_lex_compare(build_modified9(), build_kissing9(build_code_table()));
  o.require(v.outcome == RieszOutcome::ADominates && v.at_minimal_distance,
            "modified9 vs leech9: " + std::string(to_string(v.outcome)));
  const auto w = riesz_lex_compare(build5(Kind5::L5), build5(Kind5::D5));
  o.require(w.outcome == RieszOutcome::ADominates && !w.at_minimal_distance,
            "L5 vs D5: " + std::string(to_string(w.outcome)));
  return o;
}

Outcome properties() {
  Outcome o;
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 9);
  auto rnd = [&] { return frac(num(rng), den(rng)); };
  for (int i = 0; i < 500; ++i) {
    const QuadScalar x(rnd(), rnd(), 5), y(rnd(), rnd(), 5), z(rnd(), rnd(), 5);
    bool ok = x + y == y + x && x * y == y * x && (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z &&
              x - x == QuadScalar(0);
    if (!x.is_zero()) ok = ok && (y / x) * x == y;
    o.require(ok, "field axiom");
    o.require(QuadScalar::parse(x.str()) == x, "scalar round-trip");
  }
  std::vector<PointConfiguration> all;
  for (Kind5 k : all_kinds5()) all.push_back(build5(k));
  for (const char* n : {"e6", "leech6", "cs6a", "cs6b"}) all.push_back(build_named6(n));
  all.push_back(build_kissing9(build_code_table()));
  all.push_back(build_modified9());
  for (const auto& c : all) {
    std::vector<std::size_t> perm(c.dim());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<bool> flip(c.dim());
    for (std::size_t i = 0; i < flip.size(); ++i) flip[i] = rng() & 1;
    std::vector<Vec> pts;
    for (const auto& p : c.points()) {
      Vec q(c.dim());
      for (std::size_t i = 0; i < c.dim(); ++i) q[perm[i]] = flip[i] ? -p[i] : p[i];
      pts.push_back(q);
    }
    std::shuffle(pts.begin(), pts.end(), rng);
    o.require(spectrum(PointConfiguration("moved", c.dim(), pts)) == spectrum(c), c.name() + " spectrum moved");
    o.require(read_kcfg(write_kcfg(c)).points() == c.points(), c.name() + " kcfg round-trip");
    const QuadScalar n = dot(c[0], c[0]);
    bool pairs_ok = true;
    for (std::size_t i = 0; i < c.size(); ++i) {
      pairs_ok = pairs_ok && dot(c[i], c[i]) == n;
      for (std::size_t j = 0; j < c.size(); ++j)
        if (i != j) pairs_ok = pairs_ok && QuadScalar(2) * dot(c[i], c[j]) <= n;
    }
    o.require(pairs_ok, c.name() + " fails pair validation");
  }
  for (const char* f : {"d5.kcfg", "l5.kcfg", "q5.kcfg", "r5.kcfg", "leech9.kcfg", "modified9.kcfg"}) {
    const std::string text = read_file(data(f));
    o.require(write_kcfg(read_kcfg(text)) == text, std::string(f) + " round-trip");
  }
  for (const char* f : {"q5.kcol", "r5.kcol", "d5.kcol", "l5m2.kcol", "l5m3.kcol", "l5m4.kcol"}) {
    const std::string text = read_file(data(f));
    o.require(write_kcol(read_kcol(text)) == text, std::string(f) + " round-trip");
  }
  for (const char* f : {"q5_table.kpak", "r5_table.kpak"}) {
    const std::string text = read_file(data(f));
    o.require(write_kpak(read_kpak(text)) == text, std::string(f) + " round-trip");
  }
  const std::string code = read_file(data("code_table.txt"));
  o.require(write_code(read_code(code)) == code, "code round-trip");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double limit;  // seconds
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"5d inner-product spectra", 1, spectra5},
      {"Q5 and R5 coordinates", 1, coordinates},
      {"pairwise non-isometry and antipodal counts", 10, non_isometry},
      {"symmetry orders", 120, symmetry_orders},
      {"hole 16-subsets", 60, holes},
      {"6d extension classes", 120, extensions},
      {"periodic packings", 60, packings},
      {"symmetry coset tables", 60, symmetry_tables},
      {"uniform uniqueness", 180, uniqueness},
      {"9d code and configurations", 120, nine},
      {"Riesz energy verdicts", 1, energy},
      {"property suites", 600, properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& c : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit) o.require(false, "over time limit");
    if (!o.ok) ++failed;
    std::printf("%s %2d %s (%.2f s)%s%s\n", o.ok ? "PASS" : "FAIL", index, c.name, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  return failed == 0 ? 0 : 1;
}
