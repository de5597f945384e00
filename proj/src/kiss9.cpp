#include "kisskit/kiss9.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <set>

namespace kisskit {

namespace {

constexpr const char* kTable[18] = {
    "110110000", "110001001", "110000110", "101101000", "101010010", "101000101",
    "100100011", "100011100", "011100100", "011011000", "011000011", "010101010",
    "010010101", "001110001", "001001110", "000110110", "000101101", "000011011",
};

constexpr const char* kModified[8] = {
    "101010100", "101001001", "101100010", "110001100",
    "110010010", "110100001", "100000111", "100111000",
};

// F9 element a + b i as (a, b) with a, b in F3.
struct F9 {
  int a, b;
  int pos() const { return 3 * b + a; }
};

F9 f9_mul(F9 x, F9 y) {
  return {((x.a * y.a - x.b * y.b) % 3 + 3) % 3, ((x.a * y.b + x.b * y.a) % 3 + 3) % 3};
}
F9 f9_add(F9 x, F9 y) { return {(x.a + y.a) % 3, (x.b + y.b) % 3}; }
F9 f9_at(int pos) { return {pos % 3, pos / 3}; }

Word permute_word(Word w, const Perm& p) {
  Word r = 0;
  for (int k = 0; k < 9; ++k)
    if (w >> k & 1) r |= static_cast<Word>(1u << p[k]);
  return r;
}

BinaryCode code_from(const char* const* rows, std::size_t n) {
  BinaryCode c;
  for (std::size_t i = 0; i < n; ++i) c.words.push_back(parse_word(rows[i]));
  return c;
}

// Signs on every coordinate of `support` except those in `fixed`, which stay +1.
void signed_points(Word support, Word fixed, std::vector<Vec>& out) {
  std::vector<int> free;
  for (int k = 0; k < 9; ++k)
    if ((support >> k & 1) && !(fixed >> k & 1)) free.push_back(k);
  for (unsigned mask = 0; mask < (1u << free.size()); ++mask) {
    Vec v(9, QuadScalar(0));
    for (int k = 0; k < 9; ++k)
      if (support >> k & 1) v[k] = 1;
    for (std::size_t f = 0; f < free.size(); ++f)
      if (mask >> f & 1) v[free[f]] = -1;
    out.push_back(v);
  }
}

void axis_points(std::vector<Vec>& out) {
  for (int k = 0; k < 9; ++k)
    for (int s : {2, -2}) {
      Vec v(9, QuadScalar(0));
      v[k] = s;
      out.push_back(v);
    }
}

Mat signed_perm_matrix(const Perm& p, const std::array<int, 9>& signs) {
  // x -> y with y[p[k]] = signs[k] x[k].
  Mat a(9, Vec(9, QuadScalar(0)));
  for (int k = 0; k < 9; ++k) a[p[k]][k] = signs[k];
  return a;
}

}  // namespace

Word parse_word(const std::string& bits) {
  if (bits.size() != 9) fail(ErrorKind::Parse, "codeword '" + bits + "' is not 9 bits");
  Word w = 0;
  for (int k = 0; k < 9; ++k) {
    if (bits[k] == '1') w |= static_cast<Word>(1u << k);
    else if (bits[k] != '0') fail(ErrorKind::Parse, "codeword '" + bits + "' is not binary");
  }
  return w;
}

std::string render_word(Word w) {
  std::string s(9, '0');
  for (int k = 0; k < 9; ++k)
    if (w >> k & 1) s[k] = '1';
  return s;
}

bool same_words(const BinaryCode& a, const BinaryCode& b) {
  return std::set<Word>(a.words.begin(), a.words.end()) ==
         std::set<Word>(b.words.begin(), b.words.end());
}

BinaryCode build_code_table() { return code_from(kTable, 18); }

BinaryCode build_code_f9() {
  std::set<int> squares;
  for (int p = 1; p < 9; ++p) squares.insert(f9_mul(f9_at(p), f9_at(p)).pos());
  Word sq = 0, non = 0;
  for (int p = 1; p < 9; ++p) {
    if (squares.count(p)) sq |= static_cast<Word>(1u << p);
    else non |= static_cast<Word>(1u << p);
  }
  std::set<Word> words;
  for (Word base : {sq, non})
    for (int t = 0; t < 9; ++t) {
      Word w = 0;
      for (int p = 0; p < 9; ++p)
        if (base >> p & 1) w |= static_cast<Word>(1u << f9_add(f9_at(p), f9_at(t)).pos());
      words.insert(w);
    }
  BinaryCode c;
  c.words.assign(words.begin(), words.end());
  return c;
}

CodeReport code_valid(const BinaryCode& code) {
  CodeReport r;
  for (std::size_t i = 0; i < code.words.size(); ++i)
    if (std::popcount(code.words[i]) != 4) r.bad_weights.push_back(i);
  for (std::size_t i = 0; i < code.words.size(); ++i)
    for (std::size_t j = i + 1; j < code.words.size(); ++j)
      if (code.words[i] != code.words[j] &&
          std::popcount(static_cast<Word>(code.words[i] & code.words[j])) > 2)
        r.overlaps.emplace_back(i, j);
  r.valid = r.bad_weights.empty() && r.overlaps.empty();
  return r;
}

std::vector<Perm> code_automorphism_elements(const BinaryCode& code) {
  const std::set<Word> words(code.words.begin(), code.words.end());
  std::vector<Perm> out;
  Perm p(9, -1);
  std::array<bool, 9> used{};
  // Positions are assigned in order 0..8; a word whose support lies in the
  // assigned prefix must map to a word, and any partially assigned word must
  // map into some word.
  auto feasible = [&](int upto) {
    const Word assigned = static_cast<Word>((1u << (upto + 1)) - 1);
    for (Word w : words) {
      const Word part = w & assigned;
      if (part == 0) continue;
      Word img = 0;
      for (int k = 0; k <= upto; ++k)
        if (part >> k & 1) img |= static_cast<Word>(1u << p[k]);
      if (part == w) {
        if (!words.count(img)) return false;
      } else {
        bool inside = false;
        for (Word u : words)
          if ((u & img) == img) inside = true;
        if (!inside) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, int k) -> void {
    if (k == 9) {
      out.push_back(p);
      return;
    }
    for (int y = 0; y < 9; ++y) {
      if (used[y]) continue;
      p[k] = y;
      used[y] = true;
      if (feasible(k)) self(self, k + 1);
      used[y] = false;
      p[k] = -1;
    }
  };
  rec(rec, 0);
  std::sort(out.begin(), out.end());
  return out;
}

AutGroup code_automorphisms(const BinaryCode& code) {
  std::vector<Perm> gens;
  for (const auto& p : code_automorphism_elements(code)) {
    if (is_identity(p)) continue;
    if (!gens.empty() && StabilizerChain(9, gens).contains(p)) continue;
    gens.push_back(p);
  }
  return group_from_generators(9, std::move(gens));
}

std::vector<Perm> affine_semilinear_perms() {
  std::set<Perm> out;
  for (int ap = 1; ap < 9; ++ap)
    for (int bp = 0; bp < 9; ++bp)
      for (bool frob : {false, true}) {
        Perm p(9);
        for (int x = 0; x < 9; ++x) {
          F9 v = f9_at(x);
          if (frob) v = f9_mul(v, f9_mul(v, v));
          p[x] = f9_add(f9_mul(f9_at(ap), v), f9_at(bp)).pos();
        }
        out.insert(p);
      }
  return {out.begin(), out.end()};
}

std::vector<Perm> word_action(const BinaryCode& code, const std::vector<Perm>& perms) {
  std::vector<Perm> out;
  for (const auto& p : perms) {
    Perm q(code.words.size());
    for (std::size_t i = 0; i < code.words.size(); ++i) {
      const Word img = permute_word(code.words[i], p);
      auto it = std::find(code.words.begin(), code.words.end(), img);
      if (it == code.words.end()) fail(ErrorKind::InvalidCode, "permutation does not preserve code");
      q[i] = static_cast<int>(it - code.words.begin());
    }
    out.push_back(q);
  }
  return out;
}

PointConfiguration build_kissing9(const BinaryCode& code) {
  const CodeReport r = code_valid(code);
  if (!r.valid) fail(ErrorKind::InvalidCode, "code is not weight 4 with overlaps <= 2");
  std::vector<Vec> pts;
  for (Word w : std::set<Word>(code.words.begin(), code.words.end())) signed_points(w, 0, pts);
  axis_points(pts);
  return PointConfiguration("leech9", 9, std::move(pts));
}

BinaryCode modified_codewords() { return code_from(kModified, 8); }

PointConfiguration build_modified9() {
  const PointConfiguration original = build_kissing9(build_code_table());
  std::vector<Vec> layer;
  for (Word w : modified_codewords().words) signed_points(w, 1, layer);
  const Vec e1 = rational_vec({1, 0, 0, 0, 0, 0, 0, 0, 0});
  return replace_layer(original, e1, QuadScalar(1), layer, "modified9");
}

std::vector<Perm> modified9_stated_generators(const PointConfiguration& modified9) {
  std::array<int, 9> plus;
  plus.fill(1);
  std::vector<Perm> gens;
  for (const auto& p : code_automorphism_elements(build_code_table())) {
    if (p[0] != 0) continue;
    gens.push_back(point_permutation(modified9, signed_perm_matrix(p, plus)));
  }
  for (int k = 1; k < 9; ++k) {
    std::array<int, 9> s = plus;
    s[k] = -1;
    gens.push_back(point_permutation(modified9, signed_perm_matrix(identity_perm(9), s)));
  }
  // (x1,...,x9) -> (-x1, x3, x2, x7, x5, x6, x4, x8, x9)
  Perm swap = identity_perm(9);
  std::swap(swap[1], swap[2]);
  std::swap(swap[3], swap[6]);
  std::array<int, 9> s = plus;
  s[0] = -1;
  gens.push_back(point_permutation(modified9, signed_perm_matrix(swap, s)));
  return gens;
}

TriplesReport alternative_triples_search() {
  TriplesReport r;
  std::vector<Word> central;
  for (Word w : build_code_table().words)
    if (!(w & 1)) central.push_back(w);
  for (Word t = 0; t < 512; ++t) {
    if ((t & 1) || std::popcount(t) != 3) continue;
    bool inside = false;
    for (Word w : central)
      if ((w & t) == t) inside = true;
    if (!inside) r.consistent.push_back(t);
  }
  std::vector<Word> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (chosen.size() == 8) {
      r.eight_sets.push_back(chosen);
      return;
    }
    for (std::size_t i = from; i < r.consistent.size(); ++i) {
      const Word t = r.consistent[i];
      bool ok = true;
      for (Word u : chosen)
        if (std::popcount(static_cast<Word>(t & u)) > 1) ok = false;
      if (!ok) continue;
      chosen.push_back(t);
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
  return r;
}

const char* to_string(RieszOutcome o) {
  switch (o) {
    case RieszOutcome::ADominates: return "a_dominates";
    case RieszOutcome::BDominates: return "b_dominates";
    case RieszOutcome::Equal: return "equal";
    case RieszOutcome::IncomparableSameSupport: return "incomparable_same_support";
  }
  return "?";
}

RieszVerdict riesz_lex_compare(const PointConfiguration& a, const PointConfiguration& b) {
  if (a.size() != b.size())
    fail(ErrorKind::MismatchedSphere, "point counts " + std::to_string(a.size()) + " and " +
                                          std::to_string(b.size()));
  if (a.size() == 0) return {};
  const QuadScalar na = dot(a[0], a[0]);
  for (const auto* c : {&a, &b})
    for (const auto& p : c->points())
      if (dot(p, p) != na)
        fail(ErrorKind::MismatchedSphere, c->name() + ": point " + render(p) + " off the sphere");
  const Spectrum sa = spectrum(a), sb = spectrum(b);
  std::set<QuadScalar, std::greater<>> ts;
  for (const auto& e : sa) ts.insert(e.t);
  for (const auto& e : sb) ts.insert(e.t);
  RieszVerdict v;
  bool first = true;
  for (const auto& t : ts) {
    const std::uint64_t ca = count_at(sa, t), cb = count_at(sb, t);
    if (ca != cb) {
      v.outcome = ca < cb ? RieszOutcome::ADominates : RieszOutcome::BDominates;
      v.decided_at = t;
      v.count_a = ca;
      v.count_b = cb;
      v.at_minimal_distance = first;
      return v;
    }
    first = false;
  }
  return v;
}

}  // namespace kisskit
