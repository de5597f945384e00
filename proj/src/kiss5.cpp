#include "kisskit/kiss5.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace kisskit {

namespace {

bool same_set(std::vector<Vec> a, std::vector<Vec> b) {
  const std::size_t da = a.empty() ? 0 : a[0].size();
  const std::size_t db = b.empty() ? 0 : b[0].size();
  return same_point_set(PointConfiguration("a", da, std::move(a)),
                        PointConfiguration("b", db, std::move(b)));
}

std::vector<Vec> apply_all(const Mat& a, const std::vector<Vec>& pts) {
  std::vector<Vec> out;
  for (const auto& p : pts) out.push_back(kisskit::apply(a, p));
  return out;
}

PointConfiguration reflect_sum_layer(const PointConfiguration& base, std::string name) {
  const Vec ones(5, QuadScalar(1));
  std::vector<Vec> low;
  for (const auto& p : base.points())
    if (dot(p, ones) == QuadScalar(-2)) low.push_back(p);
  return replace_layer(base, ones, QuadScalar(2), reflect_hyperplane(low, coordinate_sum_normal(5)),
                       std::move(name));
}

}  // namespace

const char* to_string(Kind5 k) {
  switch (k) {
    case Kind5::D5: return "D5";
    case Kind5::L5: return "L5";
    case Kind5::Q5: return "Q5";
    case Kind5::R5: return "R5";
  }
  return "?";
}

Kind5 parse_kind5(const std::string& s) {
  std::string t = s;
  for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "d5") return Kind5::D5;
  if (t == "l5") return Kind5::L5;
  if (t == "q5") return Kind5::Q5;
  if (t == "r5") return Kind5::R5;
  fail(ErrorKind::Parse, "unknown five-dimensional kind '" + s + "'");
}

std::vector<Kind5> all_kinds5() { return {Kind5::D5, Kind5::L5, Kind5::Q5, Kind5::R5}; }

std::vector<Vec> d4_layer(const QuadScalar& last) {
  std::vector<Vec> out;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(5, QuadScalar(0));
          v[i] = si;
          v[j] = sj;
          v[4] = last;
          out.push_back(v);
        }
  return out;
}

std::vector<Vec> half_layer(bool odd, const QuadScalar& last) {
  const QuadScalar h = Rational(1, 2);
  std::vector<Vec> out;
  for (int mask = 0; mask < 16; ++mask) {
    if ((std::popcount(static_cast<unsigned>(mask)) % 2 == 1) != odd) continue;
    Vec v(5);
    for (int i = 0; i < 4; ++i) v[i] = (mask >> i & 1) ? -h : h;
    v[4] = last;
    out.push_back(v);
  }
  return out;
}

PointConfiguration build_d5() {
  std::vector<Vec> pts;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      for (int si : {1, -1})
        for (int sj : {1, -1}) {
          Vec v(5, QuadScalar(0));
          v[i] = si;
          v[j] = sj;
          pts.push_back(v);
        }
  return PointConfiguration("D5", 5, std::move(pts));
}

PointConfiguration build_l5() {
  const Vec e5 = rational_vec({0, 0, 0, 0, 1});
  return replace_layer(build_d5(), e5, QuadScalar(1), half_layer(true, QuadScalar(1)), "L5");
}

PointConfiguration build_q5() { return reflect_sum_layer(build_d5(), "Q5"); }

PointConfiguration build_r5() { return reflect_sum_layer(build_l5(), "R5"); }

PointConfiguration build5(Kind5 k) {
  switch (k) {
    case Kind5::D5: return build_d5();
    case Kind5::L5: return build_l5();
    case Kind5::Q5: return build_q5();
    case Kind5::R5: return build_r5();
  }
  fail(ErrorKind::Usage, "bad kind");
}

std::vector<PointConfiguration> l5_variants() {
  const Vec e5 = rational_vec({0, 0, 0, 0, 1});
  const PointConfiguration d5 = build_d5();
  std::vector<PointConfiguration> out;
  for (bool odd : {false, true})
    out.push_back(replace_layer(d5, e5, QuadScalar(1), half_layer(odd, QuadScalar(1)),
                                std::string("top-") + (odd ? "odd" : "even")));
  for (bool top_odd : {false, true})
    for (bool bottom_odd : {false, true}) {
      PointConfiguration c =
          replace_layer(d5, e5, QuadScalar(1), half_layer(top_odd, QuadScalar(1)), "");
      c = replace_layer(c, e5, QuadScalar(-1), half_layer(bottom_odd, QuadScalar(-1)),
                        std::string("both-") + (top_odd ? "odd" : "even") + "-" +
                            (bottom_odd ? "odd" : "even"));
      out.push_back(c);
    }
  return out;
}

Mat triality_matrix() {
  const int s[4][4] = {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {-1, 1, 1, -1}};
  Mat a(4, Vec(4));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) a[i][j] = frac(s[i][j], 2);
  return a;
}

std::vector<std::vector<Vec>> d4_cross_polytopes() {
  std::vector<Vec> integral;
  for (int i = 0; i < 4; ++i)
    for (int s : {1, -1}) {
      Vec v(4, QuadScalar(0));
      v[i] = s;
      integral.push_back(v);
    }
  auto drop_last = [](std::vector<Vec> pts) {
    for (auto& p : pts) p.pop_back();
    return pts;
  };
  return {integral, drop_last(half_layer(true, QuadScalar(0))),
          drop_last(half_layer(false, QuadScalar(0)))};
}

TrialityReport triality_check() {
  TrialityReport r;
  const Mat a = triality_matrix();
  r.orthogonal = is_orthogonal(a);
  const auto polys = d4_cross_polytopes();
  r.cycles = true;
  r.cube_identity = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto once = apply_all(a, polys[i]);
    if (!same_set(once, polys[(i + 1) % 3])) r.cycles = false;
    const auto thrice = apply_all(a, apply_all(a, once));
    if (!same_set(thrice, polys[i])) r.cube_identity = false;
  }
  return r;
}

}  // namespace kisskit
