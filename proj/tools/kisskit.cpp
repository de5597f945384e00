// kisskit command-line tool.

#include <omp.h>

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "kisskit/groups.hpp"
#include "kisskit/io.hpp"
#include "kisskit/kiss5.hpp"
#include "kisskit/kiss6.hpp"
#include "kisskit/kiss9.hpp"
#include "kisskit/pack5.hpp"
#include "kisskit/report.hpp"

#ifndef KISSKIT_DATA_DIR
#define KISSKIT_DATA_DIR "data"
#endif

using namespace kisskit;

namespace {

PointConfiguration build_named(const std::string& name) {
  if (name == "d5" || name == "l5" || name == "q5" || name == "r5") return build5(parse_kind5(name));
  if (name == "leech9") return build_kissing9(build_code_table());
  if (name == "modified9") return build_modified9();
  if (name == "e6" || name == "leech6" || name == "cs6a" || name == "cs6b") return build_named6(name);
  fail(ErrorKind::Usage, "unknown configuration '" + name + "'");
}

PointConfiguration load_kcfg(const std::string& path) { return read_kcfg(read_file(path), stem(path)); }
PeriodicPacking load_kpak(const std::string& path) { return read_kpak(read_file(path), stem(path)); }
ColoredConfig2D load_kcol(const std::string& path) { return read_kcol(read_file(path), stem(path)); }

int emit(const std::string& text, const std::string& out) {
  if (out.empty())
    std::cout << text;
  else
    write_file(out, text);
  return 0;
}

int cmd_verify(const std::string& path) {
  const auto c = load_kcfg(path);
  const auto r = validate_kissing(c);
  std::cout << c.name() << ": " << c.size() << " points in dimension " << c.dim()
            << ", squared norm " << r.norm2.str() << "\n";
  for (auto i : r.bad_norms) std::cout << "bad norm: point " << i << "\n";
  for (auto [i, j] : r.violations)
    std::cout << "too close: points " << i << " " << j << ", inner product "
              << dot(c[i], c[j]).str() << "\n";
  if (c.has_duplicates()) std::cout << "duplicate points\n";
  const bool ok = r.valid && !c.has_duplicates();
  std::cout << (ok ? "valid kissing configuration" : "invalid") << "\n";
  return ok ? 0 : 1;
}

int cmd_aut(const std::string& path) {
  const auto c = load_kcfg(path);
  const auto g = automorphisms(c);
  std::cout << "order " << g.order.get_str() << "\n";
  for (const auto& p : g.generators) std::cout << render(p) << "\n";
  return 0;
}

int cmd_iso(const std::string& a, const std::string& b) {
  const auto x = load_kcfg(a);
  const auto y = load_kcfg(b);
  if (x.dim() != y.dim() || x.size() != y.size() || !x.spans() || !y.spans()) {
    std::cout << "non-isometric\n";
    return 1;
  }
  const auto pi = isometric(x, y);
  if (!pi) {
    std::cout << "non-isometric\n";
    return 1;
  }
  std::cout << "isometric\n" << render(*pi) << "\n";
  return 0;
}

int cmd_holes(const std::string& kind, bool subsets) {
  const Kind5 k = parse_kind5(kind);
  const auto holes = holes_for(k);
  const auto r = verify_holes(build5(k), holes);
  std::cout << holes.holes.size() << " holes, " << (r.valid ? "all valid" : "INVALID") << "\n";
  if (subsets) {
    const auto s = hole_subsets_16(holes);
    std::cout << s.size() << " subsets of size 16\n";
    for (const auto& h : s) {
      for (std::size_t i = 0; i < h.size(); ++i) std::cout << (i ? " " : "") << h[i];
      std::cout << "\n";
    }
  }
  return r.valid ? 0 : 1;
}

int cmd_extend6(const std::string& kind, std::size_t bottom, std::size_t top, const std::string& out) {
  const Kind5 k = parse_kind5(kind);
  const auto holes = holes_for(k);
  const auto s = hole_subsets_16(holes);
  if (bottom >= s.size() || top >= s.size())
    fail(ErrorKind::Usage, kind + " has " + std::to_string(s.size()) + " hole subsets");
  const auto c = extend_6d(build5(k), holes, s[bottom], s[top],
                           kind + "-" + std::to_string(bottom) + "-" + std::to_string(top));
  return emit(write_kcfg(c), out);
}

int cmd_pack_verify(const std::string& path) {
  const auto p = load_kpak(path);
  const QuadScalar d2 = min_distance2(p);
  const bool ok = d2 >= QuadScalar(4) * p.radius2;
  std::cout << "translates " << p.translates.size() << "\nmin distance^2 " << d2.str() << "\n"
            << (ok ? "valid packing" : "overlapping spheres") << "\n";
  return ok ? 0 : 1;
}

int cmd_pack_kissing(const std::string& path) {
  const auto p = load_kpak(path);
  for (std::size_t i = 0; i < p.translates.size(); ++i) {
    const auto lk = local_kissing(p, i);
    std::cout << "translate " << i << ": " << lk.config.size() << " neighbors, "
              << (lk.kind ? to_string(*lk.kind) : "unclassified") << "\n";
  }
  std::cout << (is_uniform(p) ? "uniform" : "not uniform") << "\n";
  return 0;
}

int cmd_pack_density(const std::string& path) {
  const auto d = density(load_kpak(path));
  std::cout << "density " << render(d.q) << " * pi^2 * sqrt(2)\n";
  return 0;
}

int cmd_pack_period(const std::string& path) {
  const auto r = period_minimality(load_kpak(path));
  std::cout << "translates " << r.m << "\nperiods " << r.periods << "\nminimal translates "
            << r.minimal_m << "\n";
  return 0;
}

int cmd_pack_symmetry(const std::string& kind) {
  const auto r = verify_symmetry_coset_table(parse_kind5(kind));
  std::cout << "|G| " << r.group_order << "\n|H| " << r.subgroup_order << "\n";
  for (const auto& row : r.rows)
    std::cout << row.label << "  " << row.size << "  x" << row.translate << "  "
              << (row.paired_ok ? "ok" : "FAIL") << "  "
              << (row.others_rejected ? "others rejected" : "OTHERS ACCEPTED") << "\n";
  std::cout << (r.ok ? "symmetry table verified" : "symmetry table FAILED") << "\n";
  return r.ok ? 0 : 1;
}

int cmd_uniq(const std::string& path) {
  const auto c = load_kcfg(path);
  const auto r = uniform_uniqueness(c);
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& v = r.points[i];
    std::cout << i << "  " << to_string(v.verdict) << "  overlap " << v.overlap << "  classes "
              << v.classes << "  round " << v.round << "\n";
  }
  std::cout << r.unique_count() << " of " << r.points.size() << " neighbor configurations unique\n";
  return 0;
}

int cmd_code(const std::string& what) {
  if (what == "table") {
    std::cout << write_code(build_code_table());
  } else if (what == "f9") {
    const auto f9 = build_code_f9();
    std::cout << write_code(f9);
    std::cout << (same_words(f9, build_code_table()) ? "equal to the table code" : "differs from the table code")
              << "\n";
  } else if (what == "aut") {
    const auto code = build_code_table();
    const auto g = code_automorphisms(code);
    std::cout << "order " << g.order.get_str() << "\n";
    const auto words = word_action(code, g.generators);
    std::cout << (orbits(code.words.size(), words).size() == 1 ? "transitive" : "intransitive")
              << " on " << code.words.size() << " words\n";
    for (const auto& p : g.generators) std::cout << render(p) << "\n";
  } else if (what == "triples") {
    const auto r = alternative_triples_search();
    std::cout << r.consistent.size() << " consistent triples\n";
    for (Word w : r.consistent) std::cout << render_word(w) << "\n";
    std::cout << r.eight_sets.size() << " eight-sets\n";
    for (const auto& s : r.eight_sets) {
      for (std::size_t i = 0; i < s.size(); ++i) std::cout << (i ? " " : "") << render_word(s[i]);
      std::cout << "\n";
    }
  } else {
    fail(ErrorKind::Usage, "code expects table, f9, aut or triples");
  }
  return 0;
}

int cmd_energy(const std::string& a, const std::string& b) {
  const auto x = load_kcfg(a);
  const auto y = load_kcfg(b);
  const auto v = riesz_lex_compare(x, y);
  std::cout << to_string(v.outcome);
  if (v.decided_at)
    std::cout << " at t = " << v.decided_at->str() << " (" << v.count_a << " vs " << v.count_b
              << " pairs" << (v.at_minimal_distance ? ", minimal distance" : "") << ")";
  std::cout << "\n";
  return 0;
}

int cmd_report(const std::string& expected, bool update) {
  const std::string text = report_tables();
  std::cout << text;
  if (update) {
    write_file(expected, text);
    return 0;
  }
  if (read_file(expected) != text) {
    std::cerr << "report differs from " << expected << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact kissing configurations and periodic packings"};
  app.require_subcommand(1);
  int jobs = 0;
  app.add_option("-j,--jobs", jobs, "worker threads (0: OpenMP default)")
      ->envname("KISSKIT_JOBS")
      ->check(CLI::NonNegativeNumber);

  std::string a, b, out, kind, what;
  std::size_t bottom = 0, top = 0;
  bool subsets = false, update = false;
  std::string expected = std::string(KISSKIT_DATA_DIR) + "/expected/tables.txt";
  std::function<int()> action;

  auto* build = app.add_subcommand("build", "write a named configuration as kcfg");
  build->add_option("name", a, "d5 l5 q5 r5 leech9 modified9 e6 leech6 cs6a cs6b")->required();
  build->add_option("-o,--output", out, "output file (default stdout)");
  build->callback([&] { action = [&] { return emit(write_kcfg(build_named(a)), out); }; });

  auto* verify = app.add_subcommand("verify", "check the kissing condition");
  verify->add_option("kcfg", a)->required();
  verify->callback([&] { action = [&] { return cmd_verify(a); }; });

  auto* spect = app.add_subcommand("spectrum", "inner-product counts");
  spect->add_option("kcfg", a)->required();
  spect->callback([&] {
    action = [&] {
      std::cout << render(spectrum(load_kcfg(a))) << "\n";
      return 0;
    };
  });

  auto* aut = app.add_subcommand("aut", "automorphism group order and generators");
  aut->add_option("kcfg", a)->required();
  aut->callback([&] { action = [&] { return cmd_aut(a); }; });

  auto* iso = app.add_subcommand("iso", "isometry test");
  iso->add_option("a", a)->required();
  iso->add_option("b", b)->required();
  iso->callback([&] { action = [&] { return cmd_iso(a, b); }; });

  auto* holes = app.add_subcommand("holes", "deep holes of a 5d configuration");
  holes->add_option("kind", kind, "d5 l5 q5 r5")->required();
  holes->add_flag("--subsets", subsets, "enumerate 16-subsets");
  holes->callback([&] { action = [&] { return cmd_holes(kind, subsets); }; });

  auto* ext = app.add_subcommand("extend6", "six-dimensional extension from two hole subsets");
  ext->add_option("kind", kind)->required();
  ext->add_option("bottom", bottom)->required();
  ext->add_option("top", top)->required();
  ext->add_option("-o,--output", out);
  ext->callback([&] { action = [&] { return cmd_extend6(kind, bottom, top, out); }; });

  auto* pack = app.add_subcommand("pack", "periodic packings");
  pack->require_subcommand(1);
  auto* pbuild = pack->add_subcommand("build", "assemble a kcol coloring into kpak");
  pbuild->add_option("kcol", a)->required();
  pbuild->add_option("-o,--output", out);
  pbuild->callback([&] {
    action = [&] { return emit(write_kpak(assemble_packing(load_kcol(a))), out); };
  });
  auto* pverify = pack->add_subcommand("verify", "minimal distance against the radius");
  pverify->add_option("kpak", a)->required();
  pverify->callback([&] { action = [&] { return cmd_pack_verify(a); }; });
  auto* pkiss = pack->add_subcommand("kissing", "local kissing configurations");
  pkiss->add_option("kpak", a)->required();
  pkiss->callback([&] { action = [&] { return cmd_pack_kissing(a); }; });
  auto* pdens = pack->add_subcommand("density", "exact density");
  pdens->add_option("kpak", a)->required();
  pdens->callback([&] { action = [&] { return cmd_pack_density(a); }; });
  auto* pper = pack->add_subcommand("period", "minimal number of translates");
  pper->add_option("kpak", a)->required();
  pper->callback([&] { action = [&] { return cmd_pack_period(a); }; });
  auto* psym = pack->add_subcommand("symmetry", "verify the symmetry coset table");
  psym->add_option("kind", kind, "q5 r5")->required();
  psym->callback([&] { action = [&] { return cmd_pack_symmetry(kind); }; });

  auto* uniq = app.add_subcommand("uniq", "uniform neighbor uniqueness");
  uniq->add_option("kcfg", a)->required();
  uniq->callback([&] { action = [&] { return cmd_uniq(a); }; });

  auto* code = app.add_subcommand("code", "the length-9 code");
  code->add_option("what", what, "table f9 aut triples")->required();
  code->callback([&] { action = [&] { return cmd_code(what); }; });

  auto* energy = app.add_subcommand("energy", "large-s Riesz energy comparison");
  energy->add_option("a", a)->required();
  energy->add_option("b", b)->required();
  energy->callback([&] { action = [&] { return cmd_energy(a, b); }; });

  auto* svg = app.add_subcommand("svg", "draw a kcol coloring");
  svg->add_option("kcol", a)->required();
  svg->callback([&] {
    action = [&] {
      std::cout << render_svg(load_kcol(a));
      return 0;
    };
  });

  auto* report = app.add_subcommand("report", "regenerate tables and diff against the expected file");
  report->add_option("what", what, "tables")->required()->check(CLI::IsMember({"tables"}));
  report->add_option("--expected", expected, "expected output");
  report->add_flag("--update", update, "overwrite the expected file");
  report->callback([&] { action = [&] { return cmd_report(expected, update); }; });

  CLI11_PARSE(app, argc, argv);
  if (jobs > 0) omp_set_num_threads(jobs);
  try {
    return action();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
