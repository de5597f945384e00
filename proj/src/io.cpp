#include "kisskit/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace kisskit {

namespace {

class Lines {
 public:
  explicit Lines(const std::string& text) {
    std::size_t start = 0;
    while (start < text.size()) {
      std::size_t end = text.find('\n', start);
      if (end == std::string::npos) end = text.size();
      lines_.push_back(text.substr(start, end - start));
      start = end + 1;
    }
  }

  bool done() const { return pos_ == lines_.size(); }

  std::vector<std::string> next() {
    if (done()) fail(ErrorKind::Parse, "unexpected end of input");
    const std::string& line = lines_[pos_++];
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t end = line.find(' ', start);
      if (end == std::string::npos) end = line.size();
      tokens.push_back(line.substr(start, end - start));
      start = end + 1;
    }
    for (const auto& t : tokens)
      if (t.empty()) fail(ErrorKind::Parse, "line " + std::to_string(pos_) + ": stray whitespace");
    return tokens;
  }

  std::string where() const { return "line " + std::to_string(pos_); }

  /// `key value` with an unsigned value.
  std::size_t header(const std::string& key) {
    const auto t = next();
    if (t.size() != 2 || t[0] != key) fail(ErrorKind::Parse, where() + ": expected '" + key + " <n>'");
    return count(t[1]);
  }

  void keyword(const std::string& key) {
    const auto t = next();
    if (t.size() != 1 || t[0] != key) fail(ErrorKind::Parse, where() + ": expected '" + key + "'");
  }

  std::size_t count(const std::string& s) const {
    if (s.empty() || s.size() > 9 || s.find_first_not_of("0123456789") != std::string::npos ||
        (s.size() > 1 && s[0] == '0'))
      fail(ErrorKind::Parse, where() + ": bad count '" + s + "'");
    return std::stoul(s);
  }

  QuadScalar scalar(const std::string& s) const {
    QuadScalar x = QuadScalar::parse(s);
    if (x.str() != s) fail(ErrorKind::Parse, where() + ": non-canonical scalar '" + s + "'");
    return x;
  }

  Vec row(std::size_t n) {
    const auto t = next();
    if (t.size() != n)
      fail(ErrorKind::Parse, where() + ": expected " + std::to_string(n) + " scalars");
    Vec v;
    for (const auto& s : t) v.push_back(scalar(s));
    return v;
  }

  void end() {
    if (!done()) fail(ErrorKind::Parse, "trailing content after " + where());
  }

 private:
  std::vector<std::string> lines_;
  std::size_t pos_ = 0;
};

void put_row(std::ostringstream& out, const Vec& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].str();
  out << '\n';
}

void check_radical(const Vec& v, std::uint32_t radical, const std::string& where) {
  for (const auto& x : v)
    if (x.radical() != 0 && x.radical() != radical)
      fail(ErrorKind::RadicalMismatch, where + ": scalar " + x.str() + " outside the declared radical");
}

}  // namespace

std::string write_kcfg(const PointConfiguration& c) {
  std::ostringstream out;
  out << "kcfg 1\ndim " << c.dim() << "\nradical " << c.radical() << "\npoints " << c.size()
      << '\n';
  for (const auto& p : c.points()) put_row(out, p);
  return out.str();
}

PointConfiguration read_kcfg(const std::string& text, const std::string& name) {
  Lines in(text);
  if (in.header("kcfg") != 1) fail(ErrorKind::Parse, "unsupported kcfg version");
  const std::size_t dim = in.header("dim");
  const std::size_t radical = in.header("radical");
  if (!is_valid_radical(static_cast<std::uint32_t>(radical)))
    fail(ErrorKind::InvalidRadical, "radical " + std::to_string(radical));
  const std::size_t m = in.header("points");
  std::vector<Vec> points;
  for (std::size_t i = 0; i < m; ++i) {
    points.push_back(in.row(dim));
    check_radical(points.back(), static_cast<std::uint32_t>(radical), in.where());
  }
  in.end();
  PointConfiguration c(name, dim, std::move(points));
  if (c.radical() != radical)
    fail(ErrorKind::Parse, "declared radical " + std::to_string(radical) + ", coordinates use " +
                               std::to_string(c.radical()));
  return c;
}

std::string write_kcol(const ColoredConfig2D& cc) {
  std::ostringstream out;
  out << "kcol 1\nbasis\n";
  for (const auto& b : cc.basis) put_row(out, b);
  out << "sites " << cc.sites.size() << '\n';
  for (const auto& s : cc.sites) out << s.pos[0].str() << ' ' << s.pos[1].str() << ' ' << s.color << '\n';
  return out.str();
}

ColoredConfig2D read_kcol(const std::string& text, const std::string& name) {
  Lines in(text);
  if (in.header("kcol") != 1) fail(ErrorKind::Parse, "unsupported kcol version");
  ColoredConfig2D cc;
  cc.name = name;
  in.keyword("basis");
  for (int i = 0; i < 2; ++i) {
    cc.basis.push_back(in.row(2));
    check_radical(cc.basis.back(), 5, in.where());
  }
  const std::size_t k = in.header("sites");
  for (std::size_t i = 0; i < k; ++i) {
    const auto t = in.next();
    if (t.size() != 3) fail(ErrorKind::Parse, in.where() + ": expected 'x y color'");
    ColoredSite s;
    s.pos = {in.scalar(t[0]), in.scalar(t[1])};
    check_radical(s.pos, 5, in.where());
    if (t[2].size() != 1 || t[2][0] < '0' || t[2][0] > '3')
      fail(ErrorKind::Parse, in.where() + ": color must be 0..3");
    s.color = t[2][0] - '0';
    cc.sites.push_back(std::move(s));
  }
  in.end();
  return cc;
}

std::string write_kpak(const PeriodicPacking& p) {
  std::ostringstream out;
  out << "kpak 1\ndim " << p.dim << "\nbasis\n";
  for (const auto& b : p.basis) put_row(out, b);
  out << "translates " << p.translates.size() << '\n';
  for (const auto& t : p.translates) put_row(out, t);
  out << "radius2 " << p.radius2.str() << '\n';
  return out.str();
}

PeriodicPacking read_kpak(const std::string& text, const std::string& name) {
  Lines in(text);
  if (in.header("kpak") != 1) fail(ErrorKind::Parse, "unsupported kpak version");
  PeriodicPacking p;
  p.name = name;
  p.dim = in.header("dim");
  in.keyword("basis");
  for (std::size_t i = 0; i < p.dim; ++i) p.basis.push_back(in.row(p.dim));
  const std::size_t m = in.header("translates");
  for (std::size_t i = 0; i < m; ++i) p.translates.push_back(in.row(p.dim));
  const auto t = in.next();
  if (t.size() != 2 || t[0] != "radius2") fail(ErrorKind::Parse, in.where() + ": expected 'radius2 <r>'");
  p.radius2 = in.scalar(t[1]);
  in.end();
  std::uint32_t radical = 0;
  for (const auto* rows : {&p.basis, &p.translates})
    for (const auto& v : *rows)
      for (const auto& x : v) {
        if (x.radical() == 0) continue;
        if (radical != 0 && radical != x.radical())
          fail(ErrorKind::RadicalMismatch, "kpak mixes radicals");
        radical = x.radical();
      }
  return p;
}

std::string write_code(const BinaryCode& code) {
  std::string out;
  for (Word w : code.words) out += render_word(w) + '\n';
  return out;
}

BinaryCode read_code(const std::string& text) {
  Lines in(text);
  BinaryCode code;
  while (!in.done()) {
    const auto t = in.next();
    if (t.size() != 1 || t[0].size() != 9 || t[0].find_first_not_of("01") != std::string::npos)
      fail(ErrorKind::Parse, in.where() + ": expected 9 bits");
    code.words.push_back(parse_word(t[0]));
  }
  if (code.words.size() != 18)
    fail(ErrorKind::InvalidCode, "expected 18 words, got " + std::to_string(code.words.size()));
  return code;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::Io, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) fail(ErrorKind::Io, "cannot write " + path);
}

std::string stem(const std::string& path) { return std::filesystem::path(path).stem().string(); }

}  // namespace kisskit
