#include "platbraid/word_io.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

namespace platbraid {

namespace {

[[noreturn]] void syntax_error(int line, int col, const std::string& expected) {
  throw BraidError(BraidError::Kind::Syntax, "syntax error at line " + std::to_string(line) +
                                                 ", column " + std::to_string(col) + ": expected " +
                                                 expected);
}

struct HeaderField {
  std::string key, value;
};

std::vector<HeaderField> split_header(const std::string& line, int lineno) {
  std::vector<HeaderField> out;
  std::istringstream ss(line);
  std::string tok;
  int col = 1;
  while (ss >> tok) {
    auto eq = tok.find('=');
    if (eq == std::string::npos) syntax_error(lineno, col, "key=value");
    out.push_back({tok.substr(0, eq), tok.substr(eq + 1)});
    col += int(tok.size()) + 1;
  }
  return out;
}

long parse_int(const std::string& s, int lineno, int col) {
  if (s.empty()) syntax_error(lineno, col, "integer");
  char* end = nullptr;
  long v = std::strtol(s.c_str(), &end, 10);
  if (end != s.c_str() + s.size()) syntax_error(lineno, col, "integer");
  return v;
}

}  // namespace

BraidFile parse(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) syntax_error(1, 1, "header line");

  BraidFile f;
  bool have_setting = false, have_genus = false, have_strands = false, have_closure = false;
  for (const auto& [key, value] : split_header(line, 1)) {
    if (key == "setting") {
      if (value == "classical")
        f.braid.setting.family = Family::Classical;
      else if (value == "handlebody")
        f.braid.setting.family = Family::Handlebody;
      else if (value == "surface")
        f.braid.setting.family = Family::Surface;
      else
        syntax_error(1, 1, "classical|handlebody|surface");
      have_setting = true;
    } else if (key == "genus") {
      f.braid.setting.genus = int(parse_int(value, 1, 1));
      have_genus = true;
    } else if (key == "strands") {
      f.braid.setting.strands = int(parse_int(value, 1, 1));
      have_strands = true;
    } else if (key == "closure") {
      if (value == "plat")
        f.closure = Closure::Plat;
      else if (value == "standard")
        f.closure = Closure::Standard;
      else
        syntax_error(1, 1, "plat|standard");
      have_closure = true;
    } else {
      syntax_error(1, 1, "setting|genus|strands|closure");
    }
  }
  if (!have_setting || !have_genus || !have_strands || !have_closure)
    syntax_error(1, 1, "complete header");

  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    while (ls >> tok) {
      int col = 1;
      GenKind kind;
      switch (tok[0]) {
        case 's': kind = GenKind::Sigma; break;
        case 'l': kind = GenKind::LoopAlpha; break;
        case 'a': kind = GenKind::LoopA; break;
        case 'b': kind = GenKind::LoopB; break;
        default: syntax_error(lineno, col, "token s<i>, l<i>, a<i> or b<i>");
      }
      size_t p = 1;
      size_t digits = 0;
      while (p + digits < tok.size() && std::isdigit(static_cast<unsigned char>(tok[p + digits])))
        ++digits;
      if (digits == 0) syntax_error(lineno, col, "generator index");
      int index = int(parse_int(tok.substr(p, digits), lineno, col));
      p += digits;
      long expo = 1;
      if (p < tok.size()) {
        if (tok[p] != '^') syntax_error(lineno, col, "'^'");
        expo = parse_int(tok.substr(p + 1), lineno, col);
        if (expo == 0) syntax_error(lineno, col, "nonzero exponent");
      }
      int sign = expo > 0 ? 1 : -1;
      for (long k = 0; k < std::labs(expo); ++k) f.braid.word.push_back({kind, index, sign});
    }
  }

  validate(f.braid);
  return f;
}

std::string serialize(const BraidFile& f) {
  std::ostringstream out;
  out << "setting=";
  switch (f.braid.setting.family) {
    case Family::Classical: out << "classical"; break;
    case Family::Handlebody: out << "handlebody"; break;
    case Family::Surface: out << "surface"; break;
  }
  out << " genus=" << f.braid.setting.genus << " strands=" << f.braid.setting.strands
      << " closure=" << (f.closure == Closure::Plat ? "plat" : "standard") << "\n";

  const auto& w = f.braid.word;
  bool first = true;
  for (size_t i = 0; i < w.size();) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long expo = long(j - i) * w[i].exponent;
    if (!first) out << ' ';
    first = false;
    Generator g = w[i];
    g.exponent = 1;
    out << to_string(g);
    if (expo != 1) out << '^' << expo;
    i = j;
  }
  out << "\n";
  return out.str();
}

namespace {

// Columns in the picture: strand p sits at character 4*(p-1).
void put(std::string& row, int chcol, char c) {
  if (chcol >= 0 && chcol < int(row.size())) row[chcol] = c;
}

std::string bars_row(int n) {
  std::string row(4 * (n - 1) + 1, ' ');
  for (int p = 1; p <= n; ++p) put(row, 4 * (p - 1), '|');
  return row;
}

}  // namespace

std::string render_ascii(const BraidFile& f) {
  const int n = f.braid.setting.strands;
  std::ostringstream out;

  auto arc_row = [&](bool top) {
    std::string row(4 * (n - 1) + 1, ' ');
    if (f.closure == Closure::Plat) {
      for (int p = 1; p + 1 <= n; p += 2) {
        int a = 4 * (p - 1), b = 4 * p;
        put(row, a, top ? '.' : '\'');
        put(row, b, top ? '.' : '\'');
        for (int c = a + 1; c < b; ++c) put(row, c, top ? '-' : '_');
      }
    } else {
      for (int p = 1; p <= n; ++p) {
        put(row, 4 * (p - 1), top ? '.' : '\'');
        put(row, 4 * (p - 1) + 1, '=');
      }
    }
    return row;
  };

  out << arc_row(true) << "\n";
  for (const Generator& g : f.braid.word) {
    std::string row = bars_row(n);
    if (g.kind == GenKind::Sigma) {
      int a = 4 * (g.index - 1);
      // over strand drawn through, under strand broken at the middle
      put(row, a, ' ');
      put(row, a + 4, ' ');
      put(row, a + 1, '\\');
      put(row, a + 3, '/');
      put(row, a + 2, g.exponent > 0 ? '\\' : '/');
    } else {
      char c = g.kind == GenKind::LoopAlpha ? 'l' : (g.kind == GenKind::LoopA ? 'a' : 'b');
      put(row, 0, g.exponent > 0 ? c : char(std::toupper(c)));
      put(row, 1, char('0' + g.index % 10));
    }
    out << row << "\n";
  }
  out << arc_row(false) << "\n";
  return out.str();
}

}  // namespace platbraid
