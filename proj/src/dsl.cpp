#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ordgraph/presentation.hpp"

namespace ordgraph {

namespace {

enum class Tok { Ident, Nat, Colon, Arrow, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line, col;
};

using Kind = PresentationError::Kind;

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::Ident, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::Nat, std::string(s.substr(i, j - i)), line, col});
      advance(j - i);
    } else if (c == ':') {
      out.push_back({Tok::Colon, ":", line, col});
      advance(1);
    } else if (c == '=') {
      out.push_back({Tok::Equals, "=", line, col});
      advance(1);
    } else if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') {
      out.push_back({Tok::Arrow, "->", line, col});
      advance(2);
    } else {
      throw PresentationError(Kind::Syntax, std::string("unexpected character '") + c + "'", line, col);
    }
  }
  out.push_back({Tok::End, "", line, col});
  return out;
}

bool is_keyword(const Token& t) {
  return t.kind == Tok::Ident && (t.text == "vertex" || t.text == "edge" || t.text == "gen" || t.text == "level");
}

struct GenDecl {
  Token name;
  unsigned level;
  Token source, range;
  std::vector<Token> rhs;  // word letters then tail; empty for edges
};

class DslParser {
 public:
  explicit DslParser(std::vector<Token> toks) : t_(std::move(toks)) {}

  Presentation run(std::string name) {
    while (peek().kind != Tok::End) statement();
    return build(std::move(name));
  }

 private:
  std::vector<Token> t_;
  std::size_t pos_ = 0;
  std::vector<Token> vertices_;
  std::vector<GenDecl> gens_;

  const Token& peek() const { return t_[pos_]; }

  [[noreturn]] void fail(const Token& at, const std::string& msg) const {
    throw PresentationError(Kind::Syntax, msg + (at.kind == Tok::End ? " at end of input" : " near '" + at.text + "'"),
                            at.line, at.col);
  }

  Token expect(Tok k, const char* what) {
    const Token& t = peek();
    if (t.kind != k || (k == Tok::Ident && is_keyword(t))) fail(t, std::string("expected ") + what);
    ++pos_;
    return t;
  }

  void keyword(const char* kw) {
    const Token& t = peek();
    if (t.kind != Tok::Ident || t.text != kw) fail(t, std::string("expected '") + kw + "'");
    ++pos_;
  }

  bool at_plain_ident() const { return peek().kind == Tok::Ident && !is_keyword(peek()); }

  void statement() {
    const Token& t = peek();
    if (t.kind != Tok::Ident) fail(t, "expected 'vertex', 'edge' or 'gen'");
    if (t.text == "vertex") {
      ++pos_;
      vertices_.push_back(expect(Tok::Ident, "vertex name"));
      while (at_plain_ident()) vertices_.push_back(t_[pos_++]);
    } else if (t.text == "edge") {
      ++pos_;
      GenDecl d;
      d.name = expect(Tok::Ident, "edge name");
      d.level = 0;
      expect(Tok::Colon, "':'");
      d.source = expect(Tok::Ident, "source vertex");
      expect(Tok::Arrow, "'->'");
      d.range = expect(Tok::Ident, "range vertex");
      gens_.push_back(std::move(d));
    } else if (t.text == "gen") {
      ++pos_;
      GenDecl d;
      d.name = expect(Tok::Ident, "generator name");
      keyword("level");
      Token lv = expect(Tok::Nat, "level number");
      try {
        d.level = static_cast<unsigned>(std::stoul(lv.text));
      } catch (const std::exception&) {
        fail(lv, "level out of range");
      }
      expect(Tok::Colon, "':'");
      d.source = expect(Tok::Ident, "source vertex");
      expect(Tok::Arrow, "'->'");
      d.range = expect(Tok::Ident, "range vertex");
      expect(Tok::Equals, "'='");
      d.rhs.push_back(expect(Tok::Ident, "rule letter"));
      while (at_plain_ident()) d.rhs.push_back(t_[pos_++]);
      gens_.push_back(std::move(d));
    } else {
      fail(t, "expected 'vertex', 'edge' or 'gen'");
    }
  }

  Presentation build(std::string name) {
    Presentation p(std::move(name));
    auto dup = [](const Token& t) {
      return PresentationError(Kind::Duplicate, "duplicate definition of '" + t.text + "'", t.line, t.col);
    };
    for (const auto& v : vertices_) {
      if (p.find_vertex(v.text)) throw dup(v);
      p.add_vertex(v.text);
    }
    auto vertex = [&](const Token& t) {
      auto v = p.find_vertex(t.text);
      if (!v) throw PresentationError(Kind::UnknownIdentifier, "unknown vertex '" + t.text + "'", t.line, t.col);
      return *v;
    };
    for (const auto& d : gens_) {
      if (p.find_vertex(d.name.text) || p.find_generator(d.name.text)) throw dup(d.name);
      p.add_generator(d.name.text, d.level, vertex(d.source), vertex(d.range));
    }
    for (const auto& d : gens_) {
      if (d.rhs.empty()) continue;
      std::vector<GenId> ids;
      for (const auto& t : d.rhs) {
        auto g = p.find_generator(t.text);
        if (!g) throw PresentationError(Kind::UnknownIdentifier, "unknown generator '" + t.text + "'", t.line, t.col);
        ids.push_back(*g);
      }
      GenId tail = ids.back();
      ids.pop_back();
      p.set_rule(*p.find_generator(d.name.text), std::move(ids), tail);
    }
    return p;
  }
};

}  // namespace

Presentation parse_presentation(std::string_view text, std::string name) {
  return DslParser(lex(text)).run(std::move(name));
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  if (!p.name().empty()) os << "# " << p.name() << '\n';
  if (p.vertex_count() > 0) {
    os << "vertex";
    for (VertexId v = 0; v < p.vertex_count(); ++v) os << ' ' << p.vertex_name(v);
    os << '\n';
  }
  for (const auto& g : p.generators()) {
    const std::string& s = p.vertex_name(g.source);
    const std::string& r = p.vertex_name(g.range);
    if (g.level == 0 && !g.tail) {
      os << "edge " << g.name << " : " << s << " -> " << r << '\n';
      continue;
    }
    os << "gen " << g.name << " level " << g.level << " : " << s << " -> " << r << " =";
    for (GenId x : g.word) os << ' ' << p.generator(x).name;
    if (g.tail) os << ' ' << p.generator(*g.tail).name;
    os << '\n';
  }
  return os.str();
}

Presentation load_presentation(const std::string& source) {
  Presentation p;
  std::error_code ec;
  if (std::filesystem::is_regular_file(source, ec)) {
    std::ifstream in(source);
    if (!in) throw PresentationError(Kind::Invalid, "cannot read '" + source + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    p = parse_presentation(buf.str(), std::filesystem::path(source).stem().string());
  } else {
    p = builtin(source);
  }
  auto rep = validate(p);
  if (!rep.ok()) {
    std::string msg = "presentation '" + p.name() + "' is invalid:";
    for (const auto& v : rep.violations) msg += "\n  " + to_string(v.kind) + " " + v.generator + ": " + v.detail;
    throw PresentationError(Kind::Invalid, msg);
  }
  return p;
}

}  // namespace ordgraph
