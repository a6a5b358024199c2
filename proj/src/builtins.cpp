#include <cctype>
#include <string>

#include "ordgraph/presentation.hpp"

namespace ordgraph {

namespace {

using Kind = PresentationError::Kind;

Presentation interval_omega2() {
  Presentation p("interval_omega2");
  VertexId v = p.add_vertex("v");
  GenId e = p.add_generator("e", 0, v, v);
  GenId f = p.add_generator("f", 1, v, v);
  p.set_rule(f, {e}, f);
  return p;
}

Presentation two_loop() {
  Presentation p("two_loop");
  VertexId v = p.add_vertex("v");
  GenId e = p.add_generator("e", 0, v, v);
  GenId f = p.add_generator("f", 0, v, v);
  GenId g = p.add_generator("g", 1, v, v);
  p.set_rule(g, {e, f}, g);
  return p;
}

Presentation two_plus_two() {
  Presentation p("two_plus_two");
  VertexId v = p.add_vertex("v");
  GenId e = p.add_generator("e", 0, v, v);
  GenId f = p.add_generator("f", 0, v, v);
  GenId g = p.add_generator("g", 1, v, v);
  GenId h = p.add_generator("h", 1, v, v);
  p.set_rule(g, {e}, g);
  p.set_rule(h, {f}, h);
  return p;
}

// g_n = f_n e_n g_{n+1}, indices mod N; every g_n has source v0
Presentation long_path_trunc(unsigned n) {
  if (n < 2) throw PresentationError(Kind::InvalidParameter, "long_path_trunc needs N >= 2");
  Presentation p("long_path_trunc(" + std::to_string(n) + ")");
  p.metadata().analogue = true;
  p.metadata().note = "indices wrap modulo " + std::to_string(n);
  std::vector<VertexId> v;
  for (unsigned i = 0; i < n; ++i) v.push_back(p.add_vertex("v" + std::to_string(i)));
  std::vector<GenId> e, f, g;
  for (unsigned i = 0; i < n; ++i) f.push_back(p.add_generator("f" + std::to_string(i), 0, v[i], v[i]));
  for (unsigned i = 0; i < n; ++i) e.push_back(p.add_generator("e" + std::to_string(i), 0, v[(i + 1) % n], v[i]));
  for (unsigned i = 0; i < n; ++i) g.push_back(p.add_generator("g" + std::to_string(i), 1, v[0], v[i]));
  for (unsigned i = 0; i < n; ++i) p.set_rule(g[i], {f[i], e[i]}, g[(i + 1) % n]);
  return p;
}

// Shift-register stand-in for the Cantor-indexed example: strings have fixed
// length L and "0x" prepends 0 and drops the last bit. Levels run 0..K.
Presentation cantor_trunc(unsigned L, unsigned K) {
  if (L < 1 || K < 1) throw PresentationError(Kind::InvalidParameter, "cantor_trunc needs L >= 1 and K >= 1");
  Presentation p("cantor_trunc(" + std::to_string(L) + "," + std::to_string(K) + ")");
  p.metadata().analogue = true;
  p.metadata().note = "binary strings of length " + std::to_string(L) + " with prepend-and-drop shift; levels 0.." +
                      std::to_string(K);
  const unsigned count = 1u << L;
  auto bits = [&](unsigned x) {
    std::string s;
    for (unsigned i = 0; i < L; ++i) s += ((x >> (L - 1 - i)) & 1u) ? '1' : '0';
    return s;
  };
  // x as string s: (b x) = b followed by s without its last character
  auto push = [&](unsigned b, unsigned x) { return (b << (L - 1)) | (x >> 1); };

  std::vector<VertexId> v;
  for (unsigned x = 0; x < count; ++x) v.push_back(p.add_vertex("v" + bits(x)));

  // gen[kind][x] at the current level; kinds e f g h
  std::vector<std::vector<GenId>> cur(4, std::vector<GenId>(count));
  const char* kinds = "efgh";
  auto nm = [&](int kind, unsigned level, unsigned x) {
    return std::string(1, kinds[kind]) + std::to_string(level) + "_" + bits(x);
  };
  for (unsigned x = 0; x < count; ++x) {
    VertexId v0 = v[push(0, x)], v1 = v[push(1, x)];
    cur[0][x] = p.add_generator(nm(0, 0, x), 0, v0, v0);
    cur[1][x] = p.add_generator(nm(1, 0, x), 0, v1, v1);
    cur[2][x] = p.add_generator(nm(2, 0, x), 0, v0, v1);
    cur[3][x] = p.add_generator(nm(3, 0, x), 0, v1, v0);
  }
  for (unsigned a = 1; a <= K; ++a) {
    std::vector<std::vector<GenId>> next(4, std::vector<GenId>(count));
    auto G = [&](int kind, unsigned x) -> const Generator& { return p.generator(cur[kind][x]); };
    for (unsigned x = 0; x < count; ++x) {
      unsigned x0 = push(0, x), x1 = push(1, x);
      next[0][x] = p.add_generator(nm(0, a, x), a, G(0, x0).source, G(0, x0).range);
      next[1][x] = p.add_generator(nm(1, a, x), a, G(1, x1).source, G(1, x1).range);
      next[2][x] = p.add_generator(nm(2, a, x), a, G(2, x0).source, G(2, x1).range);
      next[3][x] = p.add_generator(nm(3, a, x), a, G(3, x1).source, G(3, x0).range);
    }
    for (unsigned x = 0; x < count; ++x) {
      unsigned x0 = push(0, x), x1 = push(1, x);
      p.set_rule(next[0][x], {cur[0][x0]}, next[0][x]);
      p.set_rule(next[1][x], {cur[1][x1]}, next[1][x]);
      p.set_rule(next[2][x], {cur[2][x1], cur[3][x1]}, next[2][x]);
      p.set_rule(next[3][x], {cur[3][x0], cur[2][x0]}, next[3][x]);
    }
    cur = std::move(next);
  }
  return p;
}

}  // namespace

std::vector<std::string> builtin_names() {
  return {"interval_omega2", "two_loop", "two_plus_two", "long_path_trunc(N)", "cantor_trunc(L,K)"};
}

Presentation builtin(std::string_view spec, const std::vector<unsigned>& given) {
  std::string name(spec);
  std::vector<unsigned> params = given;
  if (auto open = name.find('('); open != std::string::npos) {
    if (name.back() != ')') throw PresentationError(Kind::InvalidParameter, "malformed builtin '" + name + "'");
    std::string inner = name.substr(open + 1, name.size() - open - 2);
    name = name.substr(0, open);
    params.clear();
    std::string cur;
    for (char c : inner + ",") {
      if (c == ',') {
        if (cur.empty()) throw PresentationError(Kind::InvalidParameter, "empty builtin parameter");
        try {
          params.push_back(static_cast<unsigned>(std::stoul(cur)));
        } catch (const std::exception&) {
          throw PresentationError(Kind::InvalidParameter, "bad builtin parameter '" + cur + "'");
        }
        cur.clear();
      } else if (!std::isspace(static_cast<unsigned char>(c))) {
        cur += c;
      }
    }
  }
  auto want = [&](std::size_t n) {
    if (params.size() != n)
      throw PresentationError(Kind::InvalidParameter,
                              name + " takes " + std::to_string(n) + " parameter" + (n == 1 ? "" : "s"));
  };
  if (name == "interval_omega2") return want(0), interval_omega2();
  if (name == "two_loop") return want(0), two_loop();
  if (name == "two_plus_two") return want(0), two_plus_two();
  if (name == "long_path_trunc") return want(1), long_path_trunc(params[0]);
  if (name == "cantor_trunc") return want(2), cantor_trunc(params[0], params[1]);
  throw PresentationError(Kind::UnknownIdentifier, "unknown builtin or file '" + std::string(spec) + "'");
}

}  // namespace ordgraph
