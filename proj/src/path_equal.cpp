#include <tuple>

#include "ordgraph/path.hpp"

namespace ordgraph {

namespace {

enum class Mode { Intensional, Extensional };

using Blocks = std::vector<Block>;

bool blocks_equal(const Presentation& p, const Blocks& a, const Blocks& b, Mode m);

// both sides are single blocks of the same level k >= 1
bool limit_equal(const Presentation& p, const Block& a, const Block& b, Mode m) {
  Blocks pa = a.prefix, pb = b.prefix;
  GenId ta = a.gen, tb = b.gen;

  struct State {
    GenId ta, tb;
    int side;  // 0: a empty, 1: b empty, 2: both empty
    Blocks rest;
  };
  std::vector<State> seen;

  for (;;) {
    while (!pa.empty() && !pb.empty()) {
      Ordinal la = detail::length_of(p, pa), lb = detail::length_of(p, pb);
      if (la <= lb) {
        auto [h, t] = detail::split_blocks(p, pb, la);
        if (!blocks_equal(p, pa, h, m)) return false;
        pa.clear();
        pb = std::move(t);
      } else {
        auto [h, t] = detail::split_blocks(p, pa, lb);
        if (!blocks_equal(p, h, pb, m)) return false;
        pb.clear();
        pa = std::move(t);
      }
    }
    if (pa.empty() && pb.empty() && ta == tb) return true;

    int side = pa.empty() && pb.empty() ? 2 : (pa.empty() ? 0 : 1);
    const Blocks& rest = side == 0 ? pb : pa;
    for (const State& s : seen) {
      if (s.ta == ta && s.tb == tb && s.side == side && s.rest.size() == rest.size() &&
          blocks_equal(p, s.rest, rest, m))
        return m == Mode::Extensional;
    }
    seen.push_back({ta, tb, side, rest});

    if (pa.empty()) {
      const Generator& g = p.generator(ta);
      pa = detail::word_blocks(p, g.word);
      ta = *g.tail;
    }
    if (pb.empty()) {
      const Generator& g = p.generator(tb);
      pb = detail::word_blocks(p, g.word);
      tb = *g.tail;
    }
  }
}

bool block_equal(const Presentation& p, const Block& a, const Block& b, Mode m) {
  const Generator& ga = p.generator(a.gen);
  const Generator& gb = p.generator(b.gen);
  if (ga.level != gb.level) return false;
  if (ga.level == 0) return a.gen == b.gen;
  if (a == b) return true;
  if (ga.source != gb.source) return false;
  if (detail::range_of(p, {a}) != detail::range_of(p, {b})) return false;
  return limit_equal(p, a, b, m);
}

bool blocks_equal(const Presentation& p, const Blocks& a, const Blocks& b, Mode m) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!block_equal(p, a[i], b[i], m)) return false;
  return true;
}

bool path_equal(const Path& e, const Path& f, Mode m) {
  if (&e.home() != &f.home()) return false;
  if (e.is_identity() || f.is_identity()) return e.is_identity() && f.is_identity() && e.range() == f.range();
  return blocks_equal(e.home(), e.blocks(), f.blocks(), m);
}

}  // namespace

bool equals(const Path& e, const Path& f) { return path_equal(e, f, Mode::Intensional); }

bool prefix_equivalent(const Path& e, const Path& f) { return path_equal(e, f, Mode::Extensional); }

}  // namespace ordgraph
