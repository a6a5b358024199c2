#include "ordgraph/starword.hpp"

namespace ordgraph {

StarWord StarWord::make(Path e, Path f) {
  if (&e.home() != &f.home()) throw PreconditionError("star word sides belong to different presentations");
  if (e.source() != f.source())
    throw PreconditionError("star word needs equal sources, got " + e.home().vertex_name(e.source()) + " and " +
                            e.home().vertex_name(f.source()));
  StarWord w;
  w.w_.emplace(std::move(e), std::move(f));
  return w;
}

StarWord adjoint(const StarWord& w) {
  if (w.is_zero()) return w;
  return StarWord::make(w.right(), w.left());
}

StarWord multiply(const StarWord& a, const StarWord& b) {
  if (a.is_zero() || b.is_zero()) return StarWord::zero();
  const Path &e = a.left(), &f = a.right(), &g = b.left(), &h = b.right();
  if (&f.home() != &g.home()) return StarWord::zero();
  // middle factor T_f* T_g
  switch (compare_extensions(f, g)) {
    case Extension::Equal:
      return StarWord::make(e, h);
    case Extension::ProperPrefixOf:
      return StarWord::make(compose(e, split(g, f.length()).second), h);
    case Extension::ProperlyExtends:
      return StarWord::make(e, compose(h, split(f, g.length()).second));
    case Extension::Disjoint:
      break;
  }
  return StarWord::zero();
}

bool equals(const StarWord& a, const StarWord& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return equals(a.left(), b.left()) && equals(a.right(), b.right());
}

std::string to_string(const StarWord& w) {
  if (w.is_zero()) return "0";
  return to_word(w.left()) + " * " + to_word(w.right());
}

}  // namespace ordgraph
