#include "ordgraph/regularity.hpp"

namespace ordgraph {

std::vector<Path> minimalize(const std::vector<Path>& F) {
  std::vector<bool> drop(F.size(), false);
  for (std::size_t i = 0; i < F.size(); ++i) {
    for (std::size_t j = 0; j < F.size() && !drop[i]; ++j) {
      if (i == j || drop[j]) continue;
      auto x = compare_extensions(F[i], F[j]);
      // F[i] in F[j] Lambda; equal members keep the earlier copy
      if (x == Extension::ProperlyExtends || (x == Extension::Equal && j < i)) drop[i] = true;
    }
  }
  std::vector<Path> out;
  for (std::size_t i = 0; i < F.size(); ++i)
    if (!drop[i]) out.push_back(F[i]);
  return out;
}

std::pair<std::vector<Path>, std::vector<Path>> split_exhaustive(const std::vector<Path>& F, const Path& e) {
  for (std::size_t i = 0; i < F.size(); ++i) {
    if (F[i].range() != e.range()) throw PreconditionError("member " + to_word(F[i]) + " does not share the range of e");
    for (std::size_t j = i + 1; j < F.size(); ++j)
      if (compare_extensions(F[i], F[j]) != Extension::Disjoint)
        throw PreconditionError("F is not minimal: " + to_word(F[i]) + " and " + to_word(F[j]) + " are comparable");
  }
  std::vector<Path> low, up;
  bool placed = false;
  for (const Path& f : F) {
    auto x = compare_extensions(e, f);
    if (x == Extension::Equal || x == Extension::ProperPrefixOf) {
      if (!placed) low.push_back(e);
      placed = true;
      up.push_back(split(f, e.length()).second);
    } else {
      low.push_back(f);
    }
  }
  if (!placed) throw PreconditionError("no member of F extends " + to_word(e));
  return {low, up};
}

namespace {

Tri exhaustive_rec(const Presentation& p, VertexId v, std::vector<Path> F, std::size_t bound) {
  F = minimalize(F);
  if (F.empty()) return Tri::False;
  for (const Path& f : F)
    if (f.is_identity()) return Tri::True;

  Ordinal m = F.front().length();
  for (const Path& f : F) m = std::min(m, f.length());
  const Ordinal& lead = m.terms().front().exponent;
  auto k = lead.as_natural();
  if (!k) throw PreconditionError("path length " + to_string(m) + " is beyond the generator levels");
  Ordinal step = Ordinal::omega_power(lead);

  // common prefixes of length w^k
  std::vector<Path> heads;
  std::vector<std::vector<Path>> rests;
  for (const Path& f : F) {
    auto [h, t] = split(f, step);
    std::size_t i = 0;
    while (i < heads.size() && !equals(heads[i], h)) ++i;
    if (i == heads.size()) {
      heads.push_back(h);
      rests.emplace_back();
    }
    rests[i].push_back(t);
  }

  // a finite exhaustive subset of v Lambda^{w^k} forces k-regularity and equals the fibre
  Tri level;
  if (!is_alpha_source_regular(p, v, static_cast<unsigned>(*k))) {
    level = Tri::False;
  } else {
    Fibre fb = fibre(p, v, static_cast<unsigned>(*k), bound);
    if (fb.kind == Fibre::Kind::Unknown) {
      level = Tri::Unknown;
    } else if (fb.kind == Fibre::Kind::InfiniteWitness) {
      level = Tri::False;
    } else {
      bool same = fb.members.size() == heads.size();
      for (const Path& x : fb.members) {
        bool found = false;
        for (const Path& h : heads) found = found || equals(x, h);
        same = same && found;
      }
      level = tri(same);
    }
  }
  if (level == Tri::False) return level;
  Tri acc = level;
  for (std::size_t i = 0; i < heads.size(); ++i) {
    acc = tri_and(acc, exhaustive_rec(p, heads[i].source(), rests[i], bound));
    if (acc == Tri::False) break;
  }
  return acc;
}

}  // namespace

Tri is_exhaustive(const Presentation& p, VertexId v, const std::vector<Path>& F, std::size_t bound) {
  for (const Path& f : F) {
    if (&f.home() != &p) throw PreconditionError("member from another presentation");
    if (f.range() != v) throw PreconditionError("member " + to_word(f) + " is not in " + p.vertex_name(v) + "Lambda");
  }
  return exhaustive_rec(p, v, F, bound);
}

}  // namespace ordgraph
