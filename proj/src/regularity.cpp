#include "ordgraph/regularity.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace ordgraph {

std::string to_string(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    case Tri::Unknown: return "unknown";
  }
  return "?";
}

Tri tri_and(Tri a, Tri b) {
  if (a == Tri::False || b == Tri::False) return Tri::False;
  if (a == Tri::Unknown || b == Tri::Unknown) return Tri::Unknown;
  return Tri::True;
}

std::string to_string(Fibre::Kind k) {
  switch (k) {
    case Fibre::Kind::FiniteSet: return "FiniteSet";
    case Fibre::Kind::InfiniteWitness: return "InfiniteWitness";
    case Fibre::Kind::Unknown: return "Unknown";
  }
  return "?";
}

std::set<VertexId> sublevel_reach(const Presentation& p, VertexId v, unsigned k) {
  std::set<VertexId> seen{v};
  std::deque<VertexId> todo{v};
  auto lower = p.generators_below_level(k);
  while (!todo.empty()) {
    VertexId w = todo.front();
    todo.pop_front();
    for (GenId g : lower) {
      const Generator& G = p.generator(g);
      if (G.range == w && seen.insert(G.source).second) todo.push_back(G.source);
    }
  }
  return seen;
}

bool is_alpha_source(const Presentation& p, VertexId v, unsigned k) {
  auto reach = sublevel_reach(p, v, k);
  for (GenId g : p.generators_at_level(k))
    if (reach.count(p.generator(g).range)) return false;
  return true;
}

bool is_alpha_source_regular(const Presentation& p, VertexId v, unsigned k) {
  for (VertexId w : sublevel_reach(p, v, k))
    if (is_alpha_source(p, w, k)) return false;
  return true;
}

namespace {

void sort_by_word(std::vector<Path>& xs) {
  std::stable_sort(xs.begin(), xs.end(), [](const Path& a, const Path& b) { return to_word(a) < to_word(b); });
}

// Shortest path in v Lambda_k with source w, least by generator names among
// equal lengths in BFS order; nullopt when w is not reachable.
std::optional<Path> connector(const Presentation& p, VertexId v, VertexId w, unsigned k) {
  std::map<VertexId, Path> best;
  best.emplace(v, Path::identity(p, v));
  std::deque<VertexId> todo{v};
  auto lower = p.generators_below_level(k);  // name order
  while (!todo.empty()) {
    VertexId x = todo.front();
    todo.pop_front();
    if (x == w) return best.at(x);
    for (GenId g : lower) {
      const Generator& G = p.generator(g);
      if (G.range != x || best.count(G.source)) continue;
      best.emplace(G.source, compose(best.at(x), Path::generator(p, g)));
      todo.push_back(G.source);
    }
  }
  return std::nullopt;
}

bool add_unique(std::vector<Path>& xs, const Path& y) {
  for (const Path& x : xs)
    if (equals(x, y)) return false;
  xs.push_back(y);
  return true;
}

// c . sigma and sigma differ somewhere below their common length, so the
// pumps c^n sigma are pairwise distinct.
std::optional<Fibre> pumping_certificate(const Presentation& p, VertexId v, unsigned k, const std::set<VertexId>& reach,
                                         const std::map<VertexId, std::vector<Path>>& F) {
  auto lower = p.generators_below_level(k);
  for (VertexId w : reach) {
    auto it = F.find(w);
    if (it == F.end() || it->second.empty()) continue;
    std::vector<Path> cycles;
    for (GenId a : lower) {
      const Generator& A = p.generator(a);
      if (A.range != w) continue;
      if (A.source == w) cycles.push_back(Path::generator(p, a));
      for (GenId b : lower) {
        const Generator& B = p.generator(b);
        if (B.range == A.source && B.source == w) cycles.push_back(compose(Path::generator(p, a), Path::generator(p, b)));
      }
    }
    for (const Path& c : cycles) {
      for (const Path& s : it->second) {
        if (prefix_equivalent(compose(c, s), s)) continue;
        auto u = connector(p, v, w, k);
        if (!u) continue;
        Fibre out;
        out.kind = Fibre::Kind::InfiniteWitness;
        out.cycle = c;
        out.seed = s;
        out.connector = *u;
        return out;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Fibre fibre(const Presentation& p, VertexId v, unsigned k, std::size_t bound) {
  Fibre out;
  out.bound = bound;
  if (k == 0) {
    out.kind = Fibre::Kind::FiniteSet;
    for (GenId g : p.generators_at_level(0))
      if (p.generator(g).range == v) out.members.push_back(Path::generator(p, g));
    sort_by_word(out.members);
    return out;
  }
  auto reach = sublevel_reach(p, v, k);
  std::map<VertexId, std::vector<Path>> F;
  for (GenId g : p.generators_at_level(k)) {
    VertexId r = p.generator(g).range;
    if (reach.count(r)) F[r].push_back(Path::generator(p, g));
  }
  if (auto w = pumping_certificate(p, v, k, reach, F)) {
    w->bound = bound;
    return *w;
  }
  // close under prepending lower generators
  auto lower = p.generators_below_level(k);
  std::deque<std::pair<VertexId, std::size_t>> todo;
  for (auto& [w, xs] : F)
    for (std::size_t i = 0; i < xs.size(); ++i) todo.push_back({w, i});
  bool overflow = false;
  for (auto& [w, xs] : F) overflow = overflow || xs.size() > bound;
  while (!todo.empty() && !overflow) {
    auto [w, i] = todo.front();
    todo.pop_front();
    for (GenId a : lower) {
      const Generator& A = p.generator(a);
      if (A.source != w || !reach.count(A.range)) continue;
      Path y = compose(Path::generator(p, a), F[w][i]);
      auto& dst = F[A.range];
      if (add_unique(dst, y)) {
        if (dst.size() > bound) {
          overflow = true;
          break;
        }
        todo.push_back({A.range, dst.size() - 1});
      }
    }
  }
  if (overflow) {
    // a larger search space may still expose a pump
    if (auto w = pumping_certificate(p, v, k, reach, F)) {
      w->bound = bound;
      return *w;
    }
    out.kind = Fibre::Kind::Unknown;
    return out;
  }
  out.kind = Fibre::Kind::FiniteSet;
  out.members = F[v];
  sort_by_word(out.members);
  return out;
}

Tri is_alpha_regular(const Presentation& p, VertexId v, unsigned k, std::size_t bound) {
  if (!is_alpha_source_regular(p, v, k)) return Tri::False;
  Fibre f = fibre(p, v, k, bound);
  if (f.kind == Fibre::Kind::Unknown) return Tri::Unknown;
  return tri(f.kind == Fibre::Kind::FiniteSet);
}

VertexLevelReport analyze_vertex(const Presentation& p, VertexId v, unsigned k, std::size_t bound) {
  VertexLevelReport r;
  r.vertex = v;
  r.level = k;
  r.is_source = is_alpha_source(p, v, k);
  r.is_source_regular = is_alpha_source_regular(p, v, k);
  r.fibre = fibre(p, v, k, bound);
  if (!r.is_source_regular)
    r.is_regular = Tri::False;
  else if (r.fibre.kind == Fibre::Kind::Unknown)
    r.is_regular = Tri::Unknown;
  else
    r.is_regular = tri(r.fibre.kind == Fibre::Kind::FiniteSet);
  return r;
}

}  // namespace ordgraph
