#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "ordgraph/quotient.hpp"
#include "ordgraph/regularity.hpp"
#include "ordgraph/verdict.hpp"

namespace ordgraph {

std::vector<std::size_t> digraph_nonreturning(const Multigraph& g, std::size_t w, std::size_t n) {
  if (w >= g.n) throw PreconditionError("vertex out of range");
  auto bad = cycles_without_entry(g);
  if (!bad.empty()) throw PreconditionError("the digraph has a cycle without an entry");
  bool into_w = false;
  for (const auto& e : g.edges) into_w = into_w || e.second == w;
  if (!into_w) throw NotFound("no edge has range " + std::to_string(w));
  if (n == 0) n = 1;

  const std::size_t limit = n + g.n * (g.edges.size() + 1);
  for (std::size_t m = n; m <= limit; ++m) {
    for (std::size_t x = 0; x < g.edges.size(); ++x) {
      // walk mu_1..mu_{m-1} avoiding x, from w down to r(x); layer[i] = possible s(mu_i)
      std::vector<std::vector<bool>> layer(m, std::vector<bool>(g.n, false));
      layer[0][w] = true;
      for (std::size_t i = 1; i < m; ++i)
        for (std::size_t e = 0; e < g.edges.size(); ++e)
          if (e != x && layer[i - 1][g.edges[e].second]) layer[i][g.edges[e].first] = true;
      std::size_t target = g.edges[x].second;
      if (!layer[m - 1][target]) continue;
      // rebuild backwards, least edge id at each step that stays consistent
      std::vector<std::size_t> rev{x};
      std::size_t at = target;
      for (std::size_t i = m - 1; i > 0; --i) {
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
          if (e == x || g.edges[e].first != at || !layer[i - 1][g.edges[e].second]) continue;
          rev.push_back(e);
          at = g.edges[e].second;
          break;
        }
      }
      return {rev.rbegin(), rev.rend()};
    }
  }
  throw NotFound("no non-returning path of length >= " + std::to_string(n) + " ends at vertex " + std::to_string(w));
}

namespace {

// least path in t Lambda_k with source s, BFS by generator name
std::optional<Path> lower_connector(const Presentation& p, VertexId t, VertexId s, unsigned k) {
  std::map<VertexId, Path> best;
  best.emplace(t, Path::identity(p, t));
  std::deque<VertexId> todo{t};
  auto lower = p.generators_below_level(k);
  while (!todo.empty()) {
    VertexId x = todo.front();
    todo.pop_front();
    if (x == s) return best.at(x);
    for (GenId g : lower) {
      const Generator& G = p.generator(g);
      if (G.range != x || best.count(G.source)) continue;
      best.emplace(G.source, compose(best.at(x), Path::generator(p, g)));
      todo.push_back(G.source);
    }
  }
  return std::nullopt;
}

}  // namespace

Path build_nonreturning(const Presentation& p, VertexId v, std::size_t n, unsigned k) {
  auto cv = check_condition_v(p);
  if (!cv.holds) throw NotConstructible("condition-v", "condition (V) fails");
  QuotientDigraph q = falpha(p, k);
  Multigraph g = q.graph();
  if (!cycles_without_entry(g).empty())
    throw NotConstructible("cycle-without-entry", "F_" + std::to_string(k) + " has a cycle without an entry");
  std::vector<std::size_t> route;
  try {
    route = digraph_nonreturning(g, q.comps.of[v], n);
  } catch (const NotFound& e) {
    throw NotConstructible("no-falpha-path", e.what());
  }

  const Ordinal block = Ordinal::omega_power(Ordinal::natural(k));
  Path u = Path::identity(p, v);
  VertexId t = v;
  for (std::size_t j = 0; j < route.size(); ++j) {
    GenId gj = q.edges[route[j]].rep;
    std::optional<Path> piece;
    for (const auto& x : tail_states(Path::generator(p, gj))) {
      if (!(x.offset < block)) break;
      auto h = lower_connector(p, t, x.path.range(), k);
      if (!h) continue;
      piece = compose(*h, x.path);
      break;
    }
    if (!piece)
      throw NotConstructible("connector", "no tail of " + p.generator(gj).name + " connects to " + p.vertex_name(t));
    if (piece->length() != block)
      throw NotConstructible("length", "piece for " + p.generator(gj).name + " has length " + to_string(piece->length()));
    u = compose(u, *piece);
    t = u.source();
  }
  if (u.length() != Ordinal::omega_power(Ordinal::natural(k), route.size()) || u.range() != v)
    throw NotConstructible("assembly", "assembled path has the wrong shape");
  return u;
}

NonreturningCheck check_nonreturning_bounded(const Path& e, unsigned k, std::size_t depth) {
  const Ordinal block = Ordinal::omega_power(Ordinal::natural(k));
  const Ordinal de = e.length();
  const auto& terms = de.terms();
  if (terms.size() != 1 || terms[0].exponent != Ordinal::natural(k))
    throw PreconditionError("length " + to_string(de) + " is not w^" + std::to_string(k) + "*n");
  NonreturningCheck out;
  if (terms[0].coefficient == 1) return out;

  const Presentation& p = e.home();
  std::vector<GenId> letters;
  for (GenId g : p.generators_by_name())
    if (p.level(g) <= k) letters.push_back(g);

  for (const auto& x : tail_states(e)) {
    if (!(x.offset < block)) break;
    // grow f from its source end: f = a_1 ... a_l with s(a_l) = r(x)
    std::function<bool(const Path&, std::size_t)> grow = [&](const Path& f, std::size_t used) {
      Ordinal df = f.length();
      if (block <= df) {
        if (!(df < de)) return false;
        if (equals(split(compose(f, x.path), de).first, e)) {
          out.ok = false;
          out.f = f;
          out.beta = x.offset;
          return true;
        }
      }
      if (used == depth) return false;
      for (GenId a : letters) {
        if (p.generator(a).source != f.range()) continue;
        if (grow(compose(Path::generator(p, a), f), used + 1)) return true;
      }
      return false;
    };
    if (grow(Path::identity(p, x.path.range()), 0)) return out;
  }
  return out;
}

}  // namespace ordgraph
