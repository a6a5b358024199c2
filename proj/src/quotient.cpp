#include "ordgraph/quotient.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

namespace ordgraph {

namespace {

struct UnionFind {
  std::vector<std::size_t> up;
  explicit UnionFind(std::size_t n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  std::size_t find(std::size_t x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { up[find(a)] = find(b); }
};

}  // namespace

Components components(const Presentation& p, unsigned k) {
  UnionFind uf(p.vertex_count());
  for (GenId g : p.generators_below_level(k)) uf.unite(p.generator(g).source, p.generator(g).range);
  Components c;
  c.of.assign(p.vertex_count(), 0);
  std::vector<std::size_t> id_of_root(p.vertex_count(), SIZE_MAX);
  for (VertexId v : p.vertices_by_name()) {
    std::size_t r = uf.find(v);
    if (id_of_root[r] == SIZE_MAX) {
      id_of_root[r] = c.members.size();
      c.members.emplace_back();
    }
    c.of[v] = id_of_root[r];
    c.members[id_of_root[r]].push_back(v);
  }
  return c;
}

bool tail_equiv(const Presentation& p, GenId f, GenId g, unsigned k) {
  if (p.level(f) != k || p.level(g) != k)
    throw PreconditionError("tail_equiv needs two level-" + std::to_string(k) + " generators");
  if (f == g) return true;
  auto a = tail_states(Path::generator(p, f));
  auto b = tail_states(Path::generator(p, g));
  for (const auto& x : a)
    for (const auto& y : b)
      if (x.path.range() == y.path.range() && equals(x.path, y.path)) return true;
  return false;
}

Multigraph QuotientDigraph::graph() const {
  Multigraph g;
  g.n = comps.members.size();
  for (const auto& e : edges) g.edges.push_back({e.source, e.range});
  return g;
}

QuotientDigraph falpha(const Presentation& p, unsigned k) {
  QuotientDigraph q;
  q.level = k;
  q.comps = components(p, k);
  auto gens = p.generators_at_level(k);  // name order
  std::vector<std::vector<TailState>> tails;
  for (GenId g : gens) tails.push_back(tail_states(Path::generator(p, g)));
  UnionFind uf(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      // tails of equivalent generators end at the same source
      if (p.generator(gens[i]).source != p.generator(gens[j]).source || uf.find(i) == uf.find(j)) continue;
      bool hit = false;
      for (const auto& x : tails[i]) {
        for (const auto& y : tails[j])
          if (x.path.range() == y.path.range() && equals(x.path, y.path)) {
            hit = true;
            break;
          }
        if (hit) break;
      }
      if (hit) uf.unite(i, j);
    }
  std::vector<std::size_t> slot(gens.size(), SIZE_MAX);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    std::size_t r = uf.find(i);
    if (slot[r] == SIZE_MAX) {
      slot[r] = q.edges.size();
      const Generator& G = p.generator(gens[i]);
      q.edges.push_back({gens[i], {}, q.comps.of[G.source], q.comps.of[G.range]});
    }
    q.edges[slot[r]].members.push_back(gens[i]);
  }
  return q;
}

std::string to_dot(const Presentation& p, const QuotientDigraph& q) {
  std::ostringstream os;
  os << "digraph F" << q.level << " {\n";
  for (std::size_t c = 0; c < q.comps.members.size(); ++c) {
    os << "  c" << c << " [label=\"";
    for (std::size_t i = 0; i < q.comps.members[c].size(); ++i)
      os << (i ? " " : "") << p.vertex_name(q.comps.members[c][i]);
    os << "\"];\n";
  }
  for (const auto& e : q.edges)
    os << "  c" << e.source << " -> c" << e.range << " [label=\"" << p.generator(e.rep).name << "\"];\n";
  os << "}\n";
  return os.str();
}

// Johnson's circuit enumeration, run on the arc relation source -> range. A
// circuit found as arcs a_1 ... a_n (following arcs) is reported reversed so
// that the list reads in composition order.
std::vector<EdgeCycle> elementary_cycles(const Multigraph& g) {
  std::vector<EdgeCycle> out;
  const std::size_t n = g.n;
  std::vector<std::vector<std::size_t>> outgoing(n);  // edge ids by source
  for (std::size_t e = 0; e < g.edges.size(); ++e) outgoing[g.edges[e].first].push_back(e);

  std::vector<bool> blocked(n);
  std::vector<std::set<std::size_t>> B(n);
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    // restrict to vertices >= s; Johnson restricts further to s's strong
    // component, which only prunes, so plain >= s is enough here
    for (std::size_t v = s; v < n; ++v) {
      blocked[v] = false;
      B[v].clear();
    }
    std::function<void(std::size_t)> unblock = [&](std::size_t u) {
      blocked[u] = false;
      auto w = std::move(B[u]);
      B[u].clear();
      for (std::size_t x : w)
        if (blocked[x]) unblock(x);
    };
    std::function<bool(std::size_t)> circuit = [&](std::size_t v) {
      bool found = false;
      blocked[v] = true;
      for (std::size_t e : outgoing[v]) {
        std::size_t w = g.edges[e].second;
        if (w < s) continue;
        stack.push_back(e);
        if (w == s) {
          EdgeCycle c(stack.rbegin(), stack.rend());
          out.push_back(c);
          found = true;
        } else if (!blocked[w]) {
          if (circuit(w)) found = true;
        }
        stack.pop_back();
      }
      if (found) {
        unblock(v);
      } else {
        for (std::size_t e : outgoing[v]) {
          std::size_t w = g.edges[e].second;
          if (w >= s) B[w].insert(v);
        }
      }
      return found;
    };
    circuit(s);
  }
  for (auto& c : out) std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EdgeCycle> cycles_without_entry(const Multigraph& g) {
  // a cycle has no entry iff each of its vertices has exactly one incoming edge
  std::vector<std::vector<std::size_t>> incoming(g.n);
  for (std::size_t e = 0; e < g.edges.size(); ++e) incoming[g.edges[e].second].push_back(e);
  std::vector<EdgeCycle> out;
  std::vector<int> state(g.n, 0);  // 0 new, 1 on current walk, 2 done
  for (std::size_t start = 0; start < g.n; ++start) {
    std::vector<std::size_t> walk;
    std::size_t v = start;
    while (state[v] == 0 && incoming[v].size() == 1) {
      state[v] = 1;
      walk.push_back(v);
      v = g.edges[incoming[v][0]].first;
    }
    if (state[v] == 1) {
      // v closes a cycle; collect the edges entering v, pred(v), ...
      EdgeCycle c;
      std::size_t x = v;
      do {
        std::size_t e = incoming[x][0];
        c.push_back(e);
        x = g.edges[e].first;
      } while (x != v);
      std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
      out.push_back(c);
    }
    for (std::size_t u : walk) state[u] = 2;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ordgraph
