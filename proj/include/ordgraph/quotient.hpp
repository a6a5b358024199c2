#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordgraph/path.hpp"

namespace ordgraph {

struct Components {
  std::vector<std::size_t> of;                 // vertex -> component id
  std::vector<std::vector<VertexId>> members;  // name-sorted; ids ordered by first member name
};
// weak components of the digraph of generators with level < k
Components components(const Presentation& p, unsigned k);

// some tail of f equals some tail of g; both must have level k (PreconditionError otherwise)
bool tail_equiv(const Presentation& p, GenId f, GenId g, unsigned k);

// Plain multigraph; edge i runs from edges[i].first (source) to edges[i].second (range).
struct Multigraph {
  std::size_t n = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct QuotientEdge {
  GenId rep;                  // name-least member
  std::vector<GenId> members;  // name-sorted
  std::size_t source, range;  // component ids
};

struct QuotientDigraph {
  unsigned level = 0;
  Components comps;
  std::vector<QuotientEdge> edges;  // ordered by representative name
  Multigraph graph() const;
};

QuotientDigraph falpha(const Presentation& p, unsigned k);
std::string to_dot(const Presentation& p, const QuotientDigraph& q);

// A cycle is a list of edge ids mu_1 ... mu_n in composition order:
// s(mu_i) = r(mu_{i+1}) and s(mu_n) = r(mu_1), with distinct sources.
using EdgeCycle = std::vector<std::size_t>;

// All elementary cycles (Johnson), each rotated to start at its least edge id.
std::vector<EdgeCycle> elementary_cycles(const Multigraph& g);
// Cycles in which no vertex receives an edge from outside the cycle.
std::vector<EdgeCycle> cycles_without_entry(const Multigraph& g);

// mu_1 ... mu_m with r(mu_1) = w, m >= n and mu_j != mu_m for j < m. Shortest m
// first, then least final edge. PreconditionError when some cycle lacks an
// entry, NotFound when nothing reaches w or no such path exists.
std::vector<std::size_t> digraph_nonreturning(const Multigraph& g, std::size_t w, std::size_t n);

// Path of length w^k * m (m >= n) with range v, assembled along a non-returning
// path of the level-k quotient. NotConstructible names the failing stage.
Path build_nonreturning(const Presentation& p, VertexId v, std::size_t n, unsigned k);

struct NonreturningCheck {
  bool ok = true;  // no violation among the candidates tried
  std::optional<Path> f;
  std::optional<Ordinal> beta;
};
// Searches f (words of <= depth generators of level <= k) with
// w^k <= d(f) < w^k*n and tails e^beta, beta < w^k, for f e^beta in e Lambda.
// e must have length w^k * n, n >= 1 (PreconditionError otherwise).
NonreturningCheck check_nonreturning_bounded(const Path& e, unsigned k, std::size_t depth);

}  // namespace ordgraph
