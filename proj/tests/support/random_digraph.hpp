#pragma once
#include <random>
#include <string>

#include "ordgraph/presentation.hpp"

namespace testsupport {

struct Digraph {
  unsigned n = 0;
  std::vector<std::pair<unsigned, unsigned>> edges;  // (source, range)
};

inline Digraph random_digraph(std::mt19937& rng, unsigned max_v = 5, unsigned max_e = 8) {
  Digraph d;
  d.n = 1 + rng() % max_v;
  unsigned m = rng() % (max_e + 1);
  for (unsigned i = 0; i < m; ++i) d.edges.push_back({static_cast<unsigned>(rng() % d.n), static_cast<unsigned>(rng() % d.n)});
  return d;
}

// vertices v0.., edges a0.. in input order so ids coincide with indices
inline ordgraph::Presentation to_presentation(const Digraph& d) {
  ordgraph::Presentation p("digraph");
  for (unsigned v = 0; v < d.n; ++v) p.add_vertex("v" + std::to_string(v));
  for (std::size_t i = 0; i < d.edges.size(); ++i)
    p.add_generator("a" + std::to_string(i), 0, d.edges[i].first, d.edges[i].second);
  return p;
}

}  // namespace testsupport
