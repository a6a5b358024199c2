#pragma once
// First n edges of a path, by naive recursive unfolding. Equal paths must agree
// on this for every n; used as an independent necessary condition.
#include <functional>
#include <vector>

#include "ordgraph/path.hpp"

namespace oracle {

inline std::vector<ordgraph::GenId> edge_stream(const ordgraph::Path& e, std::size_t n) {
  using namespace ordgraph;
  const Presentation& p = e.home();
  std::vector<GenId> out;
  std::function<void(GenId)> gen = [&](GenId g) {
    // a limit generator never ends; keep unfolding until enough edges are out
    GenId cur = g;
    while (out.size() < n) {
      const Generator& G = p.generator(cur);
      if (G.level == 0) {
        out.push_back(cur);
        return;
      }
      for (GenId x : G.word) {
        if (out.size() >= n) return;
        gen(x);
      }
      cur = *G.tail;
    }
  };
  std::function<void(const std::vector<Block>&)> seq = [&](const std::vector<Block>& bs) {
    for (const Block& b : bs) {
      if (out.size() >= n) return;
      seq(b.prefix);
      if (out.size() >= n) return;
      gen(b.gen);
    }
  };
  seq(e.blocks());
  return out;
}

}  // namespace oracle
