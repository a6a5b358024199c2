#pragma once
// Brute-force facts about plain digraphs, on edge words (range-first, as vectors
// of edge indices). No library code involved.
#include <vector>

#include "support/random_digraph.hpp"

namespace oracle {

using EdgeWord = std::vector<unsigned>;

struct WordAt {
  unsigned range;
  EdgeWord edges;
};

// all paths with range v of length <= len
inline std::vector<WordAt> paths_into(const testsupport::Digraph& d, unsigned v, unsigned len) {
  std::vector<WordAt> out{{v, {}}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (out[i].edges.size() >= len) continue;
    unsigned src = out[i].edges.empty() ? v : d.edges[out[i].edges.back()].first;
    for (unsigned e = 0; e < d.edges.size(); ++e) {
      if (d.edges[e].second != src) continue;
      WordAt w = out[i];
      w.edges.push_back(e);
      out.push_back(std::move(w));
    }
  }
  return out;
}

inline bool prefix_of(const EdgeWord& a, const EdgeWord& b) {
  return a.size() <= b.size() && std::equal(a.begin(), a.end(), b.begin());
}

inline bool exhaustive(const testsupport::Digraph& d, unsigned v, const std::vector<EdgeWord>& F) {
  std::size_t len = 0;
  for (const auto& e : F) len = std::max(len, e.size());
  for (const auto& f : paths_into(d, v, static_cast<unsigned>(len))) {
    bool hit = false;
    for (const auto& e : F) hit = hit || prefix_of(e, f.edges) || prefix_of(f.edges, e);
    if (!hit) return false;
  }
  return true;
}

// the word has a proper period: some 0 < q < n with w[i] == w[i+q] for all valid i
inline bool has_proper_period(const EdgeWord& w) {
  for (std::size_t q = 1; q < w.size(); ++q) {
    bool ok = true;
    for (std::size_t i = 0; i + q < w.size(); ++i) ok = ok && w[i] == w[i + q];
    if (ok) return true;
  }
  return false;
}

// "e_j != e_n for j < n": the last (source-side) edge does not occur earlier
inline bool last_edge_fresh(const EdgeWord& w) {
  for (std::size_t j = 0; j + 1 < w.size(); ++j)
    if (w[j] == w.back()) return false;
  return true;
}

}  // namespace oracle
