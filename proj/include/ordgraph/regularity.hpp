#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ordgraph/path.hpp"

namespace ordgraph {

enum class Tri { False, True, Unknown };
std::string to_string(Tri t);
Tri tri_and(Tri a, Tri b);
inline Tri tri(bool b) { return b ? Tri::True : Tri::False; }

constexpr std::size_t kDefaultBound = 64;

// Vertices w admitting a path in v Lambda_k with source w (includes v).
std::set<VertexId> sublevel_reach(const Presentation& p, VertexId v, unsigned k);

bool is_alpha_source(const Presentation& p, VertexId v, unsigned k);
bool is_alpha_source_regular(const Presentation& p, VertexId v, unsigned k);

struct Fibre {
  enum class Kind { FiniteSet, InfiniteWitness, Unknown };
  Kind kind = Kind::Unknown;
  std::vector<Path> members;  // FiniteSet, sorted by word
  // InfiniteWitness: cycle at w, seed in w Lambda^{w^k}, connector in v Lambda_k from w.
  // connector . cycle^n . seed are pairwise distinct members of the fibre.
  std::optional<Path> cycle, seed, connector;
  std::size_t bound = 0;  // Unknown: class bound that was exceeded
};
std::string to_string(Fibre::Kind k);

// v Lambda^{w^k}, up to path equality
Fibre fibre(const Presentation& p, VertexId v, unsigned k, std::size_t bound = kDefaultBound);

Tri is_alpha_regular(const Presentation& p, VertexId v, unsigned k, std::size_t bound = kDefaultBound);

struct VertexLevelReport {
  VertexId vertex = 0;
  unsigned level = 0;
  bool is_source = false;
  bool is_source_regular = false;
  Fibre fibre;
  Tri is_regular = Tri::Unknown;
};
VertexLevelReport analyze_vertex(const Presentation& p, VertexId v, unsigned k, std::size_t bound = kDefaultBound);

// Drops members that extend another member (and duplicates). Keeps input order.
std::vector<Path> minimalize(const std::vector<Path>& F);

// (F_e, F^e). Throws PreconditionError when F is not minimal, misses eLambda,
// or e and F do not share a range.
std::pair<std::vector<Path>, std::vector<Path>> split_exhaustive(const std::vector<Path>& F, const Path& e);

// Throws PreconditionError when a member does not have range v.
Tri is_exhaustive(const Presentation& p, VertexId v, const std::vector<Path>& F, std::size_t bound = kDefaultBound);

}  // namespace ordgraph
