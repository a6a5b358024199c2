#pragma once

#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ordgraph/ordinal.hpp"
#include "ordgraph/presentation.hpp"

namespace ordgraph {

// One normal-form block: an edge (level 0, empty prefix) or a limit block
// prefix . gen of length w^level(gen). The prefix is itself in normal form,
// has length < w^level(gen) and ends at range(gen).
struct Block {
  GenId gen = 0;
  std::vector<Block> prefix;
  friend bool operator==(const Block&, const Block&) = default;  // structural, not morphism equality
};

// Morphism of the category presented by a Presentation, held as blocks of
// non-increasing level. The presentation must outlive the path.
class Path {
 public:
  static Path identity(const Presentation& p, VertexId v);
  static Path generator(const Presentation& p, GenId g);
  // blocks must already be a normal form; `at` is used only when blocks is empty.
  static Path from_blocks(const Presentation& p, std::vector<Block> blocks, VertexId at);

  const Presentation& home() const { return *home_; }
  bool is_identity() const { return blocks_.empty(); }
  const std::vector<Block>& blocks() const { return blocks_; }
  Ordinal length() const;
  VertexId source() const;
  VertexId range() const;

 private:
  Path(const Presentation* p, std::vector<Block> b, VertexId v) : home_(p), vertex_(v), blocks_(std::move(b)) {}
  const Presentation* home_;
  VertexId vertex_;  // meaningful for identities
  std::vector<Block> blocks_;
};

Path compose(const Path& e, const Path& f);
// (e_a, e^a). Throws UndefinedPath when a > length(e).
std::pair<Path, Path> split(const Path& e, const Ordinal& a);

// Equality in the presented category: two limit blocks agree when their
// unfolding chains reach the same generator after emitting equal prefixes.
bool equals(const Path& e, const Path& f);
// Weaker test: all proper prefixes agree. Implied by equals; used to certify
// that pumped families are pairwise distinct.
bool prefix_equivalent(const Path& e, const Path& f);

enum class Extension { Equal, ProperPrefixOf, ProperlyExtends, Disjoint };
std::string to_string(Extension x);
// ProperPrefixOf means f lies in e.Lambda with f != e.
Extension compare_extensions(const Path& e, const Path& f);

struct TailState {
  Ordinal offset;  // least beta with e^beta equal to path
  Path path;
};
// One representative per distinct value of e^beta, beta < length(e), ordered by offset.
std::vector<TailState> tail_states(const Path& e);
std::set<VertexId> tail_vertices(const Path& e);

// Splits into blocks of length w^k, non-increasing k; throws UndefinedPath on identities.
std::vector<std::pair<Ordinal, Path>> normal_blocks(const Path& e);

// Generator word in range-first order, or the vertex name for identities.
std::string to_word(const Path& e);
// Inverse of to_word; a lone vertex name denotes its identity.
Path parse_word(const Presentation& p, std::string_view text);

namespace detail {
Ordinal length_of(const Presentation& p, const std::vector<Block>& blocks);
VertexId range_of(const Presentation& p, const std::vector<Block>& blocks);
void append_normalized(const Presentation& p, std::vector<Block>& acc, std::vector<Block> rhs);
std::pair<std::vector<Block>, std::vector<Block>> split_blocks(const Presentation& p, const std::vector<Block>& blocks,
                                                               const Ordinal& a);
std::vector<Block> word_blocks(const Presentation& p, const std::vector<GenId>& letters);
}  // namespace detail

}  // namespace ordgraph
