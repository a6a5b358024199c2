#include <map>

#include "ordgraph/path.hpp"

namespace ordgraph {

namespace {

using Blocks = std::vector<Block>;
struct RawTail {
  Ordinal offset;
  Blocks blocks;
};

class TailMaker {
 public:
  explicit TailMaker(const Presentation& p) : p_(p) {}

  const std::vector<RawTail>& gen_tails(GenId g) {
    if (auto it = memo_.find(g); it != memo_.end()) return it->second;
    std::vector<RawTail> out;
    const Generator& top = p_.generator(g);
    if (top.level == 0) {
      out.push_back({Ordinal(), {Block{g, {}}}});
      return memo_[g] = std::move(out);
    }
    out.push_back({Ordinal(), {Block{g, {}}}});
    std::vector<GenId> chain;
    Ordinal base;
    for (GenId q = g;;) {
      bool again = false;
      for (GenId c : chain) again = again || c == q;
      if (again) break;
      chain.push_back(q);
      const Generator& gq = p_.generator(q);
      Ordinal at = base;
      for (std::size_t j = 0; j < gq.word.size(); ++j) {
        // copy: the recursive call may rehash memo_
        std::vector<RawTail> inner = gen_tails(gq.word[j]);
        std::vector<GenId> rest(gq.word.begin() + static_cast<std::ptrdiff_t>(j) + 1, gq.word.end());
        for (const RawTail& x : inner) {
          Blocks b = x.blocks;
          detail::append_normalized(p_, b, detail::word_blocks(p_, rest));
          detail::append_normalized(p_, b, {Block{*gq.tail, {}}});
          push_unique(out, {add(at, x.offset), std::move(b)});
        }
        at = add(at, Ordinal::omega_power(Ordinal::natural(p_.level(gq.word[j]))));
      }
      base = at;
      q = *gq.tail;
    }
    return memo_[g] = std::move(out);
  }

  std::vector<RawTail> seq_tails(const Blocks& blocks) {
    std::vector<RawTail> out;
    Ordinal at;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      Blocks rest(blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1, blocks.end());
      for (RawTail& y : block_tails(blocks[i])) {
        y.blocks.insert(y.blocks.end(), rest.begin(), rest.end());
        push_unique(out, {add(at, y.offset), std::move(y.blocks)});
      }
      at = add(at, Ordinal::omega_power(Ordinal::natural(p_.level(blocks[i].gen))));
    }
    return out;
  }

 private:
  std::vector<RawTail> block_tails(const Block& b) {
    if (b.prefix.empty()) return gen_tails(b.gen);
    std::vector<RawTail> out;
    for (RawTail& x : seq_tails(b.prefix)) out.push_back({x.offset, {Block{b.gen, std::move(x.blocks)}}});
    Ordinal d = detail::length_of(p_, b.prefix);
    for (const RawTail& y : gen_tails(b.gen)) push_unique(out, {add(d, y.offset), y.blocks});
    return out;
  }

  void push_unique(std::vector<RawTail>& out, RawTail t) {
    Path np = as_path(t.blocks);
    for (const RawTail& o : out)
      if (o.blocks == t.blocks || equals(as_path(o.blocks), np)) return;
    out.push_back(std::move(t));
  }

  Path as_path(const Blocks& b) const { return Path::from_blocks(p_, b, 0); }

  const Presentation& p_;
  std::map<GenId, std::vector<RawTail>> memo_;
};

}  // namespace

std::vector<TailState> tail_states(const Path& e) {
  std::vector<TailState> out;
  if (e.is_identity()) return out;
  TailMaker tm(e.home());
  for (RawTail& t : tm.seq_tails(e.blocks())) {
    VertexId r = detail::range_of(e.home(), t.blocks);
    out.push_back({std::move(t.offset), Path::from_blocks(e.home(), std::move(t.blocks), r)});
  }
  return out;
}

std::set<VertexId> tail_vertices(const Path& e) {
  std::set<VertexId> out;
  for (const auto& t : tail_states(e)) out.insert(t.path.range());
  return out;
}

}  // namespace ordgraph
