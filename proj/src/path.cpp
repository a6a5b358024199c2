#include "ordgraph/path.hpp"

#include <sstream>

namespace ordgraph {

namespace detail {

namespace {
unsigned lvl(const Presentation& p, const Block& b) { return p.level(b.gen); }
}  // namespace

Ordinal length_of(const Presentation& p, const std::vector<Block>& blocks) {
  // levels are non-increasing, so runs of equal level give the CNF directly
  std::vector<OrdinalTerm> terms;
  for (const Block& b : blocks) {
    unsigned k = lvl(p, b);
    if (!terms.empty() && terms.back().exponent == Ordinal::natural(k))
      ++terms.back().coefficient;
    else
      terms.push_back({Ordinal::natural(k), 1});
  }
  return Ordinal::from_terms(std::move(terms));
}

VertexId range_of(const Presentation& p, const std::vector<Block>& blocks) {
  const Block* b = &blocks.front();
  while (!b->prefix.empty()) b = &b->prefix.front();
  return p.generator(b->gen).range;
}

void append_normalized(const Presentation& p, std::vector<Block>& acc, std::vector<Block> rhs) {
  if (rhs.empty()) return;
  const unsigned top = lvl(p, rhs.front());
  std::size_t i = acc.size();
  while (i > 0 && lvl(p, acc[i - 1]) < top) --i;
  if (i < acc.size()) {
    // trailing lower blocks of acc disappear into the prefix of rhs's first block
    std::vector<Block> low(std::make_move_iterator(acc.begin() + static_cast<std::ptrdiff_t>(i)),
                           std::make_move_iterator(acc.end()));
    acc.resize(i);
    append_normalized(p, low, std::move(rhs.front().prefix));
    rhs.front().prefix = std::move(low);
  }
  acc.insert(acc.end(), std::make_move_iterator(rhs.begin()), std::make_move_iterator(rhs.end()));
}

std::vector<Block> word_blocks(const Presentation& p, const std::vector<GenId>& letters) {
  std::vector<Block> out;
  for (GenId g : letters) append_normalized(p, out, {Block{g, {}}});
  return out;
}

namespace {

// split a single block at 0 < rho < w^level
std::pair<std::vector<Block>, std::vector<Block>> split_block(const Presentation& p, const Block& b,
                                                              const Ordinal& rho) {
  std::vector<Block> prefix = b.prefix;
  GenId gen = b.gen;
  while (length_of(p, prefix) < rho) {
    const Generator& g = p.generator(gen);
    append_normalized(p, prefix, word_blocks(p, g.word));
    gen = *g.tail;
  }
  auto [h, t] = split_blocks(p, prefix, rho);
  return {std::move(h), {Block{gen, std::move(t)}}};
}

}  // namespace

std::pair<std::vector<Block>, std::vector<Block>> split_blocks(const Presentation& p, const std::vector<Block>& blocks,
                                                               const Ordinal& a) {
  Ordinal partial;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    Ordinal next = add(partial, Ordinal::omega_power(Ordinal::natural(lvl(p, blocks[i]))));
    if (next <= a) {
      partial = std::move(next);
      continue;
    }
    Ordinal rho = left_sub(partial, a);
    std::vector<Block> head(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(i));
    std::vector<Block> tail;
    if (rho.is_zero()) {
      tail.assign(blocks.begin() + static_cast<std::ptrdiff_t>(i), blocks.end());
      return {std::move(head), std::move(tail)};
    }
    auto [h, t] = split_block(p, blocks[i], rho);
    head.insert(head.end(), std::make_move_iterator(h.begin()), std::make_move_iterator(h.end()));
    tail = std::move(t);
    tail.insert(tail.end(), blocks.begin() + static_cast<std::ptrdiff_t>(i) + 1, blocks.end());
    return {std::move(head), std::move(tail)};
  }
  if (partial != a) throw UndefinedPath("split position " + to_string(a) + " exceeds length " + to_string(partial));
  return {blocks, {}};
}

}  // namespace detail

using detail::append_normalized;
using detail::length_of;
using detail::range_of;

Path Path::identity(const Presentation& p, VertexId v) {
  if (v >= p.vertex_count()) throw std::out_of_range("vertex id out of range");
  return Path(&p, {}, v);
}

Path Path::generator(const Presentation& p, GenId g) {
  if (g >= p.generator_count()) throw std::out_of_range("generator id out of range");
  return Path(&p, {Block{g, {}}}, p.generator(g).range);
}

Path Path::from_blocks(const Presentation& p, std::vector<Block> blocks, VertexId at) {
  return Path(&p, std::move(blocks), at);
}

Ordinal Path::length() const { return length_of(*home_, blocks_); }

VertexId Path::source() const { return blocks_.empty() ? vertex_ : home_->generator(blocks_.back().gen).source; }

VertexId Path::range() const { return blocks_.empty() ? vertex_ : range_of(*home_, blocks_); }

Path compose(const Path& e, const Path& f) {
  if (&e.home() != &f.home()) throw NonComposable("paths belong to different presentations");
  if (e.source() != f.range())
    throw NonComposable("cannot compose: source " + e.home().vertex_name(e.source()) + " of left factor differs from range " +
                        e.home().vertex_name(f.range()) + " of right factor");
  if (e.is_identity()) return f;
  if (f.is_identity()) return e;
  std::vector<Block> acc = e.blocks();
  append_normalized(e.home(), acc, f.blocks());
  return Path::from_blocks(e.home(), std::move(acc), e.range());
}

std::pair<Path, Path> split(const Path& e, const Ordinal& a) {
  const Presentation& p = e.home();
  if (e.is_identity()) {
    if (!a.is_zero()) throw UndefinedPath("split of an identity at a positive position");
    return {e, e};
  }
  auto [h, t] = detail::split_blocks(p, e.blocks(), a);
  VertexId mid = t.empty() ? e.source() : range_of(p, t);
  return {Path::from_blocks(p, std::move(h), e.range()), Path::from_blocks(p, std::move(t), mid)};
}

std::string to_string(Extension x) {
  switch (x) {
    case Extension::Equal: return "Equal";
    case Extension::ProperPrefixOf: return "ProperPrefixOf";
    case Extension::ProperlyExtends: return "ProperlyExtends";
    case Extension::Disjoint: return "Disjoint";
  }
  return "?";
}

Extension compare_extensions(const Path& e, const Path& f) {
  if (e.range() != f.range()) return Extension::Disjoint;
  Ordinal le = e.length(), lf = f.length();
  if (le <= lf) {
    if (!equals(split(f, le).first, e)) return Extension::Disjoint;
    return le == lf ? Extension::Equal : Extension::ProperPrefixOf;
  }
  return equals(split(e, lf).first, f) ? Extension::ProperlyExtends : Extension::Disjoint;
}

std::vector<std::pair<Ordinal, Path>> normal_blocks(const Path& e) {
  if (e.is_identity()) throw UndefinedPath("normal_blocks of an identity");
  std::vector<std::pair<Ordinal, Path>> out;
  for (const Block& b : e.blocks()) {
    std::vector<Block> one{b};
    Ordinal len = length_of(e.home(), one);
    VertexId r = range_of(e.home(), one);
    out.emplace_back(std::move(len), Path::from_blocks(e.home(), std::move(one), r));
  }
  return out;
}

namespace {
void word_into(const Presentation& p, const std::vector<Block>& blocks, std::vector<std::string>& out) {
  for (const Block& b : blocks) {
    word_into(p, b.prefix, out);
    out.push_back(p.generator(b.gen).name);
  }
}
}  // namespace

std::string to_word(const Path& e) {
  if (e.is_identity()) return e.home().vertex_name(e.range());
  std::vector<std::string> toks;
  word_into(e.home(), e.blocks(), toks);
  std::string s;
  for (const auto& t : toks) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

Path parse_word(const Presentation& p, std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> toks;
  for (std::string t; in >> t;) toks.push_back(t);
  using Kind = PresentationError::Kind;
  if (toks.empty()) throw PresentationError(Kind::Syntax, "empty path word");
  if (toks.size() == 1) {
    if (auto v = p.find_vertex(toks[0])) return Path::identity(p, *v);
  }
  std::optional<Path> acc;
  for (const auto& t : toks) {
    auto g = p.find_generator(t);
    if (!g) throw PresentationError(Kind::UnknownIdentifier, "unknown generator '" + t + "'");
    Path next = Path::generator(p, *g);
    acc = acc ? compose(*acc, next) : next;
  }
  return *acc;
}

}  // namespace ordgraph
