#include "ordgraph/presentation.hpp"

#include <algorithm>

#include "ordgraph/path.hpp"

namespace ordgraph {

Presentation::Presentation(std::string name) : name_(std::move(name)) {}

void Presentation::claim_name(const std::string& name) {
  if (vertex_index_.count(name) || gen_index_.count(name))
    throw PresentationError(PresentationError::Kind::Duplicate, "duplicate definition of '" + name + "'");
}

VertexId Presentation::add_vertex(const std::string& name) {
  claim_name(name);
  VertexId id = static_cast<VertexId>(vertices_.size());
  vertices_.push_back(name);
  vertex_index_.emplace(name, id);
  return id;
}

GenId Presentation::add_generator(const std::string& name, unsigned level, VertexId source, VertexId range) {
  claim_name(name);
  if (source >= vertices_.size() || range >= vertices_.size())
    throw PresentationError(PresentationError::Kind::UnknownIdentifier, "generator '" + name + "' uses an unknown vertex");
  GenId id = static_cast<GenId>(gens_.size());
  gens_.push_back(Generator{name, level, source, range, {}, std::nullopt});
  gen_index_.emplace(name, id);
  return id;
}

void Presentation::set_rule(GenId g, std::vector<GenId> word, GenId tail) {
  for (GenId x : word)
    if (x >= gens_.size()) throw std::out_of_range("rule letter out of range");
  if (tail >= gens_.size()) throw std::out_of_range("rule tail out of range");
  gens_.at(g).word = std::move(word);
  gens_.at(g).tail = tail;
}

std::optional<VertexId> Presentation::find_vertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<GenId> Presentation::find_generator(std::string_view name) const {
  auto it = gen_index_.find(name);
  if (it == gen_index_.end()) return std::nullopt;
  return it->second;
}

unsigned Presentation::max_level() const {
  unsigned k = 0;
  for (const auto& g : gens_) k = std::max(k, g.level);
  return k;
}

std::size_t Presentation::max_word_length() const {
  std::size_t n = 0;
  for (const auto& g : gens_) n = std::max(n, g.word.size());
  return n;
}

std::vector<VertexId> Presentation::vertices_by_name() const {
  std::vector<VertexId> out;
  for (const auto& [n, id] : vertex_index_) out.push_back(id);
  return out;
}

std::vector<GenId> Presentation::generators_by_name() const {
  std::vector<GenId> out;
  for (const auto& [n, id] : gen_index_) out.push_back(id);
  return out;
}

std::vector<GenId> Presentation::generators_at_level(unsigned k) const {
  std::vector<GenId> out;
  for (const auto& [n, id] : gen_index_)
    if (gens_[id].level == k) out.push_back(id);
  return out;
}

std::vector<GenId> Presentation::generators_below_level(unsigned k) const {
  std::vector<GenId> out;
  for (const auto& [n, id] : gen_index_)
    if (gens_[id].level < k) out.push_back(id);
  return out;
}

std::string to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::EdgeWithRule: return "edge-with-rule";
    case ViolationKind::MissingRule: return "missing-rule";
    case ViolationKind::EmptyWord: return "empty-word";
    case ViolationKind::LetterLevel: return "letter-level";
    case ViolationKind::TailLevel: return "tail-level";
    case ViolationKind::Endpoint: return "endpoint";
    case ViolationKind::Unproductive: return "unproductive";
    case ViolationKind::Collision: return "collision";
  }
  return "?";
}

ValidationReport validate(const Presentation& p) {
  ValidationReport rep;
  auto add = [&](ViolationKind k, const Generator& g, std::string detail) {
    rep.violations.push_back({k, g.name, std::move(detail)});
  };
  auto vname = [&](VertexId v) { return p.vertex_name(v); };

  for (GenId id : p.generators_by_name()) {
    const Generator& g = p.generator(id);
    if (g.level == 0) {
      if (g.tail || !g.word.empty()) add(ViolationKind::EdgeWithRule, g, "level-0 generator carries a rule");
      continue;
    }
    if (!g.tail) {
      add(ViolationKind::MissingRule, g, "level-" + std::to_string(g.level) + " generator has no rule");
      continue;
    }
    const Generator& t = p.generator(*g.tail);
    if (t.level != g.level)
      add(ViolationKind::TailLevel, g, "tail '" + t.name + "' has level " + std::to_string(t.level));
    if (g.word.empty()) {
      add(ViolationKind::EmptyWord, g, "rule word is empty before tail '" + t.name + "'");
      continue;
    }
    bool productive = false;
    for (GenId x : g.word) {
      const Generator& l = p.generator(x);
      if (l.level >= g.level)
        add(ViolationKind::LetterLevel, g, "letter '" + l.name + "' has level " + std::to_string(l.level));
      if (l.level + 1 == g.level) productive = true;
    }
    if (!productive)
      add(ViolationKind::Unproductive, g, "rule word has no level-" + std::to_string(g.level - 1) + " letter");

    const Generator& first = p.generator(g.word.front());
    if (first.range != g.range)
      add(ViolationKind::Endpoint, g,
          "range " + vname(g.range) + " differs from range of '" + first.name + "' (" + vname(first.range) + ")");
    if (t.source != g.source)
      add(ViolationKind::Endpoint, g,
          "source " + vname(g.source) + " differs from source of tail '" + t.name + "' (" + vname(t.source) + ")");
    for (std::size_t i = 0; i + 1 < g.word.size(); ++i) {
      const Generator& a = p.generator(g.word[i]);
      const Generator& b = p.generator(g.word[i + 1]);
      if (a.source != b.range)
        add(ViolationKind::Endpoint, g, "letters '" + a.name + "' and '" + b.name + "' are not composable");
    }
    const Generator& last = p.generator(g.word.back());
    if (last.source != t.range)
      add(ViolationKind::Endpoint, g, "last letter '" + last.name + "' does not compose with tail '" + t.name + "'");
  }

  // equality of limit generators is only meaningful on structurally sound input
  if (!rep.ok()) return rep;
  for (unsigned k = 1; k <= p.max_level(); ++k) {
    auto gs = p.generators_at_level(k);
    for (std::size_t i = 0; i < gs.size(); ++i) {
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        const Generator& a = p.generator(gs[i]);
        const Generator& b = p.generator(gs[j]);
        if (a.source != b.source || a.range != b.range) continue;
        if (equals(Path::generator(p, gs[i]), Path::generator(p, gs[j])))
          add(ViolationKind::Collision, a, "unfolding chains of '" + a.name + "' and '" + b.name + "' merge");
      }
    }
  }
  return rep;
}

}  // namespace ordgraph
