#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ordgraph/errors.hpp"

namespace ordgraph {

using VertexId = std::uint32_t;
using GenId = std::uint32_t;

// A generator of length w^level. Level >= 1 generators unfold as word . tail,
// the word read range side first.
struct Generator {
  std::string name;
  unsigned level = 0;
  VertexId source = 0;
  VertexId range = 0;
  std::vector<GenId> word;
  std::optional<GenId> tail;
};

struct PresentationMetadata {
  bool analogue = false;  // finite stand-in for an infinite example
  std::string note;
};

class Presentation {
 public:
  explicit Presentation(std::string name = "");

  VertexId add_vertex(const std::string& name);
  GenId add_generator(const std::string& name, unsigned level, VertexId source, VertexId range);
  // Replaces any previous rule of g.
  void set_rule(GenId g, std::vector<GenId> word, GenId tail);

  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }
  PresentationMetadata& metadata() { return meta_; }
  const PresentationMetadata& metadata() const { return meta_; }

  std::size_t vertex_count() const { return vertices_.size(); }
  const std::string& vertex_name(VertexId v) const { return vertices_.at(v); }
  std::size_t generator_count() const { return gens_.size(); }
  const Generator& generator(GenId g) const { return gens_.at(g); }
  const std::vector<Generator>& generators() const { return gens_; }
  unsigned level(GenId g) const { return gens_[g].level; }

  std::optional<VertexId> find_vertex(std::string_view name) const;
  std::optional<GenId> find_generator(std::string_view name) const;

  // Highest generator level; 0 when there are no generators.
  unsigned max_level() const;
  std::size_t max_word_length() const;

  // name-sorted views, used wherever output order matters
  std::vector<VertexId> vertices_by_name() const;
  std::vector<GenId> generators_by_name() const;
  std::vector<GenId> generators_at_level(unsigned k) const;
  std::vector<GenId> generators_below_level(unsigned k) const;

 private:
  void claim_name(const std::string& name);

  std::string name_;
  PresentationMetadata meta_;
  std::vector<std::string> vertices_;
  std::vector<Generator> gens_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  std::map<std::string, GenId, std::less<>> gen_index_;
};

enum class ViolationKind { EdgeWithRule, MissingRule, EmptyWord, LetterLevel, TailLevel, Endpoint, Unproductive, Collision };

struct Violation {
  ViolationKind kind;
  std::string generator;  // offending generator (first of the pair for collisions)
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string to_string(ViolationKind k);

ValidationReport validate(const Presentation& p);

// Parses the presentation DSL. Names are resolved but invariants are not checked.
Presentation parse_presentation(std::string_view text, std::string name = "");
// DSL text that parses back to the same structure.
std::string print_presentation(const Presentation& p);

// interval_omega2, two_loop, two_plus_two, long_path_trunc(N), cantor_trunc(L,K).
// The parameters may also be given inline, e.g. "cantor_trunc(2,2)".
Presentation builtin(std::string_view name, const std::vector<unsigned>& params = {});
std::vector<std::string> builtin_names();

// Builtin spec or path to a DSL file; parsed and validated, throws on failure.
Presentation load_presentation(const std::string& source);

}  // namespace ordgraph
