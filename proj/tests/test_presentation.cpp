#include <doctest.h>

#include "ordgraph/path.hpp"
#include "ordgraph/presentation.hpp"
#include "support/builtins.hpp"

using namespace ordgraph;

namespace {

bool has(const ValidationReport& r, ViolationKind k) {
  for (const auto& v : r.violations)
    if (v.kind == k) return true;
  return false;
}

void same_structure(const Presentation& a, const Presentation& b) {
  REQUIRE(a.vertex_count() == b.vertex_count());
  REQUIRE(a.generator_count() == b.generator_count());
  for (VertexId v = 0; v < a.vertex_count(); ++v) CHECK(a.vertex_name(v) == b.vertex_name(v));
  for (GenId g = 0; g < a.generator_count(); ++g) {
    const auto& x = a.generator(g);
    const auto& y = b.generator(g);
    CHECK(x.name == y.name);
    CHECK(x.level == y.level);
    CHECK(x.source == y.source);
    CHECK(x.range == y.range);
    CHECK(x.word == y.word);
    CHECK(x.tail == y.tail);
  }
}

}  // namespace

TEST_CASE("parse the interval presentation") {
  auto p = parse_presentation("vertex v\nedge e : v -> v\ngen f level 1 : v -> v = e f");
  CHECK(p.vertex_count() == 1);
  CHECK(p.generator_count() == 2);
  auto f = p.generator(*p.find_generator("f"));
  CHECK(f.level == 1);
  CHECK(f.word == std::vector<GenId>{*p.find_generator("e")});
  CHECK(f.tail == p.find_generator("f"));
  CHECK(validate(p).ok());
}

TEST_CASE("syntax errors carry positions") {
  try {
    parse_presentation("vertex v\nedge e : v v");
    FAIL("no error");
  } catch (const PresentationError& e) {
    CHECK(e.kind() == PresentationError::Kind::Syntax);
    CHECK(e.line() == 2);
    CHECK(e.column() == 12);
  }
  CHECK_THROWS_AS(parse_presentation("vertex v\n  @"), PresentationError);
  CHECK_THROWS_AS(parse_presentation("gen g level : v -> v = g"), PresentationError);
}

TEST_CASE("unknown identifiers and duplicates") {
  try {
    parse_presentation("vertex v\nedge e : v -> w");
    FAIL("no error");
  } catch (const PresentationError& e) {
    CHECK(e.kind() == PresentationError::Kind::UnknownIdentifier);
    CHECK(e.line() == 2);
  }
  try {
    parse_presentation("vertex v\nedge e : v -> v\nedge e : v -> v");
    FAIL("no error");
  } catch (const PresentationError& e) {
    CHECK(e.kind() == PresentationError::Kind::Duplicate);
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_presentation("vertex v v"), PresentationError);
  CHECK_THROWS_AS(parse_presentation("vertex v\ngen g level 1 : v -> v = e g"), PresentationError);
}

TEST_CASE("empty rule word is rejected") {
  auto p = parse_presentation("vertex v\ngen g level 1 : v -> v = g");
  auto r = validate(p);
  CHECK(has(r, ViolationKind::EmptyWord));
  CHECK_THROWS_AS(
      [] {
        auto q = parse_presentation("vertex v\ngen g level 1 : v -> v = g");
        auto rep = validate(q);
        if (!rep.ok()) throw PresentationError(PresentationError::Kind::Invalid, "invalid");
      }(),
      PresentationError);
}

TEST_CASE("collision of identical unfoldings") {
  auto p = parse_presentation(
      "vertex v\nedge e : v -> v\n"
      "gen g1 level 1 : v -> v = e g3\n"
      "gen g2 level 1 : v -> v = e g3\n"
      "gen g3 level 1 : v -> v = e g3\n");
  auto r = validate(p);
  CHECK(has(r, ViolationKind::Collision));
  // chains that stay apart are fine
  auto q = parse_presentation(
      "vertex v\nedge e : v -> v\n"
      "gen g1 level 1 : v -> v = e g1\n"
      "gen g2 level 1 : v -> v = e g2\n");
  CHECK(validate(q).ok());
}

TEST_CASE("structural violations") {
  auto p = parse_presentation(
      "vertex u v\nedge a : u -> v\nedge b : v -> u\n"
      "gen g level 1 : u -> u = a g\n"  // range u but a has range v
      "gen h level 2 : v -> v = a b h\n"  // no level-1 letter
      "gen k level 1 : v -> v = a b x\n"
      "gen x level 2 : v -> v = k x\n");
  auto r = validate(p);
  CHECK(has(r, ViolationKind::Endpoint));
  CHECK(has(r, ViolationKind::Unproductive));
  CHECK(has(r, ViolationKind::TailLevel));
  CHECK_FALSE(has(r, ViolationKind::Collision));

  Presentation q;
  auto v = q.add_vertex("v");
  auto e = q.add_generator("e", 0, v, v);
  auto f = q.add_generator("f", 0, v, v);
  q.set_rule(e, {f}, e);
  auto g = q.add_generator("g", 1, v, v);
  (void)g;
  auto rq = validate(q);
  CHECK(has(rq, ViolationKind::EdgeWithRule));
  CHECK(has(rq, ViolationKind::MissingRule));

  auto s = parse_presentation("vertex v\nedge e : v -> v\ngen g level 1 : v -> v = e g\ngen h level 1 : v -> v = g h");
  CHECK(has(validate(s), ViolationKind::LetterLevel));
}

TEST_CASE("two_plus_two as DSL is valid") {
  auto p = parse_presentation(
      "vertex v\nedge e : v -> v\nedge f : v -> v\n"
      "gen g level 1 : v -> v = e g\ngen h level 1 : v -> v = f h\n");
  CHECK(validate(p).ok());
}

TEST_CASE("builtins") {
  for (const auto& name : testsupport::sample_builtins()) {
    CAPTURE(name);
    auto p = builtin(name);
    auto r = validate(p);
    for (const auto& v : r.violations) MESSAGE(to_string(v.kind) << " " << v.generator << " " << v.detail);
    CHECK(r.ok());
  }
  auto i = builtin("interval_omega2");
  CHECK(i.vertex_count() == 1);
  CHECK(i.generators_at_level(0).size() == 1);
  CHECK(i.generators_at_level(1).size() == 1);
  auto t = builtin("two_plus_two");
  CHECK(t.vertex_count() == 1);
  CHECK(t.generators_at_level(0).size() == 2);
  CHECK(t.generators_at_level(1).size() == 2);
  auto l = builtin("long_path_trunc", {3});
  CHECK(l.vertex_count() == 3);
  CHECK(l.metadata().analogue);
  auto g2 = l.generator(*l.find_generator("g2"));
  CHECK(l.generator(*g2.tail).name == "g0");
  auto c = builtin("cantor_trunc(2,2)");
  CHECK(c.metadata().analogue);
  CHECK(c.vertex_count() == 4);
  CHECK(c.max_level() == 2);
  CHECK_FALSE(builtin("two_loop").metadata().analogue);

  CHECK_THROWS_AS(builtin("nope"), PresentationError);
  CHECK_THROWS_AS(builtin("long_path_trunc", {1}), PresentationError);
  CHECK_THROWS_AS(builtin("cantor_trunc", {0, 1}), PresentationError);
  CHECK_THROWS_AS(builtin("cantor_trunc", {1, 0}), PresentationError);
  CHECK_THROWS_AS(builtin("two_loop", {1}), PresentationError);
}

TEST_CASE("print/parse round trip") {
  for (const auto& name : testsupport::sample_builtins()) {
    CAPTURE(name);
    auto p = builtin(name);
    auto q = parse_presentation(print_presentation(p), p.name());
    same_structure(p, q);
  }
  auto p = parse_presentation("# comment\nvertex a b\nedge x : a -> b # trailing\ngen y level 1 : b -> b = x z\nedge z : b -> a\n");
  same_structure(p, parse_presentation(print_presentation(p)));
}

TEST_CASE("unfolding chains are eventually periodic") {
  for (const auto& name : testsupport::sample_builtins()) {
    auto p = builtin(name);
    for (GenId g = 0; g < p.generator_count(); ++g) {
      if (p.level(g) == 0) continue;
      std::vector<GenId> seen;
      GenId q = g;
      while (std::find(seen.begin(), seen.end(), q) == seen.end()) {
        seen.push_back(q);
        q = *p.generator(q).tail;
        CHECK(p.level(q) == p.level(g));
      }
      CHECK(seen.size() <= p.generator_count());
    }
  }
}
