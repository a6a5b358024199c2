#pragma once
#include <random>
#include <vector>

#include "ordgraph/path.hpp"

namespace testsupport {

// Random composable word ending (source side) anywhere, range r; occasionally
// replaced by a split tail to get paths with nonempty limit prefixes.
inline ordgraph::Path random_path(std::mt19937& rng, const ordgraph::Presentation& p, ordgraph::VertexId r,
                                  int max_letters) {
  using namespace ordgraph;
  Path acc = Path::identity(p, r);
  int n = std::uniform_int_distribution<int>(0, max_letters)(rng);
  for (int i = 0; i < n; ++i) {
    std::vector<GenId> options;
    for (GenId g = 0; g < p.generator_count(); ++g)
      if (p.generator(g).range == acc.source()) options.push_back(g);
    if (options.empty()) break;
    GenId g = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)];
    Path x = Path::generator(p, g);
    if (p.level(g) > 0 && rng() % 3 == 0) {
      // a tail of g: drop a random finite-ish prefix
      auto tails = tail_states(x);
      x = tails[std::uniform_int_distribution<std::size_t>(0, tails.size() - 1)(rng)].path;
      if (x.range() != acc.source()) continue;
    }
    acc = compose(acc, x);
  }
  return acc;
}

inline ordgraph::Path random_path(std::mt19937& rng, const ordgraph::Presentation& p, int max_letters) {
  auto r = static_cast<ordgraph::VertexId>(std::uniform_int_distribution<std::size_t>(0, p.vertex_count() - 1)(rng));
  return random_path(rng, p, r, max_letters);
}

// Uniformish ordinal in [0, bound]: truncate the CNF of bound and pad with lower terms.
inline ordgraph::Ordinal random_below_eq(std::mt19937& rng, const ordgraph::Ordinal& bound) {
  using namespace ordgraph;
  if (bound.is_zero() || rng() % 8 == 0) return rng() % 2 ? bound : Ordinal();
  const auto& t = bound.terms();
  std::size_t i = std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(rng);
  std::vector<OrdinalTerm> out(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(i));
  auto c = std::uniform_int_distribution<std::uint64_t>(0, t[i].coefficient - 1)(rng);
  if (c > 0) out.push_back({t[i].exponent, c});
  if (t[i].exponent.is_finite() && *t[i].exponent.as_natural() > 0 && rng() % 2) {
    auto e = std::uniform_int_distribution<std::uint64_t>(0, *t[i].exponent.as_natural() - 1)(rng);
    out.push_back({Ordinal::natural(e), 1 + rng() % 3});
  }
  return Ordinal::from_terms(out);
}

}  // namespace testsupport
