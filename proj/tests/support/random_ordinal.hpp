#pragma once

#include <algorithm>
#include <random>

#include "ordgraph/ordinal.hpp"

namespace testsupport {

// depth 0 gives a natural; exponents recurse one level shallower
inline ordgraph::Ordinal random_ordinal(std::mt19937& rng, int depth, unsigned max_coef = 5) {
  std::uniform_int_distribution<unsigned> coef(1, max_coef);
  if (depth == 0) return ordgraph::Ordinal::natural(std::uniform_int_distribution<unsigned>(0, max_coef)(rng));
  unsigned n = std::uniform_int_distribution<unsigned>(0, 3)(rng);
  std::vector<ordgraph::Ordinal> exps;
  for (unsigned i = 0; i < n; ++i) exps.push_back(random_ordinal(rng, depth - 1, max_coef));
  std::sort(exps.begin(), exps.end(), std::greater<>());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  std::vector<ordgraph::OrdinalTerm> terms;
  for (auto& e : exps) terms.push_back({e, coef(rng)});
  return ordgraph::Ordinal::from_terms(terms);
}

}  // namespace testsupport
