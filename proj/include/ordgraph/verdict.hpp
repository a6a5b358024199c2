#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ordgraph/quotient.hpp"
#include "ordgraph/regularity.hpp"

namespace ordgraph {

struct ConditionV {
  bool holds = true;
  struct Witness {
    unsigned level;
    GenId generator;
    VertexId vertex;  // in the component of r(generator), unreachable from every tail
  };
  std::optional<Witness> witness;
};
ConditionV check_condition_v(const Presentation& p);

struct ConditionS {
  enum class Status { SatisfiedViaTheorem, FailedV, CycleWithoutEntry, Unknown };
  Status status = Status::Unknown;
  unsigned level = 0;              // CycleWithoutEntry
  std::vector<GenId> cycle;        // representatives, composition order
  std::string detail;
};
std::string to_string(ConditionS::Status s);
ConditionS check_condition_s(const Presentation& p);

struct CkEntry {
  enum class Status { HoldsViaTheorem, Inapplicable, Unknown };
  unsigned level = 0;
  Status status = Status::Unknown;
  std::string reason;  // empty when the theorem applies
};
std::string to_string(CkEntry::Status s);

enum class Simplicity { Simple, Unknown };
std::string to_string(Simplicity s);

struct Verdict {
  ConditionV condition_v;
  ConditionS condition_s;
  std::vector<CkEntry> ck;  // levels 0..K
  CkEntry overall;          // the level-K entry
  Simplicity simplicity = Simplicity::Unknown;
  std::vector<std::string> warnings;
};

Verdict ck_verdict(const Presentation& p, std::size_t bound = kDefaultBound);

}  // namespace ordgraph
