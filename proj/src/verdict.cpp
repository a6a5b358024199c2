#include "ordgraph/verdict.hpp"

namespace ordgraph {

std::string to_string(ConditionS::Status s) {
  switch (s) {
    case ConditionS::Status::SatisfiedViaTheorem: return "SatisfiedViaTheorem";
    case ConditionS::Status::FailedV: return "FailedV";
    case ConditionS::Status::CycleWithoutEntry: return "CycleWithoutEntry";
    case ConditionS::Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(CkEntry::Status s) {
  switch (s) {
    case CkEntry::Status::HoldsViaTheorem: return "HoldsViaTheorem";
    case CkEntry::Status::Inapplicable: return "Inapplicable";
    case CkEntry::Status::Unknown: return "Unknown";
  }
  return "?";
}

std::string to_string(Simplicity s) { return s == Simplicity::Simple ? "Simple" : "Unknown"; }

ConditionV check_condition_v(const Presentation& p) {
  ConditionV out;
  for (unsigned k = 1; k <= p.max_level(); ++k) {
    auto gens = p.generators_at_level(k);
    if (gens.empty()) continue;
    Components comps = components(p, k);
    for (GenId g : gens) {
      auto tv = tail_vertices(Path::generator(p, g));
      for (VertexId v : comps.members[comps.of[p.generator(g).range]]) {
        // need f in v Lambda_k with s(f) a tail vertex; f may be the identity
        auto reach = sublevel_reach(p, v, k);
        bool ok = false;
        for (VertexId t : tv) ok = ok || reach.count(t);
        if (!ok) {
          out.holds = false;
          out.witness = ConditionV::Witness{k, g, v};
          return out;
        }
      }
    }
  }
  return out;
}

ConditionS check_condition_s(const Presentation& p) {
  ConditionS out;
  auto v = check_condition_v(p);
  if (!v.holds) {
    out.status = ConditionS::Status::FailedV;
    out.detail = "condition (V) fails at level " + std::to_string(v.witness->level) + " for generator " +
                 p.generator(v.witness->generator).name + " and vertex " + p.vertex_name(v.witness->vertex);
    return out;
  }
  for (unsigned k = 0; k <= p.max_level(); ++k) {
    QuotientDigraph q = falpha(p, k);
    auto bad = cycles_without_entry(q.graph());
    if (bad.empty()) continue;
    out.status = ConditionS::Status::CycleWithoutEntry;
    out.level = k;
    std::string names;
    for (std::size_t e : bad.front()) {
      out.cycle.push_back(q.edges[e].rep);
      names += (names.empty() ? "" : " ") + p.generator(q.edges[e].rep).name;
    }
    out.detail = "F_" + std::to_string(k) + " has the cycle [" + names + "] without an entry";
    return out;
  }
  out.status = ConditionS::Status::SatisfiedViaTheorem;
  return out;
}

Verdict ck_verdict(const Presentation& p, std::size_t bound) {
  Verdict out;
  out.condition_s = check_condition_s(p);
  out.condition_v = check_condition_v(p);
  const unsigned K = p.max_level();
  auto vertices = p.vertices_by_name();

  // no 1-regular vertex
  Tri none_regular = Tri::True;
  std::string regular_name;
  for (VertexId v : vertices) {
    Tri r = is_alpha_regular(p, v, 1, bound);
    if (r == Tri::True) {
      none_regular = Tri::False;
      regular_name = p.vertex_name(v);
      break;
    }
    if (r == Tri::Unknown) {
      none_regular = Tri::Unknown;
      if (regular_name.empty()) regular_name = p.vertex_name(v);
    }
  }
  for (VertexId v : vertices) {
    if (is_alpha_regular(p, v, 1, bound) == Tri::True) continue;
    for (unsigned k = 2; k <= K; ++k)
      if (is_alpha_regular(p, v, k, bound) == Tri::True) {
        out.warnings.push_back("vertex " + p.vertex_name(v) + " is " + std::to_string(k) +
                               "-regular but not 1-regular; the verdict uses the 1-regularity hypothesis as stated");
        break;
      }
  }

  for (unsigned k = 0; k <= K; ++k) {
    CkEntry e;
    e.level = k;
    std::string source_name;
    for (VertexId v : vertices)
      if (is_alpha_source(p, v, k)) {
        source_name = p.vertex_name(v);
        break;
      }
    if (none_regular == Tri::False) {
      e.status = CkEntry::Status::Inapplicable;
      e.reason = regular_name + " is 1-regular";
    } else if (!source_name.empty()) {
      e.status = CkEntry::Status::Inapplicable;
      e.reason = source_name + " is a " + std::to_string(k) + "-source";
    } else if (out.condition_s.status != ConditionS::Status::SatisfiedViaTheorem) {
      e.status = CkEntry::Status::Inapplicable;
      e.reason = "condition (S) sufficient check failed: " + out.condition_s.detail;
    } else if (none_regular == Tri::Unknown) {
      e.status = CkEntry::Status::Unknown;
      e.reason = "1-regularity of " + regular_name + " undecided within bound " + std::to_string(bound);
    } else {
      e.status = CkEntry::Status::HoldsViaTheorem;
    }
    out.ck.push_back(e);
  }
  out.overall = out.ck.back();
  out.simplicity = out.overall.status == CkEntry::Status::HoldsViaTheorem && p.vertex_count() == 1 ? Simplicity::Simple
                                                                                                     : Simplicity::Unknown;
  return out;
}

}  // namespace ordgraph
