// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "oracles/digraph_oracle.hpp"
#include "oracles/ordinal_oracle.hpp"
#include "ordgraph/quotient.hpp"
#include "ordgraph/starword.hpp"
#include "ordgraph/verdict.hpp"
#include "support/builtins.hpp"
#include "support/random_digraph.hpp"
#include "support/random_ordinal.hpp"
#include "support/random_path.hpp"

using namespace ordgraph;
using testsupport::get;

namespace {

// counts checks and keeps the first few failure notes
struct Tally {
  std::size_t checks = 0, failures = 0;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    ++failures;
    if (notes.size() < 5) notes.push_back(what);
  }
};

StarWord T(const Path& e) { return StarWord::make(e, Path::identity(e.home(), e.source())); }
StarWord P(const Path& e) { return StarWord::make(e, e); }

const Ordinal kOmega = Ordinal::omega_power(Ordinal::natural(1));

void criterion1(Tally& t) {
  std::mt19937 rng(1001);
  std::size_t divs = 0;
  for (int n = 0; n < 1000; ++n) {
    Ordinal a = testsupport::random_ordinal(rng, 3), b = testsupport::random_ordinal(rng, 3),
            c = testsupport::random_ordinal(rng, 3);
    std::string tag = to_string(a) + " | " + to_string(b) + " | " + to_string(c);
    t.check(add(add(a, b), c) == add(a, add(b, c)), "assoc " + tag);
    t.check(add(a, b) == oracle::o_add(a, b), "oracle add " + tag);
    t.check((add(a, b) == add(a, c)) == (b == c), "left cancel " + tag);
    t.check(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)), "distrib " + tag);
    t.check(mul(a, b) == oracle::o_mul(a, b), "oracle mul " + tag);
    if (a < b) t.check(add(Ordinal::omega_power(a), Ordinal::omega_power(b)) == Ordinal::omega_power(b), "absorb " + tag);
    if (b < a) t.check(add(Ordinal::omega_power(b), Ordinal::omega_power(a)) == Ordinal::omega_power(a), "absorb " + tag);
    if (b <= a) t.check(add(b, left_sub(b, a)) == a, "left_sub " + tag);
    if (!a.is_zero() && !b.is_zero()) {
      // g = a*q + r with q < b, r < a, and also random g below a*b
      Ordinal q = testsupport::random_below_eq(rng, b), r = testsupport::random_below_eq(rng, a);
      if (q == b) q = Ordinal();
      if (r == a) r = Ordinal();
      for (const Ordinal& g : {add(mul(a, q), r), c}) {
        if (!(g < mul(a, b))) continue;
        auto [b1, a1] = divmod(g, a, b);
        ++divs;
        t.check(add(mul(a, b1), a1) == g && b1 < b && a1 < a, "divmod " + to_string(g) + " / " + tag);
      }
    }
  }
  t.check(divs >= 500, "only " + std::to_string(divs) + " divmod cases");
  Ordinal one = Ordinal::natural(1);
  t.check(add(one, kOmega) == kOmega, "1+w");
  t.check(left_sub(one, kOmega) == kOmega, "-1+w");
}

void criterion2(Tally& t) {
  std::mt19937 rng(2002);
  std::size_t triples = 0;
  for (const auto& name : testsupport::sample_builtins()) {
    const auto& p = get(name);
    for (int n = 0; n < 90; ++n) {
      Path e = testsupport::random_path(rng, p, 4);
      Path f = testsupport::random_path(rng, p, e.source(), 4);
      Path ef = compose(e, f);
      Ordinal de = e.length();
      Ordinal a = testsupport::random_below_eq(rng, de);
      Ordinal b = testsupport::random_below_eq(rng, left_sub(a, de));
      Ordinal c = testsupport::random_below_eq(rng, a);
      ++triples;
      std::string tag = name + ": " + to_word(e) + " / " + to_word(f) + " at " + to_string(a) + ", " + to_string(b);
      auto [ea, eA] = split(e, a);
      t.check(ea.length() == a && equals(compose(ea, eA), e), "split " + tag);
      t.check(equals(split(ef, a).first, ea), "(a) " + tag);
      t.check(equals(split(eA, b).second, split(e, add(a, b)).second), "(b) " + tag);
      t.check(equals(split(ea, c).first, split(e, c).first), "(c) " + tag);
      // beta <= alpha here so that -beta+alpha is defined
      t.check(equals(split(ea, c).second, split(split(e, c).second, left_sub(c, a)).first), "(d) " + tag);
    }
  }
  t.check(triples >= 500, "only " + std::to_string(triples) + " triples");
}

void criterion3(Tally& t) {
  const auto& p = get("interval_omega2");
  VertexId v = *p.find_vertex("v");
  t.check(is_alpha_regular(p, v, 0) == Tri::True, "0-regular");
  t.check(is_alpha_regular(p, v, 1) == Tri::True, "1-regular");
  auto fb = fibre(p, v, 1);
  t.check(fb.kind == Fibre::Kind::FiniteSet && fb.members.size() == 1 && to_word(fb.members.at(0)) == "f",
          "fibre(v,1) = {f}");
  auto s = check_condition_s(p);
  t.check(s.status == ConditionS::Status::CycleWithoutEntry && s.level == 0, "condition S cycle at level 0");
  t.check(ck_verdict(p).overall.status == CkEntry::Status::Inapplicable, "CKU inapplicable");
}

void criterion4(Tally& t) {
  const auto& p = get("two_loop");
  VertexId v = *p.find_vertex("v");
  t.check(is_alpha_source_regular(p, v, 1), "source-regular");
  auto fb = fibre(p, v, 1);
  if (fb.kind != Fibre::Kind::InfiniteWitness) {
    t.check(false, "fibre kind " + to_string(fb.kind));
    return;
  }
  std::vector<Path> pumps;
  Path cur = *fb.seed;
  for (int n = 0; n < 5; ++n) {
    pumps.push_back(compose(*fb.connector, cur));
    cur = compose(*fb.cycle, cur);
  }
  for (std::size_t a = 0; a < pumps.size(); ++a) {
    t.check(pumps[a].range() == v && pumps[a].length() == kOmega, "pump shape " + to_word(pumps[a]));
    for (std::size_t b = a + 1; b < pumps.size(); ++b)
      t.check(!equals(pumps[a], pumps[b]), "pumps equal: " + to_word(pumps[a]) + " = " + to_word(pumps[b]));
  }
}

void criterion5(Tally& t) {
  const auto& p = get("two_plus_two");
  for (unsigned k : {0u, 1u}) {
    auto q = falpha(p, k);
    t.check(q.comps.members.size() == 1 && q.edges.size() == 2, "F_" + std::to_string(k) + " shape");
  }
  auto v = ck_verdict(p);
  t.check(v.condition_v.holds, "condition V");
  t.check(v.condition_s.status == ConditionS::Status::SatisfiedViaTheorem, "condition S");
  t.check(v.overall.status == CkEntry::Status::HoldsViaTheorem, "CKU");
  t.check(v.simplicity == Simplicity::Simple, "simple");
  try {
    Path u = build_nonreturning(p, *p.find_vertex("v"), 3, 1);
    Ordinal len = u.length();
    const auto& terms = len.terms();
    t.check(terms.size() == 1 && terms[0].exponent == Ordinal::natural(1) && terms[0].coefficient >= 3,
            "length " + to_string(u.length()));
    t.check(check_nonreturning_bounded(u, 1, 3).ok, "bounded check on " + to_word(u));
  } catch (const std::exception& e) {
    t.check(false, std::string("build_nonreturning threw: ") + e.what());
  }
}

void criterion6(Tally& t) {
  std::mt19937 rng(6006);
  for (int gi = 0; gi < 50; ++gi) {
    auto d = testsupport::random_digraph(rng);
    const Presentation& p = testsupport::keep(testsupport::to_presentation(d));
    std::string tag = "digraph " + std::to_string(gi);

    // F_0 is the input: singleton components, one class per edge, same endpoints
    auto q = falpha(p, 0);
    bool iso = q.comps.members.size() == d.n && q.edges.size() == d.edges.size();
    if (iso) {
      std::vector<std::pair<std::size_t, std::size_t>> got, want;
      for (const auto& e : q.edges) {
        iso = iso && e.members.size() == 1;
        got.push_back({q.comps.members[e.source].front(), q.comps.members[e.range].front()});
      }
      for (auto [s, r] : d.edges) want.push_back({s, r});
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      iso = iso && got == want;
    }
    t.check(iso, tag + ": F_0 not isomorphic");

    for (unsigned v = 0; v < d.n; ++v) {
      bool incoming = std::any_of(d.edges.begin(), d.edges.end(), [&](auto e) { return e.second == v; });
      t.check(is_alpha_regular(p, v, 0) == tri(incoming), tag + ": 0-regular at v" + std::to_string(v));

      auto cand = oracle::paths_into(d, v, 2);
      std::vector<std::vector<std::size_t>> subsets;
      if (cand.size() <= 10) {
        for (std::size_t mask = 0; mask < (std::size_t{1} << cand.size()); ++mask) {
          std::vector<std::size_t> s;
          for (std::size_t i = 0; i < cand.size(); ++i)
            if (mask >> i & 1) s.push_back(i);
          subsets.push_back(s);
        }
      } else {
        for (int n = 0; n < 300; ++n) {
          std::vector<std::size_t> s;
          for (std::size_t i = 0; i < cand.size(); ++i)
            if (rng() % 3 == 0) s.push_back(i);
          subsets.push_back(s);
        }
      }
      for (const auto& s : subsets) {
        std::vector<oracle::EdgeWord> ws;
        std::vector<Path> F;
        for (auto i : s) {
          ws.push_back(cand[i].edges);
          Path e = Path::identity(p, v);
          for (unsigned x : cand[i].edges) e = compose(e, Path::generator(p, x));
          F.push_back(e);
        }
        t.check(is_exhaustive(p, v, F) == tri(oracle::exhaustive(d, v, ws)), tag + ": exhaustive mismatch");
      }
    }

    Multigraph g;
    g.n = d.n;
    for (auto [s, r] : d.edges) g.edges.push_back({s, r});
    if (!cycles_without_entry(g).empty()) continue;
    for (std::size_t w = 0; w < g.n; ++w)
      for (std::size_t len : {1u, 2u, 4u}) {
        try {
          auto mu = digraph_nonreturning(g, w, len);
          bool ok = mu.size() >= len && g.edges[mu.front()].second == w;
          for (std::size_t i = 0; i + 1 < mu.size(); ++i) ok = ok && g.edges[mu[i]].first == g.edges[mu[i + 1]].second;
          ok = ok && oracle::last_edge_fresh({mu.begin(), mu.end()});
          t.check(ok, tag + ": non-returning output");
        } catch (const NotFound&) {
        }
      }
  }
}

void criterion7(Tally& t) {
  for (const auto& name : testsupport::sample_builtins()) {
    const auto& p = get(name);
    for (GenId a = 0; a < p.generator_count(); ++a) {
      Path e = Path::generator(p, a);
      std::string ea = name + ": " + p.generator(a).name;
      t.check(equals(multiply(adjoint(T(e)), T(e)), T(Path::identity(p, e.source()))), "relation 1 " + ea);
      for (GenId b = 0; b < p.generator_count(); ++b) {
        Path f = Path::generator(p, b);
        std::string tag = ea + "," + p.generator(b).name;
        auto x = compare_extensions(e, f);
        auto prod = multiply(adjoint(T(e)), T(f));
        bool tri_ok = false;
        switch (x) {
          case Extension::Equal: tri_ok = equals(prod, T(Path::identity(p, e.source()))); break;
          case Extension::ProperPrefixOf: tri_ok = equals(prod, T(split(f, e.length()).second)); break;
          case Extension::ProperlyExtends: tri_ok = equals(prod, adjoint(T(split(e, f.length()).second))); break;
          case Extension::Disjoint: tri_ok = prod.is_zero(); break;
        }
        t.check(tri_ok, "trichotomy " + tag);
        if (x == Extension::ProperPrefixOf || x == Extension::Equal)
          t.check(equals(multiply(P(e), P(f)), P(f)), "relation 3 " + tag);
        if (e.source() == f.range()) {
          Path ef = compose(e, f);
          t.check(equals(multiply(P(e), P(ef)), P(ef)), "relation 3 cone " + tag);
        }
      }
    }
  }

  std::mt19937 rng(7007);
  std::size_t triples = 0;
  auto rand_word = [&](const Presentation& p) {
    Path x = testsupport::random_path(rng, p, 3);
    for (int tries = 0; tries < 20; ++tries) {
      Path y = testsupport::random_path(rng, p, 3);
      if (y.source() == x.source()) return StarWord::make(x, y);
    }
    return StarWord::make(x, x);
  };
  for (const auto& name : testsupport::sample_builtins()) {
    const auto& p = get(name);
    for (int n = 0; n < 50; ++n) {
      auto a = rand_word(p), b = rand_word(p), c = rand_word(p);
      if (rng() % 3 == 0) b = adjoint(a);
      ++triples;
      t.check(equals(multiply(multiply(a, b), c), multiply(a, multiply(b, c))),
              "assoc " + to_string(a) + " ; " + to_string(b) + " ; " + to_string(c));
    }
    // same-length distinct paths have orthogonal range projections
    std::vector<Path> pool;
    for (int n = 0; n < 40; ++n) pool.push_back(testsupport::random_path(rng, p, 3));
    for (const auto& x : pool)
      for (const auto& y : pool)
        if (x.length() == y.length() && !equals(x, y))
          t.check(multiply(P(x), P(y)).is_zero() && multiply(adjoint(T(x)), T(y)).is_zero(),
                  "injectivity " + to_word(x) + " / " + to_word(y));
  }
  t.check(triples >= 300, "only " + std::to_string(triples) + " triples");
}

void criterion8(Tally& t) {
  std::mt19937 rng(8008);
  std::size_t count = 0;
  for (const auto& name : testsupport::sample_builtins()) {
    const auto& p = get(name);
    for (int n = 0; n < 70; ++n) {
      Path e = testsupport::random_path(rng, p, 5);
      if (e.is_identity()) continue;
      ++count;
      auto nb = normal_blocks(e);
      Path acc = Path::identity(p, e.range());
      bool ok = true;
      for (std::size_t k = 0; k < nb.size(); ++k) {
        ok = ok && nb[k].first == nb[k].second.length() && omega_power_exponent(nb[k].first).has_value();
        if (k > 0) ok = ok && nb[k].first <= nb[k - 1].first;
        acc = compose(acc, nb[k].second);
      }
      t.check(ok && equals(acc, e), name + ": " + to_word(e));
    }
  }
  t.check(count >= 300, "only " + std::to_string(count) + " samples");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria = {
      {"ordinal arithmetic laws", criterion1},
      {"factorization identities", criterion2},
      {"interval_omega2 facts", criterion3},
      {"two_loop infinite fibre", criterion4},
      {"two_plus_two verdict and non-returning path", criterion5},
      {"digraph specialization", criterion6},
      {"star-word calculus", criterion7},
      {"normal form blocks", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally t;
    auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(t);
    } catch (const std::exception& e) {
      t.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = t.failures == 0 && t.checks > 0;
    failed += !ok;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (ok ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << t.checks
         << " checks, " << t.failures << " failed, " << secs << " s)";
    std::cout << line.str() << '\n';
    for (const auto& n : t.notes) std::cout << "    " << n << '\n';
  }
  return failed ? 1 : 0;
}
