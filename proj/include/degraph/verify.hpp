#pragma once

// The vertex bound |V| <= max{2w+1, 3w-4}, per-graph bound checks, structural
// verification of the PSL(2,q) degree graphs against their closed form, and a
// scan driver over all prime powers up to a limit.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "degraph/arith.hpp"
#include "degraph/degrees.hpp"
#include "degraph/graph.hpp"

namespace degraph {

// max{2w+1, 3w-4}; the second term only competes once it is nonnegative
inline std::uint64_t theorem_a_bound(std::uint64_t omega) {
  std::uint64_t b = 2 * omega + 1;
  if (omega >= 2 && 3 * omega - 4 > b) b = 3 * omega - 4;
  return b;
}

struct BoundReport {
  std::uint64_t vertex_count = 0;
  std::size_t clique_number = 0;
  std::uint64_t bound_value = 0;
  bool holds = false;        // |V| <= max{2w+1, 3w-4}
  bool ineq1_holds = false;  // |V| <= 2w+1
};

inline BoundReport check_bound(const DegreeGraph& g) {
  BoundReport rep;
  rep.vertex_count = g.vertex_count();
  rep.clique_number = max_clique(g).size;
  rep.bound_value = theorem_a_bound(rep.clique_number);
  rep.holds = rep.vertex_count <= rep.bound_value;
  rep.ineq1_holds = rep.vertex_count <= 2 * static_cast<std::uint64_t>(rep.clique_number) + 1;
  return rep;
}

struct StructureReport {
  std::uint64_t q = 0;
  bool ok = false;
  std::vector<std::string> failures;  // clause tags, see check_structure
};

namespace detail {

inline bool is_complete_on(const DegreeGraph& g, const std::vector<std::uint64_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.has_edge(set[i], set[j])) return false;
  return true;
}

inline bool same_sets(std::vector<std::vector<std::uint64_t>> got,
                      std::vector<std::vector<std::uint64_t>> want) {
  auto norm = [](std::vector<std::vector<std::uint64_t>>& v) {
    for (auto& s : v) std::sort(s.begin(), s.end());
    std::sort(v.begin(), v.end());
  };
  norm(got);
  norm(want);
  return got == want;
}

// Checks g against the closed-form graph of PSL(2,q). Appends a tag per
// violated clause:
//   q5-graph            q = 5 only: three isolated vertices 2, 3, 5
//   vertex-set          vertices are {u} union pi(q-1) union pi(q+1)
//   components          the component partition matches the closed form
//   pi-minus-complete   pi(q-1) is a clique
//   pi-plus-complete    pi(q+1) is a clique
//   cross-edges         odd q > 5: no edge between the halves away from 2
//   two-adjacent        odd q > 5: 2 is adjacent to every vertex except u
inline void check_structure(const PrimePowerQ& q, const DegreeGraph& g,
                            std::vector<std::string>& failures) {
  if (q.q == 5) {
    std::vector<std::uint64_t> want{2, 3, 5};
    if (g.vertices() != want || g.edge_count() != 0) failures.push_back("q5-graph");
    return;
  }

  std::vector<std::uint64_t> pim = prime_divisors(q.q - 1);
  std::vector<std::uint64_t> pip = prime_divisors(q.q + 1);

  std::vector<std::uint64_t> want{q.u};
  want.insert(want.end(), pim.begin(), pim.end());
  want.insert(want.end(), pip.begin(), pip.end());
  std::sort(want.begin(), want.end());
  want.erase(std::unique(want.begin(), want.end()), want.end());
  if (g.vertices() != want) {
    failures.push_back("vertex-set");
    return;  // the remaining clauses probe edges between expected vertices
  }

  if (q.u == 2) {
    if (!same_sets(connected_components(g), {{q.u}, pim, pip})) failures.push_back("components");
  } else {
    std::vector<std::uint64_t> merged;
    std::set_union(pim.begin(), pim.end(), pip.begin(), pip.end(), std::back_inserter(merged));
    if (!same_sets(connected_components(g), {{q.u}, merged})) failures.push_back("components");
  }
  if (!is_complete_on(g, pim)) failures.push_back("pi-minus-complete");
  if (!is_complete_on(g, pip)) failures.push_back("pi-plus-complete");
  if (q.u != 2) {
    bool crossing = false;
    for (std::uint64_t a : pim)
      for (std::uint64_t b : pip)
        if (a != 2 && b != 2 && g.has_edge(a, b)) crossing = true;
    if (crossing) failures.push_back("cross-edges");
    for (std::uint64_t v : g.vertices())
      if (v != 2 && v != q.u && !g.has_edge(2, v)) {
        failures.push_back("two-adjacent");
        break;
      }
  }
}

}  // namespace detail

// Builds the degree graph of PSL(2,q) and verifies it clause by clause.
inline StructureReport check_psl2_structure(std::uint64_t q) {
  PrimePowerQ pq = PrimePowerQ::of(q);
  StructureReport rep;
  rep.q = q;
  detail::check_structure(pq, build_graph(cd_psl2(pq)), rep.failures);
  rep.ok = rep.failures.empty();
  return rep;
}

struct ScanFailure {
  std::uint64_t q = 0;
  std::string clause;

  friend bool operator==(const ScanFailure& a, const ScanFailure& b) {
    return a.q == b.q && a.clause == b.clause;
  }
};

struct ScanReport {
  std::uint64_t limit = 0;
  std::uint64_t checked = 0;
  std::vector<ScanFailure> failures;
};

// Every prime power q in [4, limit]: structure clauses for PSL(2,q), the
// vertex bound for both PSL(2,q) and SL(2,q) (clauses bound-psl2, bound-sl2),
// and graph equality of the two for odd q > 5 (clause sl2-equals-psl2).
inline ScanReport scan_psl2(std::uint64_t limit) {
  ScanReport rep;
  rep.limit = limit;
  if (limit < 4) return rep;

  std::vector<std::uint64_t> qs;
  for (std::uint64_t p : sieve_primes(limit)) {
    if (p >= 4) qs.push_back(p);
    if (p > limit / p) continue;
    std::uint64_t v = p * p;
    while (v <= limit) {
      if (v >= 4) qs.push_back(v);
      if (v > limit / p) break;
      v *= p;
    }
  }
  std::sort(qs.begin(), qs.end());

  for (std::uint64_t q : qs) {
    ++rep.checked;
    PrimePowerQ pq = PrimePowerQ::of(q);
    std::vector<std::string> clauses;
    DegreeGraph psl = build_graph(cd_psl2(pq));
    detail::check_structure(pq, psl, clauses);
    if (!check_bound(psl).holds) clauses.push_back("bound-psl2");
    if (pq.u != 2) {
      DegreeGraph sl = build_graph(cd_sl2(pq));
      if (!check_bound(sl).holds) clauses.push_back("bound-sl2");
      if (q > 5 && !(sl == psl)) clauses.push_back("sl2-equals-psl2");
    }
    for (std::string& c : clauses) rep.failures.push_back(ScanFailure{q, std::move(c)});
  }
  return rep;
}

}  // namespace degraph
