#pragma once

// Candidate prime powers whose neighbor sets reduce to single primes beyond
// {2,3}, pairwise compatibility, greedy/exact set packing into families, and
// the degree graph of the direct product over a family.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "degraph/arith.hpp"
#include "degraph/degrees.hpp"
#include "degraph/graph.hpp"

namespace degraph {

// Raised when a family violates its structural contract (non-candidate
// member, incompatible pair, or a computed invariant mismatch).
class family_validity_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A candidate q = u^alpha with u > 3 whose sets pi(q-1)\{2,3} and
// pi(q+1)\{2,3} are singletons {p_minus} and {p_plus}.
struct Signature {
  PrimePowerQ q;
  std::uint64_t p_minus;
  std::uint64_t p_plus;
  std::vector<std::uint64_t> support;  // {2, 3, u, p_minus, p_plus}, ascending

  friend bool operator==(const Signature& a, const Signature& b) { return a.q.q == b.q.q; }
};

struct FamilyReport {
  std::size_t n = 0;
  std::uint64_t vertex_count = 0;
  std::size_t clique_number = 0;
  std::uint64_t ratio_num = 0;  // vertex_count / clique_number, reduced
  std::uint64_t ratio_den = 0;
  bool bound_2w1_holds = false;  // |V| <= 2w + 1
  bool bound_3w4_holds = false;  // |V| <= 3w - 4
  std::vector<Signature> family;
};

namespace detail {

// the singleton of values \ {2,3}, if any
inline std::optional<std::uint64_t> reduced_singleton(const std::vector<std::uint64_t>& primes) {
  std::optional<std::uint64_t> found;
  for (std::uint64_t p : primes) {
    if (p == 2 || p == 3) continue;
    if (found) return std::nullopt;
    found = p;
  }
  return found;
}

// signature check with the prime-power decomposition already known
inline std::optional<Signature> signature_for(std::uint64_t q, std::uint64_t u, unsigned alpha) {
  if (u <= 3) return std::nullopt;
  auto pm = reduced_singleton(prime_divisors(q - 1));
  if (!pm) return std::nullopt;
  auto pp = reduced_singleton(prime_divisors(q + 1));
  if (!pp) return std::nullopt;
  Signature s;
  s.q = PrimePowerQ{q, u, alpha};
  s.p_minus = *pm;
  s.p_plus = *pp;
  s.support = {2, 3, u, *pm, *pp};
  std::sort(s.support.begin(), s.support.end());
  return s;
}

}  // namespace detail

// Present iff q is a prime power with base u > 3 and both reduced neighbor
// prime sets are singletons. q above 2^63 - 2 is rejected (q + 1 must stay
// within the factorization input cap).
inline std::optional<Signature> candidate_signature(std::uint64_t q) {
  if (q < 4) return std::nullopt;
  if (q > (std::uint64_t(1) << 63) - 2)
    throw std::invalid_argument("candidate_signature: q exceeds supported range");
  auto d = prime_power_decompose(q);
  if (!d) return std::nullopt;
  return detail::signature_for(q, d->prime, d->exponent);
}

// All candidates with q <= limit, ascending in q. With include_prime_powers
// false only prime q are scanned; otherwise q = u^alpha with alpha >= 2 are
// scanned as well.
inline std::vector<Signature> find_candidates(std::uint64_t limit,
                                              bool include_prime_powers = false) {
  std::vector<Signature> out;
  if (limit < 4) return out;
  std::vector<std::uint64_t> primes = sieve_primes(limit);
  for (std::uint64_t p : primes) {
    if (p <= 3) continue;
    if (auto s = detail::signature_for(p, p, 1)) out.push_back(*s);
  }
  if (include_prime_powers) {
    for (std::uint64_t u : primes) {
      if (u <= 3) continue;
      if (u > limit / u) break;
      std::uint64_t v = u * u;
      unsigned alpha = 2;
      while (v <= limit) {
        if (auto s = detail::signature_for(v, u, alpha)) out.push_back(*s);
        if (v > limit / u) break;
        v *= u;
        ++alpha;
      }
    }
    std::sort(out.begin(), out.end(),
              [](const Signature& a, const Signature& b) { return a.q.q < b.q.q; });
  }
  return out;
}

// True iff support(a) and support(b) meet in exactly {2,3}; equivalently the
// triples {u, p_minus, p_plus} are disjoint, since every support is
// {2, 3, u, p_minus, p_plus}.
inline bool compatible(const Signature& a, const Signature& b) {
  std::vector<std::uint64_t> common;
  std::set_intersection(a.support.begin(), a.support.end(), b.support.begin(), b.support.end(),
                        std::back_inserter(common));
  return common == std::vector<std::uint64_t>{2, 3};
}

// First-fit in ascending q order over a running set of used primes.
inline std::vector<Signature> pack_greedy(const std::vector<Signature>& candidates) {
  std::vector<const Signature*> order;
  order.reserve(candidates.size());
  for (const Signature& s : candidates) order.push_back(&s);
  std::stable_sort(order.begin(), order.end(),
                   [](const Signature* a, const Signature* b) { return a->q.q < b->q.q; });
  std::unordered_set<std::uint64_t> used;
  std::vector<Signature> out;
  for (const Signature* s : order) {
    if (used.count(s->q.u) || used.count(s->p_minus) || used.count(s->p_plus)) continue;
    used.insert(s->q.u);
    used.insert(s->p_minus);
    used.insert(s->p_plus);
    out.push_back(*s);
  }
  return out;
}

// Maximum-size pairwise-compatible subset, exact: a maximum clique of the
// compatibility graph. Inputs above `cap` are refused (exponential worst case).
inline std::vector<Signature> pack_exact(const std::vector<Signature>& candidates,
                                         std::size_t cap = 48) {
  if (candidates.size() > cap)
    throw std::length_error("pack_exact: candidate list exceeds cap of " + std::to_string(cap));
  std::size_t m = candidates.size();
  std::vector<detail::Bits> adj(m, detail::Bits(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (compatible(candidates[i], candidates[j])) {
        adj[i].set(j);
        adj[j].set(i);
      }
  std::vector<std::size_t> pick = detail::max_clique_indices(adj);
  std::sort(pick.begin(), pick.end());
  std::vector<Signature> out;
  out.reserve(pick.size());
  for (std::size_t i : pick) out.push_back(candidates[i]);
  return out;
}

namespace detail {

// verifies pairwise compatibility in O(n) via prime ownership; throws with
// the offending pair otherwise
inline void require_compatible(const std::vector<Signature>& family) {
  std::unordered_map<std::uint64_t, std::uint64_t> owner;  // prime -> q
  owner.reserve(family.size() * 3);
  for (const Signature& s : family) {
    for (std::uint64_t p : {s.q.u, s.p_minus, s.p_plus}) {
      auto [it, inserted] = owner.emplace(p, s.q.q);
      if (!inserted)
        throw family_validity_error("family members q=" + std::to_string(it->second) +
                                    " and q=" + std::to_string(s.q.q) + " share the prime " +
                                    std::to_string(p));
    }
  }
}

}  // namespace detail

// Degree graph of the direct product of PSL(2, q_i) over the family. At or
// below the threshold the graph is folded explicitly with join_product; above
// it the sparse complement (one triangle {u, p_minus, p_plus} per factor,
// vertices 2 and 3 isolated) is written down directly.
inline DegreeGraph build_gpi_graph(const std::vector<Signature>& family,
                                   std::size_t implicit_threshold = 32) {
  if (family.empty()) throw std::invalid_argument("build_gpi_graph: family is empty");
  detail::require_compatible(family);
  if (family.size() == 1) return build_graph(cd_psl2(family.front().q));

  if (family.size() <= implicit_threshold) {
    DegreeGraph g;
    for (const Signature& s : family) g = join_product(g, build_graph(cd_psl2(s.q)));
    return g;
  }

  std::vector<std::uint64_t> verts{2, 3};
  for (const Signature& s : family) {
    verts.push_back(s.q.u);
    verts.push_back(s.p_minus);
    verts.push_back(s.p_plus);
  }
  std::sort(verts.begin(), verts.end());
  auto index = [&](std::uint64_t p) {
    return static_cast<std::uint32_t>(std::lower_bound(verts.begin(), verts.end(), p) -
                                      verts.begin());
  };
  std::vector<std::vector<std::uint32_t>> nbrs(verts.size());
  for (const Signature& s : family) {
    std::uint32_t a = index(s.q.u), b = index(s.p_minus), c = index(s.p_plus);
    nbrs[a].insert(nbrs[a].end(), {b, c});
    nbrs[b].insert(nbrs[b].end(), {a, c});
    nbrs[c].insert(nbrs[c].end(), {a, b});
  }
  for (auto& list : nbrs) std::sort(list.begin(), list.end());
  return detail::make_degree_graph(std::move(verts), std::move(nbrs), true);
}

// Builds the graph, computes |V| and the clique number, asserts the family
// identities |V| = 3n+2 and w = n+2, and evaluates both vertex bounds.
inline FamilyReport family_report(const std::vector<Signature>& family,
                                  std::size_t implicit_threshold = 32) {
  if (family.empty()) throw std::invalid_argument("family_report: family is empty");
  FamilyReport rep;
  rep.family = family;
  std::sort(rep.family.begin(), rep.family.end(),
            [](const Signature& a, const Signature& b) { return a.q.q < b.q.q; });
  rep.n = family.size();

  DegreeGraph g = build_gpi_graph(rep.family, implicit_threshold);
  rep.vertex_count = g.vertex_count();
  rep.clique_number = max_clique(g).size;

  std::uint64_t n = rep.n;
  if (rep.vertex_count != 3 * n + 2 || rep.clique_number != n + 2)
    throw family_validity_error(
        "family identities violated: computed |V|=" + std::to_string(rep.vertex_count) +
        ", w=" + std::to_string(rep.clique_number) + " for n=" + std::to_string(n));

  std::uint64_t gcd = std::gcd(rep.vertex_count, static_cast<std::uint64_t>(rep.clique_number));
  rep.ratio_num = rep.vertex_count / gcd;
  rep.ratio_den = rep.clique_number / gcd;
  std::uint64_t w = rep.clique_number;
  rep.bound_2w1_holds = rep.vertex_count <= 2 * w + 1;
  rep.bound_3w4_holds = 3 * w >= 4 && rep.vertex_count <= 3 * w - 4;
  return rep;
}

// Resolves q values to signatures; rejects non-candidates by value.
inline std::vector<Signature> signatures_from_qs(const std::vector<std::uint64_t>& qs) {
  std::vector<Signature> out;
  out.reserve(qs.size());
  for (std::uint64_t q : qs) {
    auto s = candidate_signature(q);
    if (!s)
      throw family_validity_error("q=" + std::to_string(q) +
                                  " is not a candidate prime power");
    out.push_back(*s);
  }
  return out;
}

}  // namespace degraph
