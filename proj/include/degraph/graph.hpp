#pragma once

// Degree graphs: construction from degree sets, complement, bipartiteness
// with odd-cycle witnesses, two-clique covers, connected components, exact
// maximum clique, and join products.
//
// Representation: vertices are an ascending prime list; adjacency is stored
// as sorted neighbor-index lists plus a `complemented` flag. When the flag
// is set the logical adjacency is the negation of the stored one, so the
// complement of a graph costs O(1) and the huge join graphs of many-factor
// direct products store only their sparse complements.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "degraph/arith.hpp"
#include "degraph/clique.hpp"
#include "degraph/degrees.hpp"

namespace degraph {

class DegreeGraph;

namespace detail {
inline DegreeGraph make_degree_graph(std::vector<std::uint64_t> verts,
                                     std::vector<std::vector<std::uint32_t>> nbrs,
                                     bool complemented);
// logical edge count above which edges() refuses to materialize
inline constexpr std::uint64_t kEdgeMaterializeCap = 5000000;
}  // namespace detail

struct TwoCliqueCover {
  std::vector<std::uint64_t> part_a;
  std::vector<std::uint64_t> part_b;
};

struct BipartiteResult {
  bool bipartite = false;
  std::vector<std::uint64_t> part_a;  // color classes when bipartite
  std::vector<std::uint64_t> part_b;
  std::vector<std::uint64_t> odd_cycle;  // odd closed walk otherwise; last~first closes it
};

struct MaxClique {
  std::size_t size = 0;
  std::vector<std::uint64_t> witness;
};

class DegreeGraph {
 public:
  DegreeGraph() = default;

  // Validating constructor for caller-supplied graphs: vertices must be
  // distinct primes, edges must join distinct listed vertices.
  static DegreeGraph from_edges(std::vector<std::uint64_t> vertices,
                                const std::vector<std::pair<std::uint64_t, std::uint64_t>>& edges) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (std::uint64_t v : vertices)
      if (!is_prime(v))
        throw std::invalid_argument("DegreeGraph: vertex " + std::to_string(v) +
                                    " is not prime");
    std::vector<std::vector<std::uint32_t>> nbrs(vertices.size());
    for (const auto& [p, q] : edges) {
      if (p == q)
        throw std::invalid_argument("DegreeGraph: self-loop at " + std::to_string(p));
      std::size_t i = index_in(vertices, p);
      std::size_t j = index_in(vertices, q);
      nbrs[i].push_back(static_cast<std::uint32_t>(j));
      nbrs[j].push_back(static_cast<std::uint32_t>(i));
    }
    for (auto& list : nbrs) {
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return DegreeGraph(std::move(vertices), std::move(nbrs), false);
  }

  std::size_t vertex_count() const { return verts_.size(); }
  const std::vector<std::uint64_t>& vertices() const { return verts_; }
  bool is_complemented() const { return complemented_; }

  bool has_vertex(std::uint64_t p) const {
    return std::binary_search(verts_.begin(), verts_.end(), p);
  }

  bool has_edge(std::uint64_t p, std::uint64_t q) const {
    std::size_t i = index_of(p);
    std::size_t j = index_of(q);
    if (i == j) return false;
    return logical_edge(i, j);
  }

  std::uint64_t edge_count() const {
    std::uint64_t stored = 0;
    for (const auto& list : nbrs_) stored += list.size();
    stored /= 2;
    if (!complemented_) return stored;
    std::uint64_t n = verts_.size();
    return n * (n - 1) / 2 - stored;
  }

  // logical edge list as prime pairs, lexicographic with p < q
  std::vector<std::pair<std::uint64_t, std::uint64_t>> edges() const {
    if (edge_count() > detail::kEdgeMaterializeCap)
      throw std::length_error("DegreeGraph: edge list too large to materialize");
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    out.reserve(static_cast<std::size_t>(edge_count()));
    for (std::size_t i = 0; i < verts_.size(); ++i) {
      if (!complemented_) {
        for (std::uint32_t j : nbrs_[i])
          if (j > i) out.emplace_back(verts_[i], verts_[j]);
      } else {
        const auto& ex = nbrs_[i];
        std::size_t k = 0;
        for (std::size_t j = i + 1; j < verts_.size(); ++j) {
          while (k < ex.size() && ex[k] < j) ++k;
          if (k < ex.size() && ex[k] == j) continue;
          out.emplace_back(verts_[i], verts_[j]);
        }
      }
    }
    return out;
  }

  friend bool operator==(const DegreeGraph& a, const DegreeGraph& b) {
    if (a.verts_ != b.verts_) return false;
    if (a.complemented_ == b.complemented_) return a.nbrs_ == b.nbrs_;
    for (std::size_t i = 0; i < a.verts_.size(); ++i)
      for (std::size_t j = i + 1; j < a.verts_.size(); ++j)
        if (a.logical_edge(i, j) != b.logical_edge(i, j)) return false;
    return true;
  }

 private:
  DegreeGraph(std::vector<std::uint64_t> verts, std::vector<std::vector<std::uint32_t>> nbrs,
              bool complemented)
      : verts_(std::move(verts)), nbrs_(std::move(nbrs)), complemented_(complemented) {}

  static std::size_t index_in(const std::vector<std::uint64_t>& verts, std::uint64_t p) {
    auto it = std::lower_bound(verts.begin(), verts.end(), p);
    if (it == verts.end() || *it != p)
      throw std::invalid_argument("DegreeGraph: " + std::to_string(p) + " is not a vertex");
    return static_cast<std::size_t>(it - verts.begin());
  }

  std::size_t index_of(std::uint64_t p) const { return index_in(verts_, p); }

  bool stored_edge(std::size_t i, std::size_t j) const {
    return std::binary_search(nbrs_[i].begin(), nbrs_[i].end(),
                              static_cast<std::uint32_t>(j));
  }

  bool logical_edge(std::size_t i, std::size_t j) const {
    bool s = stored_edge(i, j);
    return complemented_ ? !s : s;
  }

  // logical neighbor indices of i, ascending
  std::vector<std::uint32_t> logical_neighbors(std::size_t i) const {
    if (!complemented_) return nbrs_[i];
    std::vector<std::uint32_t> out;
    const auto& ex = nbrs_[i];
    std::size_t k = 0;
    for (std::size_t j = 0; j < verts_.size(); ++j) {
      if (j == i) continue;
      while (k < ex.size() && ex[k] < j) ++k;
      if (k < ex.size() && ex[k] == j) continue;
      out.push_back(static_cast<std::uint32_t>(j));
    }
    return out;
  }

  std::vector<std::uint64_t> verts_;
  std::vector<std::vector<std::uint32_t>> nbrs_;
  bool complemented_ = false;

  friend DegreeGraph detail::make_degree_graph(std::vector<std::uint64_t>,
                                               std::vector<std::vector<std::uint32_t>>, bool);
  friend DegreeGraph complement(const DegreeGraph&);
  friend BipartiteResult is_bipartite(const DegreeGraph&);
  friend std::vector<std::vector<std::uint64_t>> connected_components(const DegreeGraph&);
  friend MaxClique max_clique(const DegreeGraph&);
  friend DegreeGraph join_product(const DegreeGraph&, const DegreeGraph&);
};

namespace detail {
inline DegreeGraph make_degree_graph(std::vector<std::uint64_t> verts,
                                     std::vector<std::vector<std::uint32_t>> nbrs,
                                     bool complemented) {
  return DegreeGraph(std::move(verts), std::move(nbrs), complemented);
}
}  // namespace detail

// Vertices: every prime dividing some degree; p ~ q iff pq divides some degree
// (equivalently, p and q divide a common degree).
inline DegreeGraph build_graph(const DegreeSet& degrees) {
  std::vector<std::vector<std::uint64_t>> prime_sets;
  prime_sets.reserve(degrees.size());
  std::vector<std::uint64_t> verts;
  for (std::uint64_t d : degrees.values()) {
    if (d == 1) continue;
    prime_sets.push_back(prime_divisors(d));
    verts.insert(verts.end(), prime_sets.back().begin(), prime_sets.back().end());
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::size_t n = verts.size();
  std::vector<detail::Bits> adj(n, detail::Bits(n));
  for (const auto& ps : prime_sets) {
    for (std::size_t a = 0; a < ps.size(); ++a) {
      std::size_t i = static_cast<std::size_t>(
          std::lower_bound(verts.begin(), verts.end(), ps[a]) - verts.begin());
      for (std::size_t b = a + 1; b < ps.size(); ++b) {
        std::size_t j = static_cast<std::size_t>(
            std::lower_bound(verts.begin(), verts.end(), ps[b]) - verts.begin());
        adj[i].set(j);
        adj[j].set(i);
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i)
    adj[i].for_each([&](std::size_t j) { nbrs[i].push_back(static_cast<std::uint32_t>(j)); });
  return detail::make_degree_graph(std::move(verts), std::move(nbrs), false);
}

// Same vertices, adjacency negated; O(1) via the representation flag.
inline DegreeGraph complement(const DegreeGraph& g) {
  return detail::make_degree_graph(g.verts_, g.nbrs_, !g.complemented_);
}

// BFS 2-coloring per component; on a conflict the odd cycle is rebuilt from
// the BFS tree (both paths to the conflict edge's endpoints' common ancestor).
inline BipartiteResult is_bipartite(const DegreeGraph& g) {
  std::size_t n = g.verts_.size();
  std::vector<signed char> color(n, -1);
  std::vector<std::uint32_t> parent(n, 0);
  std::vector<std::uint32_t> depth(n, 0);
  BipartiteResult res;

  for (std::size_t root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    depth[root] = 0;
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t v = queue[head];
      for (std::uint32_t w : g.logical_neighbors(v)) {
        if (color[w] == -1) {
          color[w] = static_cast<signed char>(color[v] ^ 1);
          parent[w] = static_cast<std::uint32_t>(v);
          depth[w] = depth[v] + 1;
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          // odd cycle: v .. lca .. w, closed by the conflict edge w-v
          std::size_t a = v, b = w;
          std::vector<std::size_t> pa{a}, pb{b};
          while (depth[a] > depth[b]) pa.push_back(a = parent[a]);
          while (depth[b] > depth[a]) pb.push_back(b = parent[b]);
          while (a != b) {
            pa.push_back(a = parent[a]);
            pb.push_back(b = parent[b]);
          }
          res.bipartite = false;
          for (std::size_t x : pa) res.odd_cycle.push_back(g.verts_[x]);
          for (std::size_t k = pb.size() - 1; k-- > 0;)
            res.odd_cycle.push_back(g.verts_[pb[k]]);
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  for (std::size_t i = 0; i < n; ++i)
    (color[i] == 0 ? res.part_a : res.part_b).push_back(g.verts_[i]);
  return res;
}

// Present iff complement(G) is bipartite; the parts are the complement's
// color classes, hence cliques of G.
inline std::optional<TwoCliqueCover> two_clique_cover(const DegreeGraph& g) {
  BipartiteResult r = is_bipartite(complement(g));
  if (!r.bipartite) return std::nullopt;
  return TwoCliqueCover{std::move(r.part_a), std::move(r.part_b)};
}

inline std::vector<std::vector<std::uint64_t>> connected_components(const DegreeGraph& g) {
  std::size_t n = g.verts_.size();
  std::vector<std::vector<std::uint64_t>> comps;
  if (!g.complemented_) {
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::vector<std::size_t> queue{root};
      std::vector<std::uint64_t> comp;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t v = queue[head];
        comp.push_back(g.verts_[v]);
        for (std::uint32_t w : g.nbrs_[v])
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      }
      std::sort(comp.begin(), comp.end());
      comps.push_back(std::move(comp));
    }
    return comps;
  }

  // complement BFS: neighbors of v are the still-unvisited vertices that are
  // NOT stored neighbors; each walk either removes a vertex for good or
  // touches a stored edge, so the total cost is O(V + E_stored)
  std::vector<std::uint32_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = static_cast<std::uint32_t>(i);
  while (!remaining.empty()) {
    std::uint32_t root = remaining.front();
    remaining.erase(remaining.begin());
    std::vector<std::uint32_t> queue{root};
    std::vector<std::uint64_t> comp;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::uint32_t v = queue[head];
      comp.push_back(g.verts_[v]);
      const auto& ex = g.nbrs_[v];
      std::vector<std::uint32_t> kept;
      kept.reserve(ex.size());
      std::size_t k = 0;
      for (std::uint32_t r : remaining) {
        while (k < ex.size() && ex[k] < r) ++k;
        if (k < ex.size() && ex[k] == r)
          kept.push_back(r);  // stored neighbor: not a complement edge
        else
          queue.push_back(r);
      }
      remaining.swap(kept);
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

namespace detail {

// branch-and-bound clique over the induced subgraph on `idx`; `flip` solves
// on the complement of the stored relation (i.e. independent sets)
template <typename StoredEdge>
inline std::vector<std::size_t> bb_on_subset(const std::vector<std::size_t>& idx,
                                             StoredEdge stored, bool flip) {
  std::size_t m = idx.size();
  if (m > kCliqueVertexCap)
    throw std::length_error("max_clique: component exceeds solver cap");
  std::vector<Bits> adj(m, Bits(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      bool e = stored(idx[a], idx[b]);
      if (flip) e = !e;
      if (e) {
        adj[a].set(b);
        adj[b].set(a);
      }
    }
  std::vector<std::size_t> local = max_clique_indices(adj);
  std::vector<std::size_t> out;
  out.reserve(local.size());
  for (std::size_t k : local) out.push_back(idx[k]);
  return out;
}

}  // namespace detail

// Exact clique number with witness. Materialized graphs solve per logical
// component; complemented graphs are joins over their stored components, so
// the clique number is the sum of per-component independence numbers of the
// sparse stored graph.
inline MaxClique max_clique(const DegreeGraph& g) {
  std::size_t n = g.verts_.size();
  MaxClique result;
  if (n == 0) return result;

  auto stored = [&](std::size_t i, std::size_t j) { return g.stored_edge(i, j); };

  // components of the stored relation, as index lists
  std::vector<std::vector<std::size_t>> comps;
  {
    std::vector<bool> seen(n, false);
    for (std::size_t root = 0; root < n; ++root) {
      if (seen[root]) continue;
      seen[root] = true;
      std::vector<std::size_t> queue{root};
      for (std::size_t head = 0; head < queue.size(); ++head)
        for (std::uint32_t w : g.nbrs_[queue[head]])
          if (!seen[w]) {
            seen[w] = true;
            queue.push_back(w);
          }
      std::sort(queue.begin(), queue.end());
      comps.push_back(std::move(queue));
    }
  }

  if (g.complemented_) {
    for (const auto& comp : comps) {
      std::vector<std::size_t> part = detail::bb_on_subset(comp, stored, /*flip=*/true);
      result.size += part.size();
      for (std::size_t i : part) result.witness.push_back(g.verts_[i]);
    }
  } else {
    std::vector<std::size_t> best;
    for (const auto& comp : comps) {
      std::vector<std::size_t> cand = detail::bb_on_subset(comp, stored, /*flip=*/false);
      if (cand.size() > best.size()) best = std::move(cand);
    }
    result.size = best.size();
    for (std::size_t i : best) result.witness.push_back(g.verts_[i]);
  }
  std::sort(result.witness.begin(), result.witness.end());
  return result;
}

// Join: union of the graphs plus every edge between the two vertex sets.
// The result is stored as a complement: its non-edges are each side's
// non-edges between vertices exclusive to that side.
inline DegreeGraph join_product(const DegreeGraph& g1, const DegreeGraph& g2) {
  if (g1.vertex_count() == 0) return g2;
  if (g2.vertex_count() == 0) return g1;

  std::vector<std::uint64_t> verts;
  verts.reserve(g1.verts_.size() + g2.verts_.size());
  std::set_union(g1.verts_.begin(), g1.verts_.end(), g2.verts_.begin(), g2.verts_.end(),
                 std::back_inserter(verts));
  auto new_index = [&](std::uint64_t p) {
    return static_cast<std::uint32_t>(
        std::lower_bound(verts.begin(), verts.end(), p) - verts.begin());
  };

  std::vector<std::vector<std::uint32_t>> nbrs(verts.size());
  auto add_side = [&](const DegreeGraph& own, const DegreeGraph& other) {
    std::size_t m = own.verts_.size();
    std::vector<bool> exclusive(m);
    for (std::size_t i = 0; i < m; ++i) exclusive[i] = !other.has_vertex(own.verts_[i]);
    auto emit = [&](std::size_t i, std::size_t j) {
      std::uint32_t a = new_index(own.verts_[i]);
      std::uint32_t b = new_index(own.verts_[j]);
      nbrs[a].push_back(b);
      nbrs[b].push_back(a);
    };
    if (own.complemented_) {
      // stored pairs are exactly the logical non-edges
      for (std::size_t i = 0; i < m; ++i) {
        if (!exclusive[i]) continue;
        for (std::uint32_t j : own.nbrs_[i])
          if (j > i && exclusive[j]) emit(i, j);
      }
    } else {
      for (std::size_t i = 0; i < m; ++i) {
        if (!exclusive[i]) continue;
        for (std::size_t j = i + 1; j < m; ++j)
          if (exclusive[j] && !own.stored_edge(i, j)) emit(i, j);
      }
    }
  };
  add_side(g1, g2);
  add_side(g2, g1);
  for (auto& list : nbrs) std::sort(list.begin(), list.end());
  return detail::make_degree_graph(std::move(verts), std::move(nbrs), true);
}

}  // namespace degraph
