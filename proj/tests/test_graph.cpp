#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>

#include <degraph/degrees.hpp>
#include <degraph/graph.hpp>
#include <degraph/io.hpp>

using namespace degraph;

namespace {

using Edge = std::pair<std::uint64_t, std::uint64_t>;

std::vector<std::vector<std::uint64_t>> normalized(std::vector<std::vector<std::uint64_t>> comps) {
  for (auto& c : comps) std::sort(c.begin(), c.end());
  std::sort(comps.begin(), comps.end());
  return comps;
}

// Erdos-Renyi style graph on a prefix of the primes, p = 1/2.
DegreeGraph random_graph(std::mt19937_64& rng, std::size_t max_vertices) {
  static const std::vector<std::uint64_t> pool = sieve_primes(200);
  std::uniform_int_distribution<std::size_t> nv(0, max_vertices);
  std::size_t n = nv(rng);
  std::vector<std::uint64_t> verts(pool.begin(), pool.begin() + n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng() & 1) edges.emplace_back(verts[i], verts[j]);
  return DegreeGraph::from_edges(verts, edges);
}

// exhaustive maximum clique by subset enumeration, n <= 20
std::size_t brute_clique(const DegreeGraph& g) {
  std::vector<std::uint64_t> verts = g.vertices();
  std::size_t n = verts.size();
  std::vector<std::uint32_t> adj(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && g.has_edge(verts[i], verts[j])) adj[i] |= std::uint32_t(1) << j;
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t(1) << n); ++s) {
    bool clique = true;
    for (std::uint32_t rest = s; rest && clique;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      clique = (s & ~adj[v] & ~(std::uint32_t(1) << v)) == 0;
    }
    if (clique) best = std::max<std::size_t>(best, std::popcount(s));
  }
  return best;
}

bool is_clique(const DegreeGraph& g, const std::vector<std::uint64_t>& set) {
  for (std::size_t i = 0; i < set.size(); ++i)
    for (std::size_t j = i + 1; j < set.size(); ++j)
      if (!g.has_edge(set[i], set[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("build_graph fixtures") {
  DegreeGraph g1 = build_graph(DegreeSet({1, 3, 4, 5}));
  CHECK(g1.vertices() == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(g1.edge_count() == 0);

  DegreeGraph g2 = build_graph(DegreeSet({1, 3, 4, 5, 8, 12}));
  CHECK(g2.vertices() == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(g2.edges() == std::vector<Edge>{{2, 3}});

  DegreeGraph g3 = build_graph(DegreeSet({1}));
  CHECK(g3.vertex_count() == 0);
  CHECK(g3.edge_count() == 0);

  DegreeGraph g4 = build_graph(DegreeSet({1, 15, 28, 29, 30}));
  CHECK(g4.vertices() == std::vector<std::uint64_t>{2, 3, 5, 7, 29});
  CHECK(g4.edges() == std::vector<Edge>{{2, 3}, {2, 5}, {2, 7}, {3, 5}});
}

TEST_CASE("from_edges validation") {
  CHECK_THROWS_AS(DegreeGraph::from_edges({2, 4}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeGraph::from_edges({2, 3}, {{2, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(DegreeGraph::from_edges({2, 3}, {{2, 5}}), std::invalid_argument);

  // duplicate edges collapse
  DegreeGraph g = DegreeGraph::from_edges({2, 3}, {{2, 3}, {3, 2}});
  CHECK(g.edge_count() == 1);
}

TEST_CASE("has_edge") {
  DegreeGraph g = build_graph(DegreeSet({1, 15, 28, 29, 30}));
  CHECK(g.has_edge(2, 3));
  CHECK(g.has_edge(3, 2));
  CHECK_FALSE(g.has_edge(3, 7));
  CHECK_FALSE(g.has_edge(29, 29));
  CHECK_THROWS_AS(g.has_edge(2, 11), std::invalid_argument);
}

TEST_CASE("complement fixtures") {
  DegreeGraph g = build_graph(DegreeSet({1, 15, 28, 29, 30}));
  DegreeGraph c = complement(g);
  CHECK(c.edges() == std::vector<Edge>{{2, 29}, {3, 7}, {3, 29}, {5, 7}, {5, 29}, {7, 29}});
  CHECK(complement(c) == g);

  DegreeGraph complete = DegreeGraph::from_edges({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}});
  CHECK(complement(complete).edge_count() == 0);
}

TEST_CASE("is_bipartite fixtures") {
  DegreeGraph path = DegreeGraph::from_edges({2, 3, 5}, {{2, 3}, {3, 5}});
  BipartiteResult r = is_bipartite(path);
  REQUIRE(r.bipartite);
  CHECK(r.part_a == std::vector<std::uint64_t>{2, 5});
  CHECK(r.part_b == std::vector<std::uint64_t>{3});

  DegreeGraph tri = DegreeGraph::from_edges({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}});
  BipartiteResult s = is_bipartite(tri);
  REQUIRE_FALSE(s.bipartite);
  REQUIRE(s.odd_cycle.size() == 3);

  // complement of the PSL(2,29) graph holds the triangle 3,7,29
  DegreeGraph c = complement(build_graph(DegreeSet({1, 15, 28, 29, 30})));
  BipartiteResult t = is_bipartite(c);
  REQUIRE_FALSE(t.bipartite);
  REQUIRE(t.odd_cycle.size() % 2 == 1);
  for (std::size_t i = 0; i < t.odd_cycle.size(); ++i)
    CHECK(c.has_edge(t.odd_cycle[i], t.odd_cycle[(i + 1) % t.odd_cycle.size()]));
}

TEST_CASE("odd cycle witnesses on random graphs") {
  std::mt19937_64 rng(7291);
  for (int trial = 0; trial < 300; ++trial) {
    DegreeGraph g = random_graph(rng, 12);
    BipartiteResult r = is_bipartite(g);
    if (r.bipartite) {
      // no edge may join two vertices of one part
      for (const auto& part : {r.part_a, r.part_b})
        for (std::size_t i = 0; i < part.size(); ++i)
          for (std::size_t j = i + 1; j < part.size(); ++j)
            if (g.has_edge(part[i], part[j])) FAIL("edge within a color class");
    } else {
      REQUIRE(r.odd_cycle.size() >= 3);
      REQUIRE(r.odd_cycle.size() % 2 == 1);
      std::set<std::uint64_t> seen(r.odd_cycle.begin(), r.odd_cycle.end());
      CHECK(seen.size() == r.odd_cycle.size());
      for (std::size_t i = 0; i < r.odd_cycle.size(); ++i)
        if (!g.has_edge(r.odd_cycle[i], r.odd_cycle[(i + 1) % r.odd_cycle.size()]))
          FAIL("cycle edge missing");
    }
  }
}

TEST_CASE("two_clique_cover fixtures") {
  DegreeGraph complete = DegreeGraph::from_edges({2, 3, 5}, {{2, 3}, {2, 5}, {3, 5}});
  auto c0 = two_clique_cover(complete);
  REQUIRE(c0.has_value());
  CHECK(c0->part_a == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(c0->part_b.empty());

  CHECK_FALSE(two_clique_cover(build_graph(cd_psl2(4))).has_value());
  CHECK_FALSE(two_clique_cover(build_graph(cd_psl2(5))).has_value());
  CHECK_FALSE(two_clique_cover(build_graph(cd_psl2(8))).has_value());
  CHECK_FALSE(two_clique_cover(build_graph(cd_psl2(29))).has_value());
  CHECK_FALSE(two_clique_cover(build_graph(cd_psl2(13))).has_value());

  auto c7 = two_clique_cover(build_graph(cd_psl2(7)));
  REQUIRE(c7.has_value());
  CHECK(c7->part_a == std::vector<std::uint64_t>{2, 3});
  CHECK(c7->part_b == std::vector<std::uint64_t>{7});

  auto c9 = two_clique_cover(build_graph(cd_psl2(9)));
  REQUIRE(c9.has_value());

  auto csl5 = two_clique_cover(build_graph(cd_sl2(5)));
  REQUIRE(csl5.has_value());
}

TEST_CASE("two_clique_cover parts are cliques covering all vertices") {
  std::mt19937_64 rng(40961);
  for (int trial = 0; trial < 300; ++trial) {
    DegreeGraph g = random_graph(rng, 11);
    auto cover = two_clique_cover(g);
    CHECK(cover.has_value() == is_bipartite(complement(g)).bipartite);
    if (cover) {
      CHECK(is_clique(g, cover->part_a));
      CHECK(is_clique(g, cover->part_b));
      std::vector<std::uint64_t> all;
      std::merge(cover->part_a.begin(), cover->part_a.end(), cover->part_b.begin(),
                 cover->part_b.end(), std::back_inserter(all));
      CHECK(all == g.vertices());
    }
  }
}

TEST_CASE("connected_components fixtures") {
  CHECK(normalized(connected_components(build_graph(cd_psl2(8)))) ==
        normalized({{2}, {7}, {3}}));
  CHECK(normalized(connected_components(build_graph(cd_psl2(29)))) ==
        normalized({{29}, {2, 3, 5, 7}}));
  CHECK(normalized(connected_components(build_graph(cd_psl2(5)))) ==
        normalized({{2}, {3}, {5}}));
  CHECK(connected_components(build_graph(DegreeSet({1}))).empty());
}

TEST_CASE("components on complement representation") {
  // complemented storage comes out of join_product
  DegreeGraph g = join_product(build_graph(cd_psl2(29)), build_graph(cd_psl2(67)));
  CHECK(g.is_complemented());
  auto comps = connected_components(g);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0].size() == g.vertex_count());
}

TEST_CASE("max_clique fixtures") {
  MaxClique empty = max_clique(build_graph(DegreeSet({1})));
  CHECK(empty.size == 0);
  CHECK(empty.witness.empty());

  MaxClique m29 = max_clique(build_graph(cd_psl2(29)));
  CHECK(m29.size == 3);
  CHECK(m29.witness == std::vector<std::uint64_t>{2, 3, 5});
}

TEST_CASE("max_clique matches brute force on random graphs") {
  std::mt19937_64 rng(515151);
  for (int trial = 0; trial < 250; ++trial) {
    DegreeGraph g = random_graph(rng, 15);
    MaxClique m = max_clique(g);
    CHECK(is_clique(g, m.witness));
    CHECK(m.witness.size() == m.size);
    if (m.size != brute_clique(g)) FAIL("clique size mismatch on trial " << trial);
  }
}

TEST_CASE("join_product fixtures") {
  DegreeGraph empty = build_graph(DegreeSet({1}));
  DegreeGraph g29 = build_graph(cd_psl2(29));
  CHECK(join_product(empty, g29) == g29);
  CHECK(join_product(g29, empty) == g29);

  // join of the PSL(2,4) graph with itself: same vertices, all pairs joined
  DegreeGraph g4 = build_graph(cd_psl2(4));
  DegreeGraph k3 = join_product(g4, g4);
  CHECK(k3.vertices() == std::vector<std::uint64_t>{2, 3, 5});
  CHECK(k3.edge_count() == 3);
  CHECK(k3 == build_graph(product_degree_set(cd_psl2(4), cd_psl2(4))));

  DegreeGraph j = join_product(g29, build_graph(cd_psl2(67)));
  CHECK(j == build_graph(product_degree_set(cd_psl2(29), cd_psl2(67))));
  CHECK(j.vertex_count() == 8);
  CHECK(max_clique(j).size == 4);
}

TEST_CASE("join_product matches the product degree set on random pairs") {
  std::mt19937_64 rng(909090);
  std::uniform_int_distribution<std::uint64_t> deg(2, 300);
  std::uniform_int_distribution<std::size_t> count(1, 5);
  auto random_set = [&] {
    std::vector<std::uint64_t> v;
    for (std::size_t i = 0, n = count(rng); i < n; ++i) v.push_back(deg(rng));
    return DegreeSet(v);
  };
  for (int trial = 0; trial < 120; ++trial) {
    DegreeSet a = random_set(), b = random_set();
    DegreeGraph joined = join_product(build_graph(a), build_graph(b));
    DegreeGraph direct = build_graph(product_degree_set(a, b));
    if (!(joined == direct)) FAIL("join mismatch on trial " << trial);
  }
}

TEST_CASE("graph JSON round trip and DOT") {
  DegreeGraph g = build_graph(cd_psl2(7));
  CHECK(graph_to_json(g) == R"({"vertices":[2,3,7],"edges":[[2,3]]})");
  CHECK(graph_to_dot(g) == "graph G {\n  2;\n  3;\n  7;\n  2 -- 3;\n}");
  CHECK(graph_from_json(graph_to_json(g)) == g);

  DegreeGraph big = join_product(build_graph(cd_psl2(29)), build_graph(cd_psl2(67)));
  CHECK(graph_from_json(graph_to_json(big)) == big);

  CHECK_THROWS_AS(graph_from_json("not json"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":[2,3]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":[2,-3],"edges":[]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":[2,3],"edges":[[2]]})"), std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices":[2,4],"edges":[]})"), std::invalid_argument);
}
