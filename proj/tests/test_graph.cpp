#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "brute_force.hpp"
#include "eqlab/graph.hpp"
#include "named_graphs.hpp"

using namespace eqlab;

TEST_CASE("new_graph builds exactly the listed edges", "[graph]") {
  const Graph c4 = new_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.edge_count() == 4);
  CHECK(c4.has_edge(3, 0));
  CHECK(c4.has_edge(0, 3));
  CHECK_FALSE(c4.has_edge(0, 2));
  CHECK(c4 == named::cycle(4));

  const Graph two_k1 = new_graph(2, {});
  CHECK(two_k1.order() == 2);
  CHECK(two_k1.edge_count() == 0);

  CHECK(new_graph(4, {{0, 1}, {0, 1}}).edge_count() == 1);
  CHECK(new_graph(4, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("new_graph rejects bad input", "[graph][errors]") {
  CHECK_THROWS_AS(new_graph(65, {}), CapacityError);
  CHECK_THROWS_AS(new_graph(3, {{1, 1}}), ValidationError);
  CHECK_THROWS_AS(new_graph(3, {{0, 3}}), ValidationError);
  CHECK_NOTHROW(new_graph(64, {{0, 63}}));

  const std::vector<Word> asymmetric{0b10, 0b00};
  CHECK_THROWS_AS(graph_from_adjacency(asymmetric), ValidationError);
  const std::vector<Word> looped{0b01};
  CHECK_THROWS_AS(graph_from_adjacency(looped), ValidationError);
  const std::vector<Word> out_of_range{0b100, 0b000};
  CHECK_THROWS_AS(graph_from_adjacency(out_of_range), ValidationError);
}

TEST_CASE("complement examples", "[graph]") {
  CHECK(complement(named::cycle(4)) == new_graph(4, {{0, 2}, {1, 3}}));

  Graph two_k4(8);
  for (Vertex base : {0U, 4U}) {
    for (Vertex i = 0; i < 4; ++i) {
      for (Vertex j = i + 1; j < 4; ++j) two_k4.add_edge(base + i, base + j);
    }
  }
  CHECK(complement(two_k4) == named::complete_bipartite(4, 4));

  const Graph two_c4 = disjoint_union(named::cycle(4), named::cycle(4));
  const Graph k8_minus = complement(two_c4);
  CHECK(complement(k8_minus) == two_c4);
  CHECK(regular_degree(k8_minus) == 5U);
}

TEST_CASE("complement is an involution", "[graph][property]") {
  for (unsigned order = 0; order <= 6; ++order) {
    for (const auto& [form, g] : brute::naive_catalog(order)) CHECK(complement(complement(g)) == g);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = brute::random_graph(7 + i % 2, 0.5, rng);
    REQUIRE(complement(complement(g)) == g);
    for (Vertex v = 0; v < g.order(); ++v) REQUIRE(g.degree(v) + complement(g).degree(v) == g.order() - 1);
  }
}

TEST_CASE("induced_subgraph relabels by ascending position", "[graph]") {
  const Graph p3 = induced_subgraph(named::cycle(4), VertexSet({0, 1, 2}, 4));
  CHECK(p3 == named::path(3));
  CHECK(degree_sequence(p3).degrees == std::vector<unsigned>{2, 1, 1});

  CHECK(induced_subgraph(named::cycle(8), VertexSet({0, 2, 4, 6}, 8)).edge_count() == 0);
  CHECK(induced_subgraph(named::crown(3), VertexSet({0, 1, 2}, 6)) == Graph(3));

  CHECK_THROWS_AS(induced_subgraph(named::cycle(4), VertexSet({5}, 6)), ValidationError);
}

TEST_CASE("degree_sequence and regular_degree", "[graph]") {
  CHECK(degree_sequence(named::cycle(4)).degrees == std::vector<unsigned>{2, 2, 2, 2});
  CHECK(degree_sequence(named::path(4)).degrees == std::vector<unsigned>{2, 2, 1, 1});
  const Graph k8_minus_2c4 = complement(disjoint_union(named::cycle(4), named::cycle(4)));
  CHECK(degree_sequence(k8_minus_2c4).degrees == std::vector<unsigned>(8, 5));

  CHECK(regular_degree(named::crown(4)) == 3U);
  CHECK_FALSE(regular_degree(named::path(4)).has_value());
  CHECK(regular_degree(Graph(0)) == 0U);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const Graph g = brute::random_graph(9, 0.4, rng);
    CHECK(degree_sequence(g).sum() == 2 * g.edge_count());
  }
}

TEST_CASE("connected_components ordering", "[graph]") {
  const auto two_c4 = connected_components(disjoint_union(named::cycle(4), named::cycle(4)));
  REQUIRE(two_c4.size() == 2);
  CHECK(two_c4[0] == VertexSet({0, 1, 2, 3}, 8));
  CHECK(two_c4[1] == VertexSet({4, 5, 6, 7}, 8));

  CHECK(connected_components(named::cycle(6)).size() == 1);

  const auto singles = connected_components(Graph(4));
  REQUIRE(singles.size() == 4);
  for (Vertex v = 0; v < 4; ++v) CHECK(singles[v] == VertexSet({v}, 4));

  // K1 + K3: the triangle comes first despite holding the larger indices.
  const auto mixed = connected_components(new_graph(4, {{1, 2}, {2, 3}, {3, 1}}));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == VertexSet({1, 2, 3}, 4));
  CHECK(mixed[1] == VertexSet({0}, 4));
}

TEST_CASE("closed_neighborhood and far_set", "[graph]") {
  CHECK(closed_neighborhood(named::cycle(4), 0) == VertexSet({0, 1, 3}, 4));
  CHECK(closed_neighborhood(named::complete(4), 2) == VertexSet::all(4));
  CHECK(closed_neighborhood(Graph(6), 0) == VertexSet({0}, 6));
  CHECK_THROWS_AS(closed_neighborhood(named::cycle(4), 4), ValidationError);

  CHECK(far_set(named::crown(3), 0) == VertexSet({3}, 6));
  CHECK(far_set(named::complete(6), 1).empty());

  Graph two_k4(8);
  for (Vertex base : {0U, 4U}) {
    for (Vertex i = 0; i < 4; ++i) {
      for (Vertex j = i + 1; j < 4; ++j) two_k4.add_edge(base + i, base + j);
    }
  }
  CHECK(far_set(two_k4, 1) == VertexSet({4, 5, 6, 7}, 8));
  CHECK_THROWS_AS(far_set(two_k4, 8), ValidationError);
}

TEST_CASE("far_set excludes the vertex and its neighbours", "[graph][property]") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Graph g = brute::random_graph(10, 0.25, rng);
    for (Vertex v = 0; v < g.order(); ++v) {
      const VertexSet f = far_set(g, v);
      CHECK_FALSE(f.contains(v));
      CHECK((f.bits() & g.adj(v)) == 0);
    }
  }
}

TEST_CASE("crown graphs: distinct neighbourhoods and one far vertex", "[graph][property]") {
  for (unsigned n = 2; n <= 8; ++n) {
    const Graph g = named::crown(n);
    const unsigned k = *regular_degree(g);
    REQUIRE(k == n - 1);
    for (Vertex u = 0; u < g.order(); ++u) {
      for (Vertex v = u + 1; v < g.order(); ++v) CHECK(g.adj(u) != g.adj(v));
      if (n >= 3) {
        // Connected with 1 < k: exactly n - k far vertices, the matching partner.
        CHECK(far_set(g, u).size() == n - k);
        CHECK(far_set(g, u) == VertexSet({u < n ? u + n : u - n}, g.order()));
      } else {
        // The n = 2 crown is 2K2: the other edge is entirely far.
        CHECK(far_set(g, u).size() == 2);
      }
    }
  }
}

TEST_CASE("VertexSet basics", "[graph]") {
  const VertexSet a({0, 1, 2, 5}, 8);
  CHECK(a.size() == 4);
  CHECK(a.to_string() == "{0,1,2,5}");
  CHECK(a.complement() == VertexSet({3, 4, 6, 7}, 8));
  CHECK(VertexSet({0, 1, 3}, 8).lex_less(VertexSet({0, 2}, 8)));
  CHECK_THROWS_AS(VertexSet({8}, 8), ValidationError);
  CHECK_THROWS_AS(VertexSet(Word{1} << 9, 8), ValidationError);
}
