#include <gtest/gtest.h>

#include <algorithm>

#include "rrlat/graph.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace rrlat;
using namespace rrlat::testing;

TEST(Graph, LaplacianRows) {
  auto rows = laplacian_lattice(k3()).rows();
  EXPECT_EQ(rows, (std::vector<Divisor>{{2, -1, -1}, {-1, 2, -1}}));
  EXPECT_EQ(laplacian_lattice(weighted_triangle()).rows(),
            (std::vector<Divisor>{{5, -3, -2}, {-3, 5, -2}}));
  EXPECT_EQ(laplacian_lattice(path3()).rows(), (std::vector<Divisor>{{1, -1, 0}, {-1, 2, -1}}));
}

TEST(Graph, WeightedTriangleGenerators) {
  auto L = laplacian_lattice(weighted_triangle());
  EXPECT_TRUE(L.contains(Divisor{-5, 3, 2}));
  EXPECT_TRUE(L.contains(Divisor{3, -5, 2}));
  EXPECT_TRUE(L.same_lattice(LatticeBasis({Divisor{-5, 3, 2}, Divisor{3, -5, 2}})));
}

TEST(Graph, RejectsDisconnectedAndLoops) {
  EXPECT_THROW(Multigraph(4, {{0, 1, 1}, {2, 3, 1}}), InvalidInput);
  EXPECT_THROW(Multigraph(2, {{0, 0, 1}, {0, 1, 1}}), InvalidInput);
  EXPECT_THROW(Multigraph(1, {}), InvalidInput);
  EXPECT_THROW(RegularDigraph(3, {{0, 1, 1}, {1, 2, 1}}), InvalidInput);
}

TEST(Graph, CanonicalDivisor) {
  EXPECT_EQ(canonical_divisor(k3()), (Divisor{0, 0, 0}));
  EXPECT_EQ(canonical_divisor(weighted_triangle()), (Divisor{3, 3, 2}));
  EXPECT_EQ(canonical_divisor(path3()), (Divisor{-1, 0, -1}));
}

TEST(Graph, Genus) {
  EXPECT_EQ(k3().genus(), 1);
  EXPECT_EQ(weighted_triangle().genus(), 5);
  EXPECT_EQ(path3().genus(), 0);
}

TEST(Graph, SpanningTrees) {
  EXPECT_EQ(spanning_tree_count(k3()), 3);
  EXPECT_EQ(spanning_tree_count(weighted_triangle()), 16);
  EXPECT_EQ(spanning_tree_count(path3()), 1);
  EXPECT_EQ(spanning_tree_count(complete(5)), 125);
}

TEST(Graph, AcyclicOrientations) {
  EXPECT_EQ(acyclic_orientations_unique_source(k3(), 0), 2);
  EXPECT_EQ(acyclic_orientations_unique_source(path3(), 0), 1);
  EXPECT_EQ(acyclic_orientations_unique_source(complete(4), 0), 6);
  // Parallel edges collapse.
  EXPECT_EQ(acyclic_orientations_unique_source(weighted_triangle(), 0), 2);
}

TEST(Graph, CyclicOrders) {
  EXPECT_EQ(cyclic_order_count(k3()), 2);
  EXPECT_EQ(cyclic_order_count(path3()), 1);
  EXPECT_EQ(cyclic_order_count(complete(4)), 6);
  EXPECT_EQ(cyclic_order_count(complete(5)), 24);
  EXPECT_EQ(cyclic_order_count(weighted_triangle()), 2);
}

TEST(Graph, ParseJsonAndLines) {
  auto g = parse_graph(R"({"vertices": 3, "edges": [[0,1,3],[0,2,2],[1,2,2]]})");
  EXPECT_EQ(g.mult(0, 1), 3);
  EXPECT_EQ(g.mult(2, 1), 2);
  auto h = parse_graph("3\n0 1\n1 2 1\n0 2\n");
  EXPECT_EQ(h.edge_count(), 3);
  auto again = parse_graph(graph_to_json(g));
  EXPECT_EQ(again.edges(), g.edges());
  EXPECT_THROW(parse_graph(R"({"vertices": 3, "edges": [[0,1]]})"), InvalidInput);
  EXPECT_THROW(parse_graph(R"({"vertices": 3, "edges": [[0,"a"]]})"), InvalidInput);
  EXPECT_THROW(parse_graph("{oops"), InvalidInput);
}

TEST(Graph, DigraphFromJson) {
  auto d = parse_digraph(R"({"vertices": 3, "arcs": [[0,1,1],[1,2,1],[2,0,1]]})");
  EXPECT_EQ(d.arc(0, 1), 1);
  EXPECT_EQ(d.arc(1, 0), 0);
  EXPECT_EQ(d.arc_count(), 3);
}

TEST(GraphProperty, LaplacianConditions) {
  for (const auto& [name, g] : graph_corpus()) {
    auto q = laplacian_matrix(g);
    const std::size_t v = g.vertex_count();
    for (std::size_t i = 0; i < v; ++i) {
      EXPECT_EQ(degree(q[i]), 0) << name;
      EXPECT_EQ(q[i][i], g.degree(i)) << name;
      for (std::size_t j = 0; j < v; ++j) {
        EXPECT_EQ(q[i][j], q[j][i]) << name;
        if (i != j) EXPECT_LE(q[i][j], 0) << name;
      }
    }
  }
}

TEST(GraphProperty, DigraphColumnSums) {
  Rng rng(41);
  for (int it = 0; it < 50; ++it) {
    // Union of random directed cycles is always regular.
    std::size_t v = static_cast<std::size_t>(uniform_int(rng, 2, 5));
    std::vector<std::vector<std::int64_t>> arc(v, std::vector<std::int64_t>(v, 0));
    for (std::size_t i = 0; i < v; ++i) ++arc[i][(i + 1) % v];
    for (int c = 0; c < 3; ++c) {
      std::vector<std::size_t> perm(v);
      for (std::size_t i = 0; i < v; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::size_t len = static_cast<std::size_t>(uniform_int(rng, 2, static_cast<long>(v)));
      for (std::size_t k = 0; k < len; ++k) ++arc[perm[k]][perm[(k + 1) % len]];
    }
    std::vector<Edge> arcs;
    for (std::size_t i = 0; i < v; ++i) {
      for (std::size_t j = 0; j < v; ++j) {
        if (i != j && arc[i][j] > 0) arcs.emplace_back(i, j, arc[i][j]);
      }
    }
    RegularDigraph d(v, arcs);
    auto q = laplacian_matrix(d);
    for (std::size_t j = 0; j < v; ++j) {
      Integer col = 0;
      for (std::size_t i = 0; i < v; ++i) col += q[i][j];
      EXPECT_EQ(col, 0);
      EXPECT_EQ(degree(q[j]), 0);
    }
  }
}

TEST(GraphProperty, SpanningTreesMatchPicard) {
  for (const auto& [name, g] : graph_corpus()) {
    auto trees = spanning_tree_count(g);
    EXPECT_EQ(trees, picard_cardinality(laplacian_lattice(g))) << name;
    EXPECT_EQ(trees, oracle_spanning_trees(g)) << name;
  }
}

TEST(GraphProperty, CyclicOrdersMatchOrientations) {
  for (const auto& [name, g] : graph_corpus()) {
    EXPECT_EQ(cyclic_order_count(g), acyclic_orientations_unique_source(g, 0)) << name;
  }
}

TEST(GraphCorpus, SimpleGraphCounts) {
  std::size_t per[6] = {0, 0, 0, 0, 0, 0};
  for (const auto& [name, g] : connected_simple_graphs(5)) ++per[g.vertex_count()];
  EXPECT_EQ(per[2], 1u);
  EXPECT_EQ(per[3], 2u);
  EXPECT_EQ(per[4], 6u);
  EXPECT_EQ(per[5], 21u);
}
