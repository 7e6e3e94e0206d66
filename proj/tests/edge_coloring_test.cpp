#include "gclab/edge_coloring.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gclab/errors.hpp"
#include "gclab/families.hpp"
#include "gclab/line_graph.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

namespace gclab {
namespace {

int color_of_edge(const Graph& g, const EdgeColoring& c, Vertex u, Vertex v) {
  return c.color_of.at(g.edge_index(u, v));
}

Graph petersen() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({i, (i + 1) % 5});
    edges.push_back({i, i + 5});
    edges.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, edges);
}

TEST(CompleteTest, Examples) {
  const auto k4 = edge_color_complete(4);
  EXPECT_EQ(k4.num_colors, 3);
  EXPECT_TRUE(validate_edge_coloring(complete_graph(4), k4));
  // Each class of an even complete graph is a perfect matching.
  for (int c = 0; c < 3; ++c) EXPECT_EQ(std::count(k4.color_of.begin(), k4.color_of.end(), c), 2);

  const auto k3 = edge_color_complete(3);
  EXPECT_EQ(k3.num_colors, 3);
  EXPECT_TRUE(validate_edge_coloring(complete_graph(3), k3));

  EXPECT_EQ(edge_color_complete(2).num_colors, 1);
  EXPECT_THROW(edge_color_complete(1), DomainError);
}

TEST(CompleteTest, RoundRobinRule) {
  // n = 6: rounds mod 5; edge {i,j} with i,j < 5 is in round r where
  // i + j = 2r (mod 5), edge {r,5} in round r.
  const Graph g = complete_graph(6);
  const auto c = edge_color_complete(6);
  for (const auto& e : g.edges()) {
    const int r = color_of_edge(g, c, e.u, e.v);
    if (e.v == 5) {
      EXPECT_EQ(r, e.u);
    } else {
      EXPECT_EQ((e.u + e.v) % 5, (2 * r) % 5);
    }
  }
}

TEST(CompleteTest, SweepColorCounts) {
  for (int n = 2; n <= 12; ++n) {
    const auto c = edge_color_complete(n);
    EXPECT_TRUE(validate_edge_coloring(complete_graph(n), c)) << n;
    EXPECT_EQ(c.num_colors, n % 2 == 0 ? n - 1 : n) << n;
  }
}

TEST(KonigTest, Examples) {
  const Graph k23 = generate({Family::kCompleteBipartite, {2, 3}});
  auto c = edge_color_bipartite_konig(k23);
  EXPECT_EQ(c.num_colors, 3);
  EXPECT_TRUE(validate_edge_coloring(k23, c));

  c = edge_color_bipartite_konig(path_graph(4));
  EXPECT_EQ(c.num_colors, 2);

  const Graph b23 = generate({Family::kBistar, {2, 3}});
  c = edge_color_bipartite_konig(b23);
  EXPECT_EQ(c.num_colors, 4);
  EXPECT_TRUE(validate_edge_coloring(b23, c));
}

TEST(KonigTest, Errors) {
  EXPECT_THROW(edge_color_bipartite_konig(cycle_graph(5)), DomainError);
  EXPECT_THROW(edge_color_bipartite_konig(Graph::empty(4)), DomainError);
}

TEST(KonigTest, ExactlyMaxDegreeOnRandomBipartite) {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_bipartite(rng);
    const auto c = edge_color_bipartite_konig(g);
    ASSERT_TRUE(validate_edge_coloring(g, c)) << to_edge_list(g);
    ASSERT_EQ(c.num_colors, max_degree(g));
  }
}

TEST(WheelTest, Examples) {
  const auto w4 = edge_color_wheel(4);
  EXPECT_EQ(w4.num_colors, 3);
  EXPECT_TRUE(validate_edge_coloring(complete_graph(4), w4));
  // Rim vertices u_0, u_1 are graph vertices 1, 2.
  EXPECT_EQ(color_of_edge(complete_graph(4), w4, 1, 2), 2);

  const auto w7 = edge_color_wheel(7);
  EXPECT_EQ(w7.num_colors, 6);
  EXPECT_TRUE(validate_edge_coloring(generate({Family::kWheel, {7}}), w7));
  EXPECT_THROW(edge_color_wheel(3), DomainError);
}

TEST(HelmTest, Examples) {
  for (int n : {4, 5}) {
    const auto c = edge_color_helm(n);
    EXPECT_EQ(c.num_colors, n);
    EXPECT_TRUE(validate_edge_coloring(generate({Family::kHelm, {n}}), c));
  }
  EXPECT_THROW(edge_color_helm(2), DomainError);
}

TEST(HelmTest, ThreeIsInfeasibleWithExactValue) {
  try {
    edge_color_helm(3);
    FAIL() << "expected ConstructionInfeasible";
  } catch (const ConstructionInfeasible& e) {
    EXPECT_EQ(e.exact_chromatic_index(), 4);
    EXPECT_EQ(oracle::chromatic_index(generate({Family::kHelm, {3}})), 4);
  }
}

TEST(FanTest, Examples) {
  for (int n : {3, 4}) {
    const auto c = edge_color_fan(n);
    EXPECT_EQ(c.num_colors, n);
    EXPECT_TRUE(validate_edge_coloring(generate({Family::kFan, {n}}), c));
  }
  EXPECT_THROW(edge_color_fan(1), DomainError);
}

TEST(FanTest, TwoIsInfeasibleWithExactValue) {
  try {
    edge_color_fan(2);
    FAIL() << "expected ConstructionInfeasible";
  } catch (const ConstructionInfeasible& e) {
    EXPECT_EQ(e.exact_chromatic_index(), 3);
    EXPECT_EQ(oracle::chromatic_index(complete_graph(3)), 3);
  }
}

TEST(ConstructionsTest, SweepUpToTwelve) {
  for (int n = 4; n <= 12; ++n) {
    const auto w = edge_color_wheel(n);
    EXPECT_TRUE(validate_edge_coloring(generate({Family::kWheel, {n}}), w));
    EXPECT_EQ(w.num_colors, n - 1);
    const auto h = edge_color_helm(n);
    EXPECT_TRUE(validate_edge_coloring(generate({Family::kHelm, {n}}), h));
    EXPECT_EQ(h.num_colors, n);
  }
  for (int n = 3; n <= 12; ++n) {
    const auto f = edge_color_fan(n);
    EXPECT_TRUE(validate_edge_coloring(generate({Family::kFan, {n}}), f));
    EXPECT_EQ(f.num_colors, n);
  }
}

TEST(ConstructionsTest, AgreeWithExactSolver) {
  for (int n = 4; n <= 9; ++n) {
    EXPECT_EQ(edge_color_wheel(n).num_colors,
              chromatic_index(generate({Family::kWheel, {n}})).value);
  }
  for (int n = 4; n <= 8; ++n) {
    EXPECT_EQ(edge_color_helm(n).num_colors, chromatic_index(generate({Family::kHelm, {n}})).value);
  }
  for (int n = 3; n <= 9; ++n) {
    EXPECT_EQ(edge_color_fan(n).num_colors, chromatic_index(generate({Family::kFan, {n}})).value);
  }
}

TEST(MisraGriesTest, Examples) {
  const Graph p = petersen();
  ASSERT_EQ(max_degree(p), 3);
  const auto c = edge_color_misra_gries(p);
  EXPECT_TRUE(validate_edge_coloring(p, c));
  EXPECT_LE(c.num_colors, 4);

  EXPECT_EQ(edge_color_misra_gries(cycle_graph(4)).num_colors, 2);
  EXPECT_EQ(edge_color_misra_gries(complete_graph(2)).num_colors, 1);
  EXPECT_THROW(edge_color_misra_gries(Graph::empty(2)), DomainError);
}

TEST(MisraGriesTest, AtMostDeltaPlusOneExhaustiveSmall) {
  for (int order = 2; order <= 6; ++order) {
    for (std::uint64_t mask = 1; mask < oracle::graph_count(order); ++mask) {
      const Graph g = graph_from_mask(order, mask);
      const auto c = edge_color_misra_gries(g);
      ASSERT_TRUE(validate_edge_coloring(g, c)) << to_edge_list(g);
      ASSERT_LE(c.num_colors, max_degree(g) + 1);
    }
  }
}

TEST(MisraGriesTest, AtMostDeltaPlusOneOnRandomGraphs) {
  std::mt19937_64 rng(777);
  for (int i = 0; i < 200; ++i) {
    const Graph g = testing::random_graph(rng);
    const auto c = edge_color_misra_gries(g);
    ASSERT_TRUE(validate_edge_coloring(g, c)) << to_edge_list(g);
    ASSERT_LE(c.num_colors, max_degree(g) + 1);
  }
}

TEST(MisraGriesTest, Deterministic) {
  const Graph g = petersen();
  EXPECT_EQ(edge_color_misra_gries(g), edge_color_misra_gries(g));
}

}  // namespace
}  // namespace gclab
