#include "gclab/nordhaus_gaddum.hpp"

#include <gtest/gtest.h>

#include <set>

#include "gclab/errors.hpp"
#include "gclab/families.hpp"
#include "oracles.hpp"

namespace gclab {
namespace {

TEST(NgCheckTest, FiveCycleIsTightAbove) {
  const auto r = ng_check(cycle_graph(5));
  EXPECT_EQ(r.chi, 3);
  EXPECT_EQ(r.chi_comp, 3);
  EXPECT_EQ(r.sum, 6);
  EXPECT_EQ(r.product, 9);
  EXPECT_TRUE(r.all_ok());
  EXPECT_EQ(r.sum, r.order + 1);
  EXPECT_EQ(4 * r.product, (r.order + 1) * (r.order + 1));
}

TEST(NgCheckTest, CompleteGraph) {
  const auto r = ng_check(complete_graph(6));
  EXPECT_EQ(r.chi, 6);
  EXPECT_EQ(r.chi_comp, 1);
  EXPECT_EQ(r.sum, 7);
  EXPECT_TRUE(r.all_ok());
}

TEST(NgCheckTest, PathFourIsTightBelow) {
  const auto r = ng_check(path_graph(4));
  EXPECT_EQ(r.chi, 2);
  EXPECT_EQ(r.chi_comp, 2);
  EXPECT_EQ(r.sum * r.sum, 4 * r.order);
  EXPECT_EQ(r.product, r.order);
  EXPECT_TRUE(r.all_ok());
}

TEST(NgCheckTest, OrderZeroIsDomainError) {
  EXPECT_THROW(ng_check(Graph::empty(0)), DomainError);
}

TEST(NgCheckTest, AllBoundsHoldExhaustiveToFive) {
  for (int order = 1; order <= 5; ++order) {
    for (std::uint64_t mask = 0; mask < oracle::graph_count(order); ++mask) {
      ASSERT_TRUE(ng_check(graph_from_mask(order, mask)).all_ok());
    }
  }
}

TEST(NgFeasibleTest, Examples) {
  EXPECT_TRUE(ng_feasible(5, 3, 3));
  EXPECT_FALSE(ng_feasible(5, 2, 2));
  EXPECT_TRUE(ng_feasible(4, 2, 2));
  EXPECT_FALSE(ng_feasible(0, 1, 1));
  EXPECT_FALSE(ng_feasible(3, 0, 4));
}

TEST(NgFeasibleTest, ImpliedInequalitiesHold) {
  // a+b <= n+1 and ab >= n imply (a+b)^2 >= 4n and 4ab <= (n+1)^2.
  for (long long n = 1; n <= 40; ++n) {
    for (long long a = 1; a <= n + 1; ++a) {
      for (long long b = 1; b <= n + 1; ++b) {
        if (!ng_feasible(n, a, b)) continue;
        ASSERT_GE((a + b) * (a + b), 4 * n);
        ASSERT_LE(4 * a * b, (n + 1) * (n + 1));
      }
    }
  }
}

std::multiset<int> component_sizes(const Graph& g) {
  std::multiset<int> sizes;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    int size = 0;
    std::vector<Vertex> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      ++size;
      for (Vertex w : g.neighbors(v)) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    sizes.insert(size);
  }
  return sizes;
}

TEST(NgConstructTest, Examples) {
  const Graph g = ng_construct(5, 3, 3);
  EXPECT_EQ(component_sizes(g), (std::multiset<int>{3, 1, 1}));
  EXPECT_EQ(oracle::chromatic_number(g), 3);
  EXPECT_EQ(oracle::chromatic_number(complement(g)), 3);

  const Graph h = ng_construct(4, 2, 2);
  EXPECT_EQ(h, Graph(4, {{0, 1}, {2, 3}}));
  EXPECT_EQ(complement(h).edge_count(), 4u);
  EXPECT_EQ(oracle::chromatic_number(complement(h)), 2);

  EXPECT_EQ(ng_construct(6, 6, 1), complete_graph(6));
}

TEST(NgConstructTest, InfeasibleNamesInequality) {
  try {
    ng_construct(5, 2, 2);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("a * b >= n"), std::string::npos) << e.what();
  }
  try {
    ng_construct(4, 3, 3);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("a + b <= n + 1"), std::string::npos) << e.what();
  }
  EXPECT_THROW(ng_construct(0, 1, 1), DomainError);
}

TEST(NgConstructTest, RealizesEveryFeasiblePairToEight) {
  for (int n = 1; n <= 8; ++n) {
    for (int a = 1; a <= n; ++a) {
      for (int b = 1; b <= n; ++b) {
        if (!ng_feasible(n, a, b)) continue;
        const Graph g = ng_construct(n, a, b);
        ASSERT_EQ(g.order(), n);
        ASSERT_EQ(chromatic_number(g).value, a) << n << " " << a << " " << b;
        ASSERT_EQ(chromatic_number(complement(g)).value, b) << n << " " << a << " " << b;
      }
    }
  }
}

}  // namespace
}  // namespace gclab
