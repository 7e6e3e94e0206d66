#include "gclab/families.hpp"

#include <gtest/gtest.h>

#include "gclab/errors.hpp"

namespace gclab {
namespace {

std::size_t edges_of(Family f, std::vector<int> params) {
  return generate({f, std::move(params)}).edge_count();
}

TEST(FamiliesTest, SmallMembers) {
  const Graph w5 = generate({Family::kWheel, {5}});
  EXPECT_EQ(w5.order(), 5);
  EXPECT_EQ(w5.edge_count(), 8u);

  const Graph h3 = generate({Family::kHelm, {3}});
  EXPECT_EQ(h3.order(), 7);
  EXPECT_EQ(h3.edge_count(), 9u);

  const Graph b23 = generate({Family::kBistar, {2, 3}});
  EXPECT_EQ(b23.order(), 7);
  EXPECT_EQ(b23.edge_count(), 6u);
}

TEST(FamiliesTest, DomainErrorsNameTheBound) {
  try {
    generate({Family::kCycle, {2}});
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find(">= 3"), std::string::npos) << e.what();
  }
  EXPECT_THROW(generate({Family::kWheel, {3}}), DomainError);
  EXPECT_THROW(generate({Family::kHelm, {2}}), DomainError);
  EXPECT_THROW(generate({Family::kFan, {1}}), DomainError);
  EXPECT_THROW(generate({Family::kCompleteBipartite, {0, 2}}), DomainError);
  EXPECT_THROW(generate({Family::kBistar, {1, 0}}), DomainError);
  EXPECT_THROW(generate({Family::kComplete, {0}}), DomainError);
  EXPECT_THROW(generate({Family::kComplete, {2, 2}}), DomainError);
  EXPECT_THROW(generate({Family::kBistar, {2}}), DomainError);
}

TEST(FamiliesTest, ClosedFormCounts) {
  for (int n = 1; n <= 10; ++n) {
    if (n >= 4) {
      const Graph w = generate({Family::kWheel, {n}});
      EXPECT_EQ(w.order(), n);
      EXPECT_EQ(w.edge_count(), static_cast<std::size_t>(2 * (n - 1)));
    }
    if (n >= 3) {
      const Graph h = generate({Family::kHelm, {n}});
      EXPECT_EQ(h.order(), 2 * n + 1);
      EXPECT_EQ(h.edge_count(), static_cast<std::size_t>(3 * n));
    }
    if (n >= 2) {
      const Graph f = generate({Family::kFan, {n}});
      EXPECT_EQ(f.order(), n + 1);
      EXPECT_EQ(f.edge_count(), static_cast<std::size_t>(2 * n - 1));
    }
    EXPECT_EQ(edges_of(Family::kComplete, {n}), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(edges_of(Family::kPath, {n}), static_cast<std::size_t>(n - 1));
    for (int m = 1; m <= 10; ++m) {
      const Graph b = generate({Family::kBistar, {m, n}});
      EXPECT_EQ(b.order(), m + n + 2);
      EXPECT_EQ(b.edge_count(), static_cast<std::size_t>(m + n + 1));
      EXPECT_EQ(edges_of(Family::kCompleteBipartite, {m, n}), static_cast<std::size_t>(m * n));
    }
  }
}

TEST(FamiliesTest, StarIsCompleteBipartiteOneN) {
  for (int n = 1; n <= 10; ++n) {
    EXPECT_EQ(generate({Family::kStar, {n}}), generate({Family::kCompleteBipartite, {1, n}}));
  }
}

TEST(FamiliesTest, HelmRestrictedToWheelPart) {
  for (int n = 3; n <= 10; ++n) {
    const Graph h = generate({Family::kHelm, {n}});
    std::vector<Edge> inner;
    for (const auto& e : h.edges()) {
      if (e.v <= n) inner.push_back(e);
    }
    EXPECT_EQ(Graph(n + 1, inner), generate({Family::kWheel, {n + 1}}));
  }
}

TEST(FamiliesTest, WheelFourIsK4) {
  EXPECT_EQ(generate({Family::kWheel, {4}}), complete_graph(4));
}

TEST(FamiliesTest, Labelings) {
  // bistar(2,3): u=0, v=1, pendants 2,3 at u and 4,5,6 at v.
  EXPECT_EQ(generate({Family::kBistar, {2, 3}}),
            Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {1, 6}}));
  // helm(3): rim 1..3, pendant 3+i on rim i.
  const Graph h3 = generate({Family::kHelm, {3}});
  EXPECT_TRUE(h3.has_edge(1, 4));
  EXPECT_TRUE(h3.has_edge(2, 5));
  EXPECT_TRUE(h3.has_edge(3, 6));
  EXPECT_TRUE(h3.has_edge(1, 3));
  // fan(3): hub 0 over path 1-2-3.
  EXPECT_EQ(generate({Family::kFan, {3}}),
            Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}}));
}

TEST(FamiliesTest, NamesRoundTrip) {
  for (Family f : kAllFamilies) EXPECT_EQ(family_from_name(family_name(f)), f);
  EXPECT_FALSE(family_from_name("gear"));
  EXPECT_EQ((FamilySpec{Family::kBistar, {2, 3}}.label()), "bistar(2,3)");
}

}  // namespace
}  // namespace gclab
