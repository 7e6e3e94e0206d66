#pragma once

#include <algorithm>
#include <random>

#include "gclab/graph.hpp"

namespace gclab::testing {

// Bipartite graph on 2..20 vertices with a random side split and edge
// density; always has at least one edge.
inline Graph random_bipartite(std::mt19937_64& rng) {
  const int order = std::uniform_int_distribution<int>(2, 20)(rng);
  const int left = std::uniform_int_distribution<int>(1, order - 1)(rng);
  const double p = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
  std::bernoulli_distribution keep(p);
  // Shuffle labels so sides are not contiguous ranges.
  std::vector<Vertex> label(order);
  for (int i = 0; i < order; ++i) label[i] = i;
  std::shuffle(label.begin(), label.end(), rng);
  std::vector<Edge> edges;
  for (int x = 0; x < left; ++x) {
    for (int y = left; y < order; ++y) {
      if (keep(rng)) edges.push_back({label[x], label[y]});
    }
  }
  if (edges.empty()) edges.push_back({label[0], label[left]});
  return Graph(order, std::move(edges));
}

// G(n, p) with n in 2..20 and p drawn per graph; at least one edge.
inline Graph random_graph(std::mt19937_64& rng) {
  const int order = std::uniform_int_distribution<int>(2, 20)(rng);
  const double p = std::uniform_real_distribution<double>(0.05, 1.0)(rng);
  std::bernoulli_distribution keep(p);
  std::vector<Edge> edges;
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) {
      if (keep(rng)) edges.push_back({u, v});
    }
  }
  if (edges.empty()) edges.push_back({0, 1});
  return Graph(order, std::move(edges));
}

}  // namespace gclab::testing
