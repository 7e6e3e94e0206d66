#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

struct VertexColoring {
  std::vector<int> color_of;  // indexed by vertex
  int num_colors = 0;

  friend bool operator==(const VertexColoring&, const VertexColoring&) = default;
};

// color_of is indexed by edge index, i.e. aligned with Graph::edges().
struct EdgeColoring {
  std::vector<int> color_of;
  int num_colors = 0;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;
};

struct SolverOptions {
  // Search nodes per is_k_colorable call before BudgetExceeded is thrown.
  std::uint64_t node_budget = 20'000'000;
};

// Proper, every color index in [0, num_colors), every index actually used.
bool validate_vertex_coloring(const Graph& g, const VertexColoring& c);
bool validate_edge_coloring(const Graph& g, const EdgeColoring& c);

// Clique grown from the max-degree vertex, extended each step by the
// candidate of highest degree (ties to lowest index). 0 for the empty graph.
int greedy_clique_lower_bound(const Graph& g);

// Exact decision by DSATUR-ordered backtracking: pick the uncolored vertex of
// highest saturation, then highest degree, then lowest index; try colors in
// ascending order, never opening more than one new color at a time. The
// witness uses at most k colors and is deterministic.
std::optional<VertexColoring> is_k_colorable(const Graph& g, int k, const SolverOptions& opts = {});

struct ChromaticNumberResult {
  int value = 0;
  VertexColoring witness;
};

// Tries k = max(lower_bound, clique bound) upward. lower_bound must be a
// valid lower bound on the chromatic number.
ChromaticNumberResult chromatic_number(const Graph& g, const SolverOptions& opts = {},
                                       int lower_bound = 0);

struct ChromaticIndexResult {
  int value = 0;
  EdgeColoring witness;
};

// Chromatic number of the line graph, started at the max degree. The
// line-graph vertex coloring is the edge coloring. Throws DomainError when g
// has no edges.
ChromaticIndexResult chromatic_index(const Graph& g, const SolverOptions& opts = {});

}  // namespace gclab
