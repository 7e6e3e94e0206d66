#pragma once

#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

struct LineGraphResult {
  Graph graph;
  // edge_of_vertex[i] is the source edge represented by line-graph vertex i;
  // it equals source.edges()[i].
  std::vector<Edge> edge_of_vertex;
};

// Vertex i of the result is edge i of g (canonical order). Two vertices are
// adjacent iff the edges share an endpoint.
LineGraphResult line_graph(const Graph& g);

}  // namespace gclab
