#include "gclab/line_graph.hpp"

namespace gclab {

LineGraphResult line_graph(const Graph& g) {
  // Edges meeting at a vertex form a clique in L(G); a pair of distinct
  // simple edges shares at most one endpoint, so no pair is emitted twice.
  std::vector<std::vector<int>> incident(g.order());
  const auto edges = g.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<Edge> line_edges;
  for (const auto& at : incident) {
    for (std::size_t a = 0; a < at.size(); ++a) {
      for (std::size_t b = a + 1; b < at.size(); ++b) line_edges.push_back({at[a], at[b]});
    }
  }
  return {Graph(static_cast<int>(edges.size()), std::move(line_edges)),
          std::vector<Edge>(edges.begin(), edges.end())};
}

}  // namespace gclab
