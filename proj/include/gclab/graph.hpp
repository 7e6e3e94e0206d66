#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gclab {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple undirected graph on vertices 0..order-1.
//
// Edges are kept canonical (u < v) and sorted lexicographically; the position
// of an edge in edges() is its edge index, which the line graph and edge
// colorings use as the edge identity. Equality is labeled equality.
class Graph {
 public:
  Graph() = default;

  // Duplicate edges collapse. Throws DomainError on a self-loop or an
  // endpoint >= order.
  Graph(int order, std::vector<Edge> edges);

  static Graph empty(int order) { return Graph(order, {}); }

  int order() const noexcept { return order_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  // Sorted ascending.
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Index of edge {u,v} in edges(), or -1 if absent.
  int edge_index(Vertex u, Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  int order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

enum class Side : std::uint8_t { kX, kY };

struct Bipartition {
  std::vector<Side> side_of;

  int x_size() const;
  int y_size() const;
};

Graph complement(const Graph& g);

// Vertices of g keep their labels; h's vertices are shifted by g.order().
Graph join(const Graph& g, const Graph& h);

Graph disjoint_union(std::span<const Graph> gs);

int max_degree(const Graph& g);

// Breadth-first two-coloring. The lowest-index vertex of every component is
// placed on side X. Absent when g has an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

bool is_connected(const Graph& g);

// Bit i of mask selects the i-th pair of the lexicographic list
// (0,1),(0,2),...,(order-2,order-1). Enumerating mask over
// [0, 2^C(order,2)) visits every labeled graph of that order once.
Graph graph_from_mask(int order, std::uint64_t mask);

// Edge-list text format:
//   <order> <edge_count>
//   u v            (one per edge, u < v, lexicographic order)
// Lines starting with '#' are comments.
void write_edge_list(std::ostream& os, const Graph& g);
std::string to_edge_list(const Graph& g);

// Accepts comments and blank lines anywhere and edges in any order or
// orientation. Throws ParseError with the offending line number.
Graph read_edge_list(std::istream& is);

}  // namespace gclab
