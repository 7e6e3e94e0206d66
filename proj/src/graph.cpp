#include "gclab/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "gclab/errors.hpp"

namespace gclab {

Graph::Graph(int order, std::vector<Edge> edges) : order_(order) {
  if (order < 0) throw DomainError("graph order must be non-negative");
  for (auto& e : edges) {
    if (e.u == e.v) throw DomainError("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= order || e.v >= order) {
      throw DomainError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                        ") has an endpoint outside 0.." + std::to_string(order - 1));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  adjacency_.resize(order);
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= order_ || v >= order_) return false;
  const auto& nbrs = adjacency_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

int Graph::edge_index(Vertex u, Vertex v) const {
  if (u > v) std::swap(u, v);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it == edges_.end() || *it != Edge{u, v}) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Bipartition::x_size() const {
  return static_cast<int>(std::count(side_of.begin(), side_of.end(), Side::kX));
}

int Bipartition::y_size() const {
  return static_cast<int>(std::count(side_of.begin(), side_of.end(), Side::kY));
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.has_edge(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(g.order(), std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
  const int offset = g.order();
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  for (const auto& e : h.edges()) edges.push_back({e.u + offset, e.v + offset});
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = 0; v < h.order(); ++v) edges.push_back({u, v + offset});
  }
  return Graph(g.order() + h.order(), std::move(edges));
}

Graph disjoint_union(std::span<const Graph> gs) {
  int offset = 0;
  std::vector<Edge> edges;
  for (const auto& g : gs) {
    for (const auto& e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
    offset += g.order();
  }
  return Graph(offset, std::move(edges));
}

int max_degree(const Graph& g) {
  int best = 0;
  for (Vertex v = 0; v < g.order(); ++v) best = std::max(best, g.degree(v));
  return best;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(u)) {
        if (side[w] == -1) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  result.side_of.reserve(g.order());
  for (int s : side) result.side_of.push_back(s == 0 ? Side::kX : Side::kY);
  return result;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  std::vector<bool> seen(g.order(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == g.order();
}

Graph graph_from_mask(int order, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (Vertex u = 0; u < order; ++u) {
    for (Vertex v = u + 1; v < order; ++v, ++bit) {
      if (mask >> bit & 1U) edges.push_back({u, v});
    }
  }
  return Graph(order, std::move(edges));
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.order() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

namespace {

bool is_skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Reads exactly `count` non-negative integers from the line, nothing else.
std::vector<long long> parse_ints(const std::string& line, std::size_t count, std::size_t line_no) {
  std::istringstream ss(line);
  std::vector<long long> out;
  long long x = 0;
  while (ss >> x) out.push_back(x);
  ss.clear();
  std::string rest;
  if (ss >> rest) throw ParseError(line_no, "unexpected token '" + rest + "'");
  if (out.size() != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) + " integers, found " +
                                  std::to_string(out.size()));
  }
  for (long long v : out) {
    if (v < 0) throw ParseError(line_no, "negative value " + std::to_string(v));
  }
  return out;
}

}  // namespace

Graph read_edge_list(std::istream& is) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (std::getline(is, line)) {
    ++line_no;
    if (is_skippable(line)) continue;
    if (!header) {
      auto v = parse_ints(line, 2, line_no);
      if (v[0] > 1'000'000) throw ParseError(line_no, "order too large");
      header = {v[0], v[1]};
      continue;
    }
    auto v = parse_ints(line, 2, line_no);
    if (v[0] == v[1]) throw ParseError(line_no, "self-loop at vertex " + std::to_string(v[0]));
    if (v[0] >= header->first || v[1] >= header->first) {
      throw ParseError(line_no, "vertex out of range for order " + std::to_string(header->first));
    }
    Edge e{static_cast<Vertex>(std::min(v[0], v[1])), static_cast<Vertex>(std::max(v[0], v[1]))};
    edges.push_back(e);
    edge_lines.push_back(line_no);
  }
  if (!header) throw ParseError(line_no == 0 ? 0 : line_no, "missing '<order> <edge_count>' header");

  // Duplicates are rejected here even though Graph would collapse them: a
  // repeated line means the declared edge count is wrong.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (edges[idx[i]] == edges[idx[i - 1]]) {
      throw ParseError(edge_lines[idx[i]], "duplicate edge " + std::to_string(edges[idx[i]].u) +
                                                " " + std::to_string(edges[idx[i]].v));
    }
  }
  if (static_cast<long long>(edges.size()) != header->second) {
    throw ParseError(line_no, "header declares " + std::to_string(header->second) +
                                  " edges, found " + std::to_string(edges.size()));
  }
  return Graph(static_cast<int>(header->first), std::move(edges));
}

}  // namespace gclab
