#include "gclab/coloring.hpp"

#include <algorithm>

#include "gclab/errors.hpp"
#include "gclab/line_graph.hpp"

namespace gclab {

namespace {

bool colors_contiguous(const std::vector<int>& color_of, int num_colors) {
  if (num_colors < 0) return false;
  std::vector<bool> used(num_colors, false);
  for (int c : color_of) {
    if (c < 0 || c >= num_colors) return false;
    used[c] = true;
  }
  return std::all_of(used.begin(), used.end(), [](bool b) { return b; });
}

class DsaturSearch {
 public:
  DsaturSearch(const Graph& g, int k, std::uint64_t budget)
      : g_(g),
        n_(g.order()),
        k_(k),
        budget_(budget),
        color_(n_, -1),
        saturation_(n_, 0),
        neighbor_colors_(static_cast<std::size_t>(n_) * k, 0) {}

  std::optional<VertexColoring> run() {
    if (!search(0, -1)) return std::nullopt;
    int used = 0;
    for (int c : color_) used = std::max(used, c + 1);
    return VertexColoring{color_, used};
  }

 private:
  int& count(Vertex v, int c) { return neighbor_colors_[static_cast<std::size_t>(v) * k_ + c]; }

  Vertex select() const {
    Vertex best = -1;
    for (Vertex v = 0; v < n_; ++v) {
      if (color_[v] != -1) continue;
      if (best == -1 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best))) {
        best = v;
      }
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    for (Vertex w : g_.neighbors(v)) {
      if (count(w, c)++ == 0) ++saturation_[w];
    }
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    color_[v] = -1;
    for (Vertex w : g_.neighbors(v)) {
      if (--count(w, c) == 0) --saturation_[w];
    }
  }

  bool search(int colored, int max_used) {
    if (colored == n_) return true;
    if (++nodes_ > budget_) throw BudgetExceeded(budget_);
    const Vertex v = select();
    const int limit = std::min(k_, max_used + 2);
    for (int c = 0; c < limit; ++c) {
      if (count(v, c) != 0) continue;
      assign(v, c);
      if (search(colored + 1, std::max(max_used, c))) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  int n_;
  int k_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> saturation_;
  std::vector<int> neighbor_colors_;
};

}  // namespace

bool validate_vertex_coloring(const Graph& g, const VertexColoring& c) {
  if (static_cast<int>(c.color_of.size()) != g.order()) return false;
  if (!colors_contiguous(c.color_of, c.num_colors)) return false;
  for (const auto& e : g.edges()) {
    if (c.color_of[e.u] == c.color_of[e.v]) return false;
  }
  return true;
}

bool validate_edge_coloring(const Graph& g, const EdgeColoring& c) {
  if (c.color_of.size() != g.edge_count()) return false;
  if (!colors_contiguous(c.color_of, c.num_colors)) return false;
  // seen[v * num_colors + color]
  std::vector<bool> seen(static_cast<std::size_t>(g.order()) * c.num_colors, false);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (Vertex end : {edges[i].u, edges[i].v}) {
      auto slot = static_cast<std::size_t>(end) * c.num_colors + c.color_of[i];
      if (seen[slot]) return false;
      seen[slot] = true;
    }
  }
  return true;
}

int greedy_clique_lower_bound(const Graph& g) {
  if (g.order() == 0) return 0;
  Vertex seed = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(seed)) seed = v;
  }
  std::vector<Vertex> candidates(g.neighbors(seed).begin(), g.neighbors(seed).end());
  int size = 1;
  while (!candidates.empty()) {
    Vertex next = candidates.front();
    for (Vertex v : candidates) {
      if (g.degree(v) > g.degree(next)) next = v;
    }
    ++size;
    std::vector<Vertex> kept;
    for (Vertex v : candidates) {
      if (v != next && g.has_edge(v, next)) kept.push_back(v);
    }
    candidates = std::move(kept);
  }
  return size;
}

std::optional<VertexColoring> is_k_colorable(const Graph& g, int k, const SolverOptions& opts) {
  if (k < 0) throw DomainError("k must be >= 0");
  if (g.order() == 0) return VertexColoring{};
  if (k == 0) return std::nullopt;
  return DsaturSearch(g, k, opts.node_budget).run();
}

ChromaticNumberResult chromatic_number(const Graph& g, const SolverOptions& opts, int lower_bound) {
  if (g.order() == 0) return {};
  for (int k = std::max({1, lower_bound, greedy_clique_lower_bound(g)}); k <= g.order(); ++k) {
    if (auto witness = is_k_colorable(g, k, opts)) {
      // Every k' < k failed (or is below a valid lower bound), so the witness
      // uses exactly k colors.
      return {witness->num_colors, std::move(*witness)};
    }
  }
  throw std::logic_error("no coloring with order-many colors");
}

ChromaticIndexResult chromatic_index(const Graph& g, const SolverOptions& opts) {
  if (g.edge_count() == 0) {
    throw DomainError("chromatic index requires a nonempty graph (at least one edge)");
  }
  const auto lg = line_graph(g);
  auto result = chromatic_number(lg.graph, opts, max_degree(g));
  return {result.value, EdgeColoring{std::move(result.witness.color_of), result.value}};
}

}  // namespace gclab
