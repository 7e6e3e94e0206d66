#include "gclab/edge_coloring.hpp"

#include <algorithm>
#include <stdexcept>

#include "gclab/errors.hpp"
#include "gclab/families.hpp"

namespace gclab {

namespace {

int mod(int a, int m) { return ((a % m) + m) % m; }

// Partial edge coloring indexed by (vertex, color) for O(1) "which neighbor
// uses color c at v" lookups.
class ColorTable {
 public:
  ColorTable(const Graph& g, int palette)
      : g_(g),
        palette_(palette),
        at_(static_cast<std::size_t>(g.order()) * palette, -1),
        edge_color_(g.edge_count(), -1) {}

  Vertex neighbor_via(Vertex v, int c) const { return at_[slot(v, c)]; }
  bool is_free(Vertex v, int c) const { return neighbor_via(v, c) == -1; }

  int lowest_free(Vertex v) const {
    for (int c = 0; c < palette_; ++c) {
      if (is_free(v, c)) return c;
    }
    throw std::logic_error("no free color at vertex " + std::to_string(v));
  }

  int color(Vertex a, Vertex b) const { return edge_color_[g_.edge_index(a, b)]; }

  void set(Vertex a, Vertex b, int c) {
    edge_color_[g_.edge_index(a, b)] = c;
    at_[slot(a, c)] = b;
    at_[slot(b, c)] = a;
  }

  void clear(Vertex a, Vertex b) {
    int& c = edge_color_[g_.edge_index(a, b)];
    if (c == -1) return;
    at_[slot(a, c)] = -1;
    at_[slot(b, c)] = -1;
    c = -1;
  }

  // Swaps colors c1/c2 along the maximal path that leaves `start` through
  // its c1 edge. Requires c2 free at start.
  void flip_path(Vertex start, int c1, int c2) {
    struct Step {
      Vertex a, b;
      int c;
    };
    std::vector<Step> path;
    Vertex x = start;
    int want = c1;
    while (true) {
      Vertex y = neighbor_via(x, want);
      if (y == -1) break;
      path.push_back({x, y, want});
      x = y;
      want = want == c1 ? c2 : c1;
    }
    for (const auto& s : path) clear(s.a, s.b);
    for (const auto& s : path) set(s.a, s.b, s.c == c1 ? c2 : c1);
  }

  // Renumbers used colors to 0..k-1 preserving their relative order.
  EdgeColoring finish() const {
    std::vector<int> remap(palette_, -1);
    for (int c : edge_color_) {
      if (c < 0) throw std::logic_error("edge left uncolored");
      remap[c] = 0;
    }
    int next = 0;
    for (auto& r : remap) {
      if (r == 0) r = next++;
    }
    EdgeColoring out{std::vector<int>(edge_color_.size()), next};
    for (std::size_t i = 0; i < edge_color_.size(); ++i) out.color_of[i] = remap[edge_color_[i]];
    return out;
  }

 private:
  std::size_t slot(Vertex v, int c) const { return static_cast<std::size_t>(v) * palette_ + c; }

  const Graph& g_;
  int palette_;
  std::vector<Vertex> at_;
  std::vector<int> edge_color_;
};

// Assigns the colors produced by rule(u, v) to every edge of g.
template <typename Rule>
EdgeColoring color_by_rule(const Graph& g, int num_colors, Rule rule) {
  EdgeColoring out{std::vector<int>(g.edge_count()), num_colors};
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) out.color_of[i] = rule(edges[i].u, edges[i].v);
  return out;
}

void require_edges(const Graph& g, const char* what) {
  if (g.edge_count() == 0) throw DomainError(std::string(what) + " requires at least one edge");
}

}  // namespace

EdgeColoring edge_color_complete(int n) {
  if (n < 2) throw DomainError("complete edge coloring: n must be >= 2, got " + std::to_string(n));
  const Graph g = complete_graph(n);
  if (n % 2 == 1) {
    return color_by_rule(g, n, [n](Vertex i, Vertex j) { return (i + j) % n; });
  }
  const int m = n - 1;            // odd, so 2 is invertible mod m
  const int half = (m + 1) / 2;   // 2 * half = 1 (mod m)
  return color_by_rule(g, m, [=](Vertex i, Vertex j) {
    if (j == n - 1) return i;
    return mod((i + j) * half, m);
  });
}

EdgeColoring edge_color_bipartite_konig(const Graph& g) {
  require_edges(g, "Konig edge coloring");
  if (!bipartition(g)) throw DomainError("Konig edge coloring requires a bipartite graph");
  const int delta = max_degree(g);
  ColorTable table(g, delta);
  for (const auto& e : g.edges()) {
    const int alpha = table.lowest_free(e.u);
    const int beta = table.lowest_free(e.v);
    // In a bipartite graph the alpha/beta path from v cannot end at u, so
    // after the flip alpha is free at both endpoints.
    if (alpha != beta && !table.is_free(e.v, alpha)) table.flip_path(e.v, alpha, beta);
    table.set(e.u, e.v, alpha);
  }
  return table.finish();
}

EdgeColoring edge_color_wheel(int n) {
  if (n < 4) throw DomainError("wheel edge coloring: n must be >= 4, got " + std::to_string(n));
  const int m = n - 1;
  const Graph g = generate({Family::kWheel, {n}});
  // Rim vertex j (0-based) is graph vertex j+1.
  return color_by_rule(g, m, [m](Vertex a, Vertex b) {
    if (a == 0) return b - 1;
    const int i = a - 1, j = b - 1;
    const int start = (j == i + 1) ? i : j;  // the closing edge runs m-1 -> 0
    return (start + 2) % m;
  });
}

EdgeColoring edge_color_helm(int n) {
  if (n < 3) throw DomainError("helm edge coloring: n must be >= 3, got " + std::to_string(n));
  const Graph g = generate({Family::kHelm, {n}});
  if (n == 3) {
    throw ConstructionInfeasible(
        "helm(3) has max degree 4, so it cannot be edge colored with 3 colors",
        chromatic_index(g).value);
  }
  return color_by_rule(g, n, [n](Vertex a, Vertex b) {
    if (a == 0) return b - 1;
    if (b > n) return (a - 1 + 3) % n;  // pendant
    const int i = a - 1, j = b - 1;
    const int start = (j == i + 1) ? i : j;
    return (start + 2) % n;
  });
}

EdgeColoring edge_color_fan(int n) {
  if (n < 2) throw DomainError("fan edge coloring: n must be >= 2, got " + std::to_string(n));
  const Graph g = generate({Family::kFan, {n}});
  if (n == 2) {
    throw ConstructionInfeasible("fan(2) is a triangle, so it cannot be edge colored with 2 colors",
                                 chromatic_index(g).value);
  }
  return color_by_rule(g, n, [n](Vertex a, Vertex b) {
    if (a == 0) return b - 1;
    return (a - 1 + 2) % n;
  });
}

EdgeColoring edge_color_misra_gries(const Graph& g) {
  require_edges(g, "Misra-Gries edge coloring");
  const int palette = max_degree(g) + 1;
  ColorTable table(g, palette);

  for (const auto& e : g.edges()) {
    const Vertex u = e.u;

    int shared = -1;
    for (int c = 0; c < palette && shared == -1; ++c) {
      if (table.is_free(u, c) && table.is_free(e.v, c)) shared = c;
    }
    if (shared != -1) {
      table.set(u, e.v, shared);
      continue;
    }

    // Maximal fan at u starting at v: each next fan vertex is joined to u by
    // an edge whose color is free on the previous fan vertex.
    std::vector<Vertex> fan{e.v};
    while (true) {
      const Vertex last = fan.back();
      Vertex next = -1;
      for (int c = 0; c < palette && next == -1; ++c) {
        if (!table.is_free(last, c)) continue;
        const Vertex w = table.neighbor_via(u, c);
        if (w != -1 && std::find(fan.begin(), fan.end(), w) == fan.end()) next = w;
      }
      if (next == -1) break;
      fan.push_back(next);
    }

    const int c = table.lowest_free(u);
    const int d = table.lowest_free(fan.back());
    // c is free at u, so the c/d path through u starts with u's d edge.
    if (c != d) table.flip_path(u, d, c);

    // First fan vertex with d free such that the prefix is still a fan.
    std::size_t w = 0;
    for (;; ++w) {
      if (w == fan.size()) throw std::logic_error("Misra-Gries: no fan vertex with d free");
      if (table.is_free(fan[w], d)) break;
      if (w + 1 == fan.size() || !table.is_free(fan[w], table.color(u, fan[w + 1]))) {
        throw std::logic_error("Misra-Gries: fan prefix broken by path inversion");
      }
    }

    // Rotate the prefix: (u, fan[i]) takes the color of (u, fan[i+1]).
    std::vector<int> shifted;
    for (std::size_t i = 1; i <= w; ++i) shifted.push_back(table.color(u, fan[i]));
    for (std::size_t i = 1; i <= w; ++i) table.clear(u, fan[i]);
    for (std::size_t i = 0; i < w; ++i) table.set(u, fan[i], shifted[i]);
    table.set(u, fan[w], d);
  }
  return table.finish();
}

}  // namespace gclab
