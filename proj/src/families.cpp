#include "gclab/families.hpp"

#include <array>

#include "gclab/errors.hpp"

namespace gclab {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  int arity;
  int min_param;
};

constexpr std::array<FamilyInfo, 9> kInfo{{
    {Family::kComplete, "complete", 1, 1},
    {Family::kCompleteBipartite, "complete_bipartite", 2, 1},
    {Family::kStar, "star", 1, 1},
    {Family::kBistar, "bistar", 2, 1},
    {Family::kPath, "path", 1, 1},
    {Family::kCycle, "cycle", 1, 3},
    {Family::kWheel, "wheel", 1, 4},
    {Family::kHelm, "helm", 1, 3},
    {Family::kFan, "fan", 1, 2},
}};

const FamilyInfo& info(Family f) {
  for (const auto& i : kInfo) {
    if (i.family == f) return i;
  }
  throw DomainError("unknown family");
}

Graph complete_bipartite_graph(int m, int n) {
  std::vector<Edge> edges;
  for (Vertex x = 0; x < m; ++x) {
    for (Vertex y = 0; y < n; ++y) edges.push_back({x, m + y});
  }
  return Graph(m + n, std::move(edges));
}

Graph bistar_graph(int m, int n) {
  std::vector<Edge> edges{{0, 1}};
  for (int i = 0; i < m; ++i) edges.push_back({0, 2 + i});
  for (int i = 0; i < n; ++i) edges.push_back({1, m + 2 + i});
  return Graph(m + n + 2, std::move(edges));
}

Graph helm_graph(int n) {
  Graph wheel = join(Graph::empty(1), cycle_graph(n));
  std::vector<Edge> edges(wheel.edges().begin(), wheel.edges().end());
  for (int i = 1; i <= n; ++i) edges.push_back({i, n + i});
  return Graph(2 * n + 1, std::move(edges));
}

}  // namespace

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
  for (const auto& i : kInfo) {
    if (i.name == name) return i.family;
  }
  return std::nullopt;
}

int family_arity(Family f) { return info(f).arity; }

int family_min_param(Family f) { return info(f).min_param; }

std::string FamilySpec::label() const {
  std::string out(family_name(family));
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  out += ')';
  return out;
}

Graph complete_graph(int n) {
  if (n < 0) throw DomainError("complete: n must be >= 0");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, std::move(edges));
}

Graph path_graph(int n) {
  if (n < 0) throw DomainError("path: n must be >= 0");
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("cycle: n must be >= 3, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  edges.push_back({0, n - 1});
  return Graph(n, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
  const auto& fi = info(spec.family);
  const std::string name(fi.name);
  if (static_cast<int>(spec.params.size()) != fi.arity) {
    throw DomainError(name + " takes " + std::to_string(fi.arity) + " parameter(s), got " +
                      std::to_string(spec.params.size()));
  }
  static constexpr std::array<const char*, 2> kNames2{"m", "n"};
  for (std::size_t i = 0; i < spec.params.size(); ++i) {
    if (spec.params[i] < fi.min_param) {
      const char* pname = fi.arity == 2 ? kNames2[i] : "n";
      throw DomainError(name + ": " + pname + " must be >= " + std::to_string(fi.min_param) +
                        ", got " + std::to_string(spec.params[i]));
    }
  }
  const int a = spec.params[0];
  switch (spec.family) {
    case Family::kComplete:
      return complete_graph(a);
    case Family::kCompleteBipartite:
      return complete_bipartite_graph(a, spec.params[1]);
    case Family::kStar:
      return complete_bipartite_graph(1, a);
    case Family::kBistar:
      return bistar_graph(a, spec.params[1]);
    case Family::kPath:
      return path_graph(a);
    case Family::kCycle:
      return cycle_graph(a);
    case Family::kWheel:
      return join(Graph::empty(1), cycle_graph(a - 1));
    case Family::kHelm:
      return helm_graph(a);
    case Family::kFan:
      return join(Graph::empty(1), path_graph(a));
  }
  throw DomainError("unknown family");
}

}  // namespace gclab
