#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gclab/graph.hpp"

namespace gclab {

enum class Family {
  kComplete,
  kCompleteBipartite,
  kStar,
  kBistar,
  kPath,
  kCycle,
  kWheel,
  kHelm,
  kFan,
};

inline constexpr Family kAllFamilies[] = {
    Family::kComplete, Family::kCompleteBipartite, Family::kStar,
    Family::kBistar,   Family::kPath,              Family::kCycle,
    Family::kWheel,    Family::kHelm,              Family::kFan,
};

std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);

// 1 for every family except complete_bipartite and bistar.
int family_arity(Family f);

// Smallest legal value of every parameter.
int family_min_param(Family f);

struct FamilySpec {
  Family family;
  std::vector<int> params;

  // e.g. "wheel(5)", "bistar(2,3)".
  std::string label() const;
};

// Labeling:
//   complete(n)            0..n-1
//   complete_bipartite(m,n) side X = 0..m-1, side Y = m..m+n-1
//   star(n)                center 0, leaves 1..n (same as complete_bipartite(1,n))
//   bistar(m,n)            u=0, v=1, pendants at u 2..m+1, at v m+2..m+n+1
//   path(n)                0-1-...-(n-1)
//   cycle(n)               path plus (0,n-1)
//   wheel(n)               hub 0, rim cycle 1..n-1 (n vertices total)
//   helm(n)                hub 0, rim cycle 1..n, pendant n+i on rim vertex i
//   fan(n)                 hub 0 joined to the path 1..n (n+1 vertices)
//
// Throws DomainError naming the violated bound when parameters are out of
// range or the wrong count is given.
Graph generate(const FamilySpec& spec);

Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace gclab
