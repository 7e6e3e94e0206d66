#include "gclab/nordhaus_gaddum.hpp"

#include <algorithm>
#include <string>

#include "gclab/errors.hpp"
#include "gclab/families.hpp"

namespace gclab {

NgReport ng_check(const Graph& g, const SolverOptions& opts) {
  if (g.order() == 0) throw DomainError("Nordhaus-Gaddum check requires order >= 1");
  NgReport r;
  r.order = g.order();
  r.chi = chromatic_number(g, opts).value;
  r.chi_comp = chromatic_number(complement(g), opts).value;
  r.sum = static_cast<long long>(r.chi) + r.chi_comp;
  r.product = static_cast<long long>(r.chi) * r.chi_comp;
  const long long n = r.order;
  r.lower_sum_ok = r.sum * r.sum >= 4 * n;
  r.upper_sum_ok = r.sum <= n + 1;
  r.lower_prod_ok = r.product >= n;
  r.upper_prod_ok = 4 * r.product <= (n + 1) * (n + 1);
  return r;
}

bool ng_feasible(long long n, long long a, long long b) {
  if (n < 1 || a < 1 || b < 1) return false;
  return a + b <= n + 1 && a * b >= n;
}

Graph ng_construct(int n, int a, int b) {
  const std::string triple =
      "(" + std::to_string(n) + "," + std::to_string(a) + "," + std::to_string(b) + ")";
  if (n < 1 || a < 1 || b < 1) throw DomainError("n, a, b must all be >= 1, got " + triple);
  if (static_cast<long long>(a) + b > static_cast<long long>(n) + 1) {
    throw DomainError("infeasible " + triple + ": a + b <= n + 1 violated");
  }
  if (static_cast<long long>(a) * b < n) {
    throw DomainError("infeasible " + triple + ": a * b >= n violated");
  }
  std::vector<Graph> cliques;
  int remaining = n;
  for (int i = 0; i < b; ++i) {
    const int still_needed = b - i - 1;  // each later clique keeps >= 1 vertex
    const int size = i == 0 ? a : std::min(a, remaining - still_needed);
    cliques.push_back(complete_graph(size));
    remaining -= size;
  }
  return disjoint_union(cliques);
}

}  // namespace gclab
