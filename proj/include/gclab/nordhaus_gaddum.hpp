#pragma once

#include "gclab/coloring.hpp"
#include "gclab/graph.hpp"

namespace gclab {

// Chromatic numbers of a graph and its complement against the four bounds
//   2*sqrt(n) <= chi + chi_comp <= n + 1
//   n <= chi * chi_comp <= (n + 1)^2 / 4
// All comparisons are done in integers: the square-root bound as
// sum^2 >= 4n and the quarter bound as 4 * product <= (n + 1)^2.
struct NgReport {
  int order = 0;
  int chi = 0;
  int chi_comp = 0;
  long long sum = 0;
  long long product = 0;

  bool lower_sum_ok = false;   // sum^2 >= 4n
  bool upper_sum_ok = false;   // sum <= n + 1
  bool lower_prod_ok = false;  // product >= n
  bool upper_prod_ok = false;  // 4 * product <= (n + 1)^2

  bool all_ok() const { return lower_sum_ok && upper_sum_ok && lower_prod_ok && upper_prod_ok; }
};

// Throws DomainError for the order-0 graph.
NgReport ng_check(const Graph& g, const SolverOptions& opts = {});

// True iff some graph of order n has chi = a and chi(complement) = b, which
// holds exactly when a + b <= n + 1 and a * b >= n. False if any argument is
// below 1.
bool ng_feasible(long long n, long long a, long long b);

// Disjoint union of b cliques with sizes a = s_1 >= s_2 >= ... >= s_b >= 1
// summing to n, filled largest first. Its clique number is a and its
// complement is complete b-partite, so the two chromatic numbers are a and b.
// Throws DomainError naming the violated inequality when infeasible.
Graph ng_construct(int n, int a, int b);

}  // namespace gclab
