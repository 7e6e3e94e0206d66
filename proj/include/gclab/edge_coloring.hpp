#pragma once

#include "gclab/coloring.hpp"
#include "gclab/graph.hpp"

namespace gclab {

// Each constructor returns a coloring of the labeled graph produced by the
// matching family generator (see families.hpp), with color_of aligned with
// that graph's canonical edge order.

// K_n, n >= 2. Even n: n-1 colors by the round-robin (circle) schedule with
// vertex n-1 fixed; round r holds the edges {i,j} with i+j = 2r (mod n-1)
// and the edge {r, n-1}. Odd n: edge {i,j} gets (i+j) mod n.
EdgeColoring edge_color_complete(int n);

// Exactly max_degree(g) colors. Edges are inserted in canonical order; when
// the lowest free colors at the two endpoints differ, the alternating path
// of those two colors leaving v is swapped first. Throws DomainError for a
// non-bipartite or edgeless graph.
EdgeColoring edge_color_bipartite_konig(const Graph& g);

// wheel(n), n >= 4, with n-1 colors: the spoke to rim vertex j gets color j
// and the rim edge from j to j+1 gets (j+2) mod (n-1).
EdgeColoring edge_color_wheel(int n);

// helm(n) with n colors: spoke j -> j, rim edge j..j+1 -> (j+2) mod n,
// pendant at rim vertex j -> (j+3) mod n. Needs n >= 4; n = 3 throws
// ConstructionInfeasible carrying the exact chromatic index.
EdgeColoring edge_color_helm(int n);

// fan(n) with n colors: spoke j -> j, path edge j..j+1 -> (j+2) mod n.
// Needs n >= 3; n = 2 throws ConstructionInfeasible.
EdgeColoring edge_color_fan(int n);

// Misra-Gries: at most max_degree(g) + 1 colors on any simple graph. An edge
// whose endpoints share a free color takes the lowest such color directly;
// otherwise fan rotation and cd-path inversion apply. Colors are renumbered
// to be contiguous. Throws DomainError for an edgeless graph.
EdgeColoring edge_color_misra_gries(const Graph& g);

}  // namespace gclab
