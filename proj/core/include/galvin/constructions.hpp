#pragma once

#include "galvin/colouring.hpp"
#include "galvin/multigraph.hpp"

namespace galvin {

// A (partition, colouring) pair whose Galvin orientation is claimed proper
// with respect to k.  Constructions in this header emit witnesses that pass
// verify_proper; nothing here assumes it without checking (tests re-verify).
struct Witness {
    VertexPartition partition;
    EdgeColouring colouring;
    int k = 0;  // equals colouring.k
};

// Bipartite g: k = max degree, sides follow the bipartition (left side D),
// colouring from bipartite_edge_colouring.  Throws PreconditionError when g
// is not bipartite.
Witness construct_bipartite(const MultiGraph& g);

// g obtained from a bipartite graph by adding one edge, possibly with
// parallels: k = chromatic index of g itself, the added parallel class gets
// colours 1..multiplicity, both its ends go to D along with one bipartition
// side of the rest.  Requires some parallel class whose removal leaves g
// bipartite and whose multiplicity is at most floor((k+1)/2); bipartite
// input defers to construct_bipartite.
Witness construct_bip_plus_edge(const MultiGraph& g);

// floor(3(n-1)/2) plus the mod-4 adjustment (0,1,2,1 for n mod 4 = 0,1,2,3):
// the palette size the clique construction needs for K_n.  n >= 2.
int f_clique(int n);

// Witness for complete_graph(n) at k = f_clique(n): D is the first floor(n/2)
// vertices, and the colouring stacks three bands, a round-robin clique
// colouring inside D (lowest colours), an index-shift colouring between D and
// U (middle), and a round-robin clique colouring inside U (highest).  n >= 2.
Witness construct_clique(int n);

// Witness at k = max_degree + 1 for a connected simple graph with no odd
// cycle of length >= 5, built block by block over the block-cut tree: every
// block is bipartite, a K4 or type T, and each kind has a fixed recipe for
// extending the colouring and partition from the anchor cut vertex.  After
// every block the partial witness is re-checked (properness, low/high sides,
// triangle condition); a failed recheck or an unmatched case throws
// InvariantError.  Non-simple, disconnected or long-odd-cycle input throws
// PreconditionError.
Witness construct_no_long_odd(const MultiGraph& g);

}  // namespace galvin
