#pragma once

#include "galvin/colouring.hpp"
#include "galvin/multigraph.hpp"

namespace galvin {

struct ChromaticIndexResult {
    int chromatic_index = 0;
    EdgeColouring witness;  // proper colouring with k = chromatic_index
};

// Exact chromatic index by backtracking, with a witness colouring.
// Branches on edges in decreasing degree-sum order and only ever introduces
// the next unused colour value, so colourings are explored once per class
// partition.  Candidate k starts at max(max degree, ceil(m / floor(n/2)))
// (no colour class can exceed a maximum matching's size) and grows until a
// colouring exists.
//
// Refuses graphs with more than `edge_limit` edges (ScaleLimitError);
// exhaustive refutation beyond that is not realistic.
ChromaticIndexResult chromatic_index(const MultiGraph& g, int edge_limit = 28);

}  // namespace galvin
