#pragma once

#include <vector>

#include "galvin/multigraph.hpp"

namespace galvin {

using Colour = int;

// Proper edge colouring: colour[e] in 1..k for every edge id e.  k is the
// declared palette size, not the number of distinct colours used; k = 0 is
// only meaningful for edgeless graphs.
struct EdgeColouring {
    int k = 0;
    std::vector<Colour> colour;
};

// Which side of the line-graph orientation rule each vertex is on.  At a
// D vertex arcs run from higher to lower colour, at a U vertex from lower
// to higher.
enum class Side : unsigned char { D, U };

// side[v] for every vertex id v.
struct VertexPartition {
    std::vector<Side> side;
};

// Candidate colour lists, one per edge id.
struct ListAssignment {
    std::vector<std::vector<Colour>> lists;
};

// Throws PreconditionError unless c covers every edge of g with colours in
// 1..c.k (and c.k >= 1 whenever g has edges).
void validate_colouring(const MultiGraph& g, const EdgeColouring& c);

// Throws PreconditionError unless p assigns a side to every vertex of g.
void validate_partition(const MultiGraph& g, const VertexPartition& p);

// True when no two edges sharing an endpoint receive the same colour.
// Validates c first (so malformed input throws rather than returning false).
bool is_proper_colouring(const MultiGraph& g, const EdgeColouring& c);

// Swap of a partition: every D becomes U and vice versa.
VertexPartition swap_partition(const VertexPartition& p);

// Colour reversal c -> k+1-c over the palette 1..k.
EdgeColouring reverse_colouring(const EdgeColouring& c);

// Colours {1..floor((k+1)/2)} are low, the rest high.
inline bool is_low_colour(Colour c, int k) { return c <= (k + 1) / 2; }

}  // namespace galvin
