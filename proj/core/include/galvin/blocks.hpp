#pragma once

#include <optional>
#include <vector>

#include "galvin/multigraph.hpp"

namespace galvin {

enum class BlockKind : unsigned char {
    Bipartite,     // any bipartite block, bridges included
    FourClique,    // K4
    TypeT,         // spine vw plus p >= 1 independent spikes, each joined to both ends
    Unclassified,  // anything else (the graph then has an odd cycle of length >= 5)
};

struct Block {
    std::vector<VertexId> vertices;  // ascending
    std::vector<EdgeId> edges;       // ascending
    BlockKind kind = BlockKind::Unclassified;
    // TypeT only: the spine edge and the spike vertices (ascending).  A
    // triangle is TypeT with one spike; its spine is the edge whose endpoint
    // pair is lexicographically smallest.
    EdgeId spine = -1;
    std::vector<VertexId> spikes;
};

struct BlockDecomposition {
    std::vector<Block> blocks;         // ordered by smallest edge id
    std::vector<VertexId> cut_vertices;  // ascending
};

// Biconnected components of a simple connected graph, each classified as
// Bipartite, FourClique, TypeT or Unclassified.  The graph has no odd cycle
// of length >= 5 exactly when no block is Unclassified.
// Throws PreconditionError if g is not simple or not connected.
BlockDecomposition classify_blocks(const MultiGraph& g);

// True when g contains an odd cycle of length >= 5.  Decided by direct
// enumeration of simple cycles, so it is an oracle independent of
// classify_blocks; intended for small graphs (the enumeration is pruned to
// odd cycles but still exponential in the worst case).
// Throws PreconditionError if g is not simple.
bool has_long_odd_cycle(const MultiGraph& g);

}  // namespace galvin
