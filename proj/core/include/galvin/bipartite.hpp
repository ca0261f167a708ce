#pragma once

#include <map>
#include <optional>
#include <set>
#include <vector>

#include "galvin/colouring.hpp"
#include "galvin/multigraph.hpp"

namespace galvin {

struct Bipartition {
    std::vector<VertexId> left;   // contains the smallest vertex of each component
    std::vector<VertexId> right;
};

// Two-colours g by BFS from the smallest unvisited vertex of each component
// (that vertex goes left).  Empty when g has an odd cycle.
std::optional<Bipartition> bipartition(const MultiGraph& g);

// Proper k-edge-colouring of a bipartite multigraph, optionally avoiding
// given colours at given vertices.  The graph is first coloured with
// max_degree(g) colours by Kempe-chain augmentation, then the colour classes
// are injectively relabeled into 1..k so every constrained vertex sees only
// allowed colours.
//
// Preconditions (PreconditionError): g bipartite, k >= max_degree(g), and
// deg(v) + |forbidden(v) restricted to 1..k| <= k at each constrained vertex.
// With constraints at a single vertex the relabeling always succeeds; a
// multi-vertex constraint set that defeats every injection also raises
// PreconditionError (and is reported as such, never mis-coloured).
EdgeColouring bipartite_edge_colouring(const MultiGraph& g, int k,
                                       const std::map<VertexId, std::set<Colour>>& forbidden = {});

}  // namespace galvin
