#pragma once

#include <vector>

#include "galvin/multigraph.hpp"

namespace galvin {

// One shared endpoint of a pair of edges.  A parallel pair produces two
// records, one per shared endpoint; that is what makes the line graph of a
// multigraph carry doubled edges.
struct LineIncidence {
    EdgeId e = 0;  // smaller edge id
    EdgeId f = 0;  // larger edge id
    VertexId shared = 0;
};

// Every incidence record of g, ordered by shared vertex then (e, f).
// Total count is the sum over vertices of C(deg, 2).
std::vector<LineIncidence> line_incidences(const MultiGraph& g);

// Cliques of the line graph as edge-id sets:
//   - one star per vertex of degree >= 2 (the full incident set; duplicate
//     sets from parallel pairs are emitted once)
//   - one triple per triangle of the underlying simple graph, with one edge
//     from each of the three parallel classes (all combinations)
// Stars come first in vertex order, then triangles ordered by their vertex
// triple and class combination.  Every set is sorted ascending.
std::vector<std::vector<EdgeId>> line_cliques(const MultiGraph& g);

}  // namespace galvin
