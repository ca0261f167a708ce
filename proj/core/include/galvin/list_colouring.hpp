#pragma once

#include <vector>

#include "galvin/colouring.hpp"
#include "galvin/multigraph.hpp"
#include "galvin/orientation.hpp"

namespace galvin {

// Colours every edge from its own list using the kernel method: for each
// colour c ascending over the union of the lists, take the uncoloured edges
// whose lists still hold c, give c to a kernel of the subdigraph they induce
// in o, and strike c from the losers' lists.  Succeeds whenever every list
// has at least o.k entries, o.k - 1 bounds the outdegrees and o is
// kernel-perfect.
//
// Throws PreconditionError on a short list or an oversized outdegree,
// KernelFailureError (with the node set) when some induced subdigraph has no
// kernel, and InvariantError if the round invariant ever fails: an uncoloured
// edge must always keep more list entries than its outdegree among
// uncoloured edges.
std::vector<Colour> list_edge_colour(const MultiGraph& g, const GalvinOrientation& o,
                                     const ListAssignment& lists);

// True iff assignment is a proper edge colouring of g drawing every colour
// from the matching list.  The assignment must be total (one colour per
// edge); a wrong-sized vector is a precondition violation, not "false".
bool verify_list_colouring(const MultiGraph& g, const ListAssignment& lists,
                           const std::vector<Colour>& assignment);

}  // namespace galvin
