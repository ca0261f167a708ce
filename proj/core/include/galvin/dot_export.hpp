#pragma once

#include <string>

#include "galvin/constructions.hpp"
#include "galvin/multigraph.hpp"
#include "galvin/orientation.hpp"

namespace galvin {

// DOT digraph of o: one node per line-graph node named e<id> and labelled
// "e<id>:c<colour>", one directed edge per arc labelled with its witness
// vertex.  Nodes are emitted in id order and arcs sorted by (from, to,
// witness), so equal orientations produce identical text.
std::string orientation_to_dot(const GalvinOrientation& o, const EdgeColouring& c);

// Convenience wrapper: orient (g, witness) and export.  Validates the
// witness the same way galvin_orient does.
std::string witness_to_dot(const MultiGraph& g, const Witness& w);

}  // namespace galvin
