#pragma once

#include <string>
#include <vector>

#include "galvin/blocks.hpp"
#include "galvin/colouring.hpp"
#include "galvin/constructions.hpp"
#include "galvin/multigraph.hpp"
#include "galvin/orientation.hpp"
#include "galvin/search.hpp"

namespace galvin {

// Wire formats.  Graph: {"vertices": n, "edges": [[a,b], ...]} with 0-based
// ids and parallel edges as repeated pairs.  Witness: {"k": k, "sides":
// ["D","U",...], "colours": [c_0,...]} indexed by vertex id and edge id.
// Lists: {"lists": [[...],...]} indexed by edge id.  Parsers throw
// ParseError for malformed text or wrong shapes; semantic checks (ids in
// range, colouring properness) stay with the validate_* functions.
// Serializers emit a single canonical line, so parse-then-serialize is
// byte-stable on canonical input.

MultiGraph graph_from_json(const std::string& text);
std::string graph_to_json(const MultiGraph& g);

Witness witness_from_json(const std::string& text);
std::string witness_to_json(const Witness& w);

ListAssignment lists_from_json(const std::string& text);
std::string lists_to_json(const ListAssignment& lists);

// Output of the list colouring command: the per-edge colour assignment.
std::string assignment_to_json(const std::vector<Colour>& assignment);

std::string report_to_json(const PropernessReport& report);
std::string search_outcome_to_json(const SearchOutcome& outcome);
std::string min_k_outcome_to_json(const MinKOutcome& outcome);
std::string blocks_to_json(const BlockDecomposition& decomposition);

// Machine-readable error envelope the CLI prints on failure.
std::string error_to_json(const std::string& kind, const std::string& message);

}  // namespace galvin
