#pragma once

// Shared test helpers: independent oracles the library's answers are checked
// against, seeded random instance generators, and a subprocess harness for
// the command-line tool.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "galvin/colouring.hpp"
#include "galvin/multigraph.hpp"
#include "galvin/orientation.hpp"

namespace galvin::test {

using Rng = std::mt19937;

// Arc list built straight from the definition: for every unordered edge pair
// and every endpoint they share, one arc by the D/U rule.  Independent of
// line_incidences and galvin_orient.
std::vector<Arc> oracle_arcs(const MultiGraph& g, const VertexPartition& p,
                             const EdgeColouring& c);

// Kernel-perfectness by exhaustive enumeration of induced subdigraphs and
// candidate kernels.  node_count must stay small (4^n pairs).
bool oracle_kernel_perfect(int node_count, const std::vector<Arc>& arcs);

// All chord- and pseudochord-free directed odd cycles, each rotated to start
// at its smallest node, sorted.  Plain DFS cycle enumeration, no pruning.
std::vector<std::vector<int>> oracle_bad_odd_cycles(int node_count,
                                                    const std::vector<Arc>& arcs);

// Oracle properness of one candidate: outdegrees at most k-1 (counted off
// oracle_arcs) and oracle_kernel_perfect.
bool oracle_proper(const MultiGraph& g, const VertexPartition& p, const EdgeColouring& c,
                   int k);

// Whether any (partition, proper colouring) pair passes oracle_proper, by
// unreduced enumeration of all k^m colour maps and all 2^n partitions.  Only
// for tiny graphs.
bool oracle_search(const MultiGraph& g, int k);

// Generators.  Sizes are chosen uniformly up to the given caps.
MultiGraph random_simple_connected(int max_vertices, Rng& rng);
MultiGraph random_multigraph(int max_vertices, int max_edges, Rng& rng);
MultiGraph random_bipartite(int max_edges, Rng& rng);

// Connected simple graph glued from bipartite pieces (<= 8 vertices), K4s
// and type-T pieces (p <= 4) along shared cut vertices.
MultiGraph random_maffray(Rng& rng);

EdgeColouring random_proper_colouring(const MultiGraph& g, Rng& rng);
VertexPartition random_partition(const MultiGraph& g, Rng& rng);
ListAssignment random_lists(const MultiGraph& g, int size, int universe, Rng& rng);

struct CliResult {
    int exit_code = -1;
    std::string output;  // stdout only
};

// Runs the command-line binary with the given argument string.
CliResult run_cli(const std::string& args);

// Writes text to <temp>/<name> and returns the path.
std::string write_temp(const std::string& name, const std::string& text);

}  // namespace galvin::test
