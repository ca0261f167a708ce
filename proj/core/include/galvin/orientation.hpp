#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "galvin/colouring.hpp"
#include "galvin/line_graph.hpp"
#include "galvin/multigraph.hpp"

namespace galvin {

// One oriented line-graph edge.  Nodes of the digraph are edge ids of the
// underlying graph; the witness is the shared endpoint that produced the arc.
struct Arc {
    EdgeId from = 0;
    EdgeId to = 0;
    VertexId witness = 0;
};

// Orientation of the line graph induced by a vertex partition and a proper
// edge colouring: each incidence record contributes one arc, running from
// higher to lower colour when the witness is in D and from lower to higher
// when it is in U.  A parallel pair therefore carries two arcs, which may
// form a two-cycle.  Outdegrees count arcs with multiplicity.
struct GalvinOrientation {
    int node_count = 0;
    int k = 0;  // palette of the colouring that produced the orientation
    std::vector<Arc> arcs;
    std::vector<int> outdegree;
};

// Throws PreconditionError when c is not a proper colouring of g (or p/c do
// not cover g).  Arc order follows line_incidences order.
GalvinOrientation galvin_orient(const MultiGraph& g, const VertexPartition& p,
                                const EdgeColouring& c);

// Hand-built digraph for exercising the checkers on synthetic inputs.
GalvinOrientation make_orientation(int node_count, int k, std::vector<Arc> arcs);

// Nodes whose outdegree exceeds k-1, with their outdegrees, ascending by node.
std::vector<std::pair<EdgeId, int>> check_outdegree(const GalvinOrientation& o, int k);

struct Kernel {
    std::vector<EdgeId> members;  // ascending
};

// Kernel of the subdigraph induced on `nodes`: an independent set every
// outside node sends an arc into.  Returns the lexicographically least
// kernel (by ascending member sequence) or nullopt when none exists.
// Refuses more than 25 nodes (ScaleLimitError).
std::optional<Kernel> find_kernel(const std::vector<EdgeId>& nodes, const GalvinOrientation& o);

// Cliques of the line graph of g (adjacent pairs, triangle triples, full
// stars) whose induced subdigraphs have no kernel.  Pairs that fail appear
// before triangles, then stars; each returned set is ascending.
std::vector<std::vector<EdgeId>> check_clique_kernels(const MultiGraph& g,
                                                      const GalvinOrientation& o);

struct OddCycleReport {
    // Directed odd cycles with neither a chord (an arc joining two
    // non-consecutive cycle nodes) nor a pseudochord (an arc reversing a
    // cycle arc), as node sequences starting at their smallest node.
    std::vector<std::vector<EdgeId>> bad_cycles;
    std::uint64_t steps = 0;        // DFS expansions spent
    bool budget_exhausted = false;  // true means "unverified", not "clean"
};

inline constexpr std::uint64_t kDefaultCycleBudget = 1u << 22;

// Enumerates exactly the chord- and pseudochord-free directed cycles and
// reports the odd ones (length >= 3).  The search never walks a prefix that
// already has a chord or pseudochord, so dense even-cycle structure does not
// blow it up.  stop_at_first makes it return after one bad cycle.
OddCycleReport check_odd_cycles(const GalvinOrientation& o,
                                std::uint64_t budget = kDefaultCycleBudget,
                                bool stop_at_first = false);

struct PropernessReport {
    bool verdict = false;  // true iff all three lists empty and cycles fully verified
    std::vector<std::pair<EdgeId, int>> outdegree_violations;
    std::vector<std::vector<EdgeId>> kernelless_cliques;
    std::vector<std::vector<EdgeId>> bad_odd_cycles;
    bool odd_cycles_unverified = false;
    std::uint64_t cycle_steps = 0;
};

// Full properness check of (partition, colouring) against k: outdegrees at
// most k-1 and kernel-perfectness via the clique-kernel and odd-cycle
// characterization.  Throws on malformed input; never "passes" an instance
// it could not fully check (budget exhaustion flips odd_cycles_unverified
// and the verdict stays false).
PropernessReport verify_proper(const MultiGraph& g, const VertexPartition& p,
                               const EdgeColouring& c, int k,
                               std::uint64_t cycle_budget = kDefaultCycleBudget);

// Ground-truth kernel-perfectness: every nonempty induced subdigraph has a
// kernel, checked by exhaustive subset enumeration.  Refuses more than 16
// nodes (ScaleLimitError); 3^16 subset pairs is the practical ceiling.
bool is_kernel_perfect_bruteforce(const GalvinOrientation& o);

}  // namespace galvin
