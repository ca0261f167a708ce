#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "galvin/constructions.hpp"
#include "galvin/multigraph.hpp"

namespace galvin {

enum class SearchStatus : unsigned char { Found, Refuted, BudgetExhausted };

// Budget is spent on verification work, not on enumeration bookkeeping: one
// step per candidate that survives the outdegree filter, plus every odd-cycle
// DFS expansion.  The counters make negative results auditable:
// examined_colourings counts complete proper colourings evaluated (canonical
// class patterns times class-value orders) and examined_partitions counts
// (colouring, partition) candidates decided, including whole sweeps a
// per-colouring outdegree prescreen eliminated in bulk.  Both are
// deterministic for Refuted outcomes at any jobs count.
struct SearchOutcome {
    SearchStatus status = SearchStatus::Refuted;
    std::optional<Witness> witness;  // Found only
    std::uint64_t examined_colourings = 0;
    std::uint64_t examined_partitions = 0;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 100'000'000;

// Periodic snapshot for long searches: aggregate counters plus the canonical
// colouring index the reporting worker is at.  Invocations are serialized.
struct SearchProgress {
    std::uint64_t colourings = 0;
    std::uint64_t partitions = 0;
    std::uint64_t steps = 0;
    long long index = 0;
};
using SearchProgressFn = std::function<void(const SearchProgress&)>;

// Decides whether some (partition, proper k-edge-colouring) pair gives a
// proper Galvin orientation of L(g).  The enumeration is exhaustive up to
// two soundness-preserving reductions: colourings are enumerated as
// canonical class patterns (colours first used in ascending order of lowest
// edge id) combined with every order of the class values, which reaches
// every verdict because the orientation depends only on how colour values
// compare; and vertex 0 stays in D, since swapping the partition while
// reversing the colouring yields the identical arc set.  Refuted therefore
// means no witness exists (k below the chromatic index yields Refuted with
// zero counts, as no proper colouring exists at all).  A Found witness is
// re-verified with verify_proper before being returned, and whenever the
// budget is not exhausted it is the candidate with the least canonical
// index regardless of the jobs count.  Throws ScaleLimitError beyond 31
// vertices or 62 colours.
SearchOutcome search_proper(const MultiGraph& g, int k,
                            std::uint64_t budget = kDefaultSearchBudget, int jobs = 1,
                            const SearchProgressFn& progress = {});

// Smallest k in [chromatic_index(g), k_max] admitting a proper Galvin
// orientation.  Each level gets a fresh budget.  Found: k and witness are
// the answer.  Refuted: every level up to k_max is refuted, k = k_max.
// BudgetExhausted: levels below k are refuted, level k is unknown.
struct MinKOutcome {
    SearchStatus status = SearchStatus::Refuted;
    int k = 0;
    std::optional<Witness> witness;
    int first_k = 0;  // where the scan started (the chromatic index)
    std::uint64_t examined_colourings = 0;
    std::uint64_t examined_partitions = 0;
};

MinKOutcome min_k(const MultiGraph& g, int k_max, std::uint64_t budget = kDefaultSearchBudget,
                  int jobs = 1, const SearchProgressFn& progress = {});

// search_proper at k = max_degree(g), the level at which cliques of order
// at least 4 (and certain K4-free graphs) have no proper Galvin orientation.
// Requires a simple graph.
SearchOutcome refute_delta_witness(const MultiGraph& g,
                                   std::uint64_t budget = kDefaultSearchBudget, int jobs = 1,
                                   const SearchProgressFn& progress = {});

}  // namespace galvin
