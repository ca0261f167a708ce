#include "galvin/list_colouring.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "galvin/errors.hpp"

namespace galvin {

std::vector<Colour> list_edge_colour(const MultiGraph& g, const GalvinOrientation& o,
                                     const ListAssignment& lists) {
    const int m = g.edge_count();
    if (o.node_count != m)
        throw PreconditionError("orientation node count does not match the edge count");
    if (static_cast<int>(lists.lists.size()) != m)
        throw PreconditionError("need exactly one list per edge");

    const int k = o.k;
    int max_out = 0;
    for (int d : o.outdegree) max_out = std::max(max_out, d);
    if (k - 1 < max_out)
        throw PreconditionError("orientation outdegree " + std::to_string(max_out) +
                                " exceeds k-1 = " + std::to_string(k - 1));

    std::vector<std::set<Colour>> remaining(m);
    std::set<Colour> universe;
    for (EdgeId e = 0; e < m; ++e) {
        remaining[e].insert(lists.lists[e].begin(), lists.lists[e].end());
        if (static_cast<int>(remaining[e].size()) < k)
            throw PreconditionError("list of edge " + std::to_string(e) + " has fewer than " +
                                    std::to_string(k) + " distinct colours");
        universe.insert(remaining[e].begin(), remaining[e].end());
    }

    std::vector<Colour> result(m, 0);
    std::vector<char> uncoloured(m, 1);
    int left = m;
    for (Colour c : universe) {
        if (left == 0) break;
        std::vector<EdgeId> holders;
        for (EdgeId e = 0; e < m; ++e)
            if (uncoloured[e] && remaining[e].count(c)) holders.push_back(e);
        if (holders.empty()) continue;

        std::optional<Kernel> kernel = find_kernel(holders, o);
        if (!kernel)
            throw KernelFailureError("no kernel for the edges holding colour " + std::to_string(c),
                                     holders);
        for (EdgeId e : kernel->members) {
            result[e] = c;
            uncoloured[e] = 0;
            --left;
        }
        for (EdgeId e : holders)
            if (uncoloured[e]) remaining[e].erase(c);

        // each list entry lost at e is matched by a freshly coloured
        // out-neighbour, so the gap below must never close
        for (EdgeId e = 0; e < m; ++e) {
            if (!uncoloured[e]) continue;
            int out = 0;
            for (const Arc& a : o.arcs)
                if (a.from == e && uncoloured[a.to]) ++out;
            if (static_cast<int>(remaining[e].size()) <= out)
                throw InvariantError("edge " + std::to_string(e) + " has " +
                                     std::to_string(remaining[e].size()) +
                                     " list entries against outdegree " + std::to_string(out));
        }
    }
    if (left != 0) throw InvariantError("colours ran out before every edge was coloured");
    return result;
}

bool verify_list_colouring(const MultiGraph& g, const ListAssignment& lists,
                           const std::vector<Colour>& assignment) {
    const int m = g.edge_count();
    if (static_cast<int>(assignment.size()) != m)
        throw PreconditionError("assignment must cover every edge");
    if (static_cast<int>(lists.lists.size()) != m)
        throw PreconditionError("need exactly one list per edge");
    for (EdgeId e = 0; e < m; ++e) {
        const auto& list = lists.lists[e];
        if (std::find(list.begin(), list.end(), assignment[e]) == list.end()) return false;
    }
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        std::set<Colour> seen;
        for (EdgeId e : g.incident(v))
            if (!seen.insert(assignment[e]).second) return false;
    }
    return true;
}

}  // namespace galvin
