#include "galvin/bipartite.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "galvin/errors.hpp"

namespace galvin {

std::optional<Bipartition> bipartition(const MultiGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> colour(n, -1);
    for (VertexId root = 0; root < n; ++root) {
        if (colour[root] != -1) continue;
        colour[root] = 0;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                VertexId w = g.other_end(e, v);
                if (colour[w] == -1) {
                    colour[w] = colour[v] ^ 1;
                    q.push(w);
                } else if (colour[w] == colour[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    Bipartition b;
    for (VertexId v = 0; v < n; ++v) (colour[v] == 0 ? b.left : b.right).push_back(v);
    return b;
}

namespace {

// Proper max_degree(g)-edge-colouring of a bipartite multigraph.  For each
// edge (u, v) in id order: if no colour is free at both ends, swap the
// alternating alpha/beta Kempe chain starting at u.  The chain cannot reach
// v: it would be an even-length path between two adjacent vertices, which a
// bipartite graph does not have.
std::vector<Colour> kempe_colouring(const MultiGraph& g, int palette) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    std::vector<Colour> col(m, 0);
    // at[v][c] = edge at v coloured c, or -1
    std::vector<std::vector<EdgeId>> at(n, std::vector<EdgeId>(palette + 1, -1));

    auto first_free = [&](VertexId v) {
        for (Colour c = 1; c <= palette; ++c)
            if (at[v][c] == -1) return c;
        throw InvariantError("no free colour at vertex despite palette = max degree");
    };

    for (EdgeId e = 0; e < m; ++e) {
        VertexId u = g.edge(e).a, v = g.edge(e).b;
        Colour alpha = first_free(u);
        Colour use;
        if (at[v][alpha] == -1) {
            use = alpha;
        } else {
            Colour beta = first_free(v);
            if (at[u][beta] == -1) {
                use = beta;
            } else {
                std::vector<EdgeId> chain;
                VertexId x = u;
                Colour need = beta;
                while (at[x][need] != -1) {
                    EdgeId walk = at[x][need];
                    chain.push_back(walk);
                    x = g.other_end(walk, x);
                    need = (need == beta) ? alpha : beta;
                }
                for (EdgeId ce : chain) {
                    at[g.edge(ce).a][col[ce]] = -1;
                    at[g.edge(ce).b][col[ce]] = -1;
                }
                for (EdgeId ce : chain) {
                    col[ce] = (col[ce] == alpha) ? beta : alpha;
                    at[g.edge(ce).a][col[ce]] = ce;
                    at[g.edge(ce).b][col[ce]] = ce;
                }
                use = beta;
            }
        }
        col[e] = use;
        at[u][use] = e;
        at[v][use] = e;
    }
    return col;
}

}  // namespace

EdgeColouring bipartite_edge_colouring(const MultiGraph& g, int k,
                                       const std::map<VertexId, std::set<Colour>>& forbidden) {
    if (!bipartition(g))
        throw PreconditionError("bipartite edge colouring requires a bipartite graph");
    const int delta = g.max_degree();
    if (k < delta)
        throw PreconditionError("k = " + std::to_string(k) + " is below the maximum degree " +
                                std::to_string(delta));
    for (const auto& [v, bad] : forbidden) {
        if (v < 0 || v >= g.vertex_count())
            throw PreconditionError("constraint on vertex " + std::to_string(v) +
                                    " outside the graph");
        int banned = 0;
        for (Colour c : bad)
            if (c >= 1 && c <= k) ++banned;
        if (g.degree(v) + banned > k)
            throw PreconditionError("vertex " + std::to_string(v) + " needs " +
                                    std::to_string(g.degree(v)) + " colours but only " +
                                    std::to_string(k - banned) + " are allowed");
    }

    EdgeColouring out;
    out.k = k;
    out.colour.assign(g.edge_count(), 0);
    if (g.edge_count() == 0) return out;

    std::vector<Colour> base = kempe_colouring(g, delta);

    // Injectively relabel classes 1..delta into 1..k so that no class lands
    // on a colour forbidden at a vertex where the class appears.
    std::vector<std::set<Colour>> class_bad(delta + 1);
    for (const auto& [v, bad] : forbidden)
        for (EdgeId e : g.incident(v))
            for (Colour c : bad)
                if (c >= 1 && c <= k) class_bad[base[e]].insert(c);

    // Kuhn's matching between classes and target colours, scanned in order
    // so the relabeling is deterministic.
    std::vector<int> class_of_colour(k + 1, 0);
    std::vector<Colour> colour_of_class(delta + 1, 0);
    std::vector<char> visited(k + 1, 0);
    auto augment = [&](auto&& self, int cls) -> bool {
        for (Colour c = 1; c <= k; ++c) {
            if (visited[c] || class_bad[cls].count(c)) continue;
            visited[c] = 1;
            if (class_of_colour[c] == 0 || self(self, class_of_colour[c])) {
                class_of_colour[c] = cls;
                colour_of_class[cls] = c;
                return true;
            }
        }
        return false;
    };
    for (int cls = 1; cls <= delta; ++cls) {
        std::fill(visited.begin(), visited.end(), 0);
        if (!augment(augment, cls))
            throw PreconditionError("no relabeling of colour classes satisfies the constraints");
    }

    for (EdgeId e = 0; e < g.edge_count(); ++e) out.colour[e] = colour_of_class[base[e]];
    return out;
}

}  // namespace galvin
