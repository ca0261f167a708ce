#include "galvin/chromatic.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "galvin/errors.hpp"

namespace galvin {

namespace {

// Try to k-edge-colour g; fills `col` (indexed by edge id) on success.
bool try_colour(const MultiGraph& g, int k, const std::vector<EdgeId>& order,
                std::vector<Colour>& col) {
    const int n = g.vertex_count();
    std::vector<std::vector<char>> used(n, std::vector<char>(k + 1, 0));
    std::fill(col.begin(), col.end(), 0);

    auto rec = [&](auto&& self, std::size_t idx, int max_used) -> bool {
        if (idx == order.size()) return true;
        EdgeId e = order[idx];
        VertexId a = g.edge(e).a, b = g.edge(e).b;
        int limit = std::min(k, max_used + 1);  // new colours in ascending order only
        for (Colour c = 1; c <= limit; ++c) {
            if (used[a][c] || used[b][c]) continue;
            used[a][c] = used[b][c] = 1;
            col[e] = c;
            if (self(self, idx + 1, std::max(max_used, c))) return true;
            used[a][c] = used[b][c] = 0;
            col[e] = 0;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

}  // namespace

ChromaticIndexResult chromatic_index(const MultiGraph& g, int edge_limit) {
    const int m = g.edge_count();
    if (m > edge_limit)
        throw ScaleLimitError("exact chromatic index limited to " + std::to_string(edge_limit) +
                              " edges, graph has " + std::to_string(m));

    ChromaticIndexResult r;
    if (m == 0) {
        r.chromatic_index = 0;
        r.witness.k = 0;
        return r;
    }

    std::vector<EdgeId> order(m);
    std::iota(order.begin(), order.end(), 0);
    auto degree_sum = [&](EdgeId e) { return g.degree(g.edge(e).a) + g.degree(g.edge(e).b); };
    std::stable_sort(order.begin(), order.end(),
                     [&](EdgeId x, EdgeId y) { return degree_sum(x) > degree_sum(y); });

    const int matching_cap = g.vertex_count() / 2;
    int k = g.max_degree();
    if (matching_cap > 0) k = std::max(k, (m + matching_cap - 1) / matching_cap);

    std::vector<Colour> col(m, 0);
    for (;; ++k) {
        if (matching_cap > 0 && static_cast<long long>(k) * matching_cap < m)
            continue;  // fewer colours than a matching bound allows
        if (try_colour(g, k, order, col)) {
            r.chromatic_index = k;
            r.witness.k = k;
            r.witness.colour = col;
            return r;
        }
    }
}

}  // namespace galvin
