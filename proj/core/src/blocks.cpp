#include "galvin/blocks.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "galvin/errors.hpp"

namespace galvin {

namespace {

bool block_is_bipartite(const MultiGraph& g, const std::vector<EdgeId>& edges) {
    std::map<VertexId, int> colour;
    std::multimap<VertexId, VertexId> adj;
    for (EdgeId e : edges) {
        adj.emplace(g.edge(e).a, g.edge(e).b);
        adj.emplace(g.edge(e).b, g.edge(e).a);
    }
    for (EdgeId e : edges) {
        VertexId root = g.edge(e).a;
        if (colour.count(root)) continue;
        colour[root] = 0;
        std::queue<VertexId> q;
        q.push(root);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            auto [lo, hi] = adj.equal_range(v);
            for (auto it = lo; it != hi; ++it) {
                VertexId w = it->second;
                auto found = colour.find(w);
                if (found == colour.end()) {
                    colour[w] = colour[v] ^ 1;
                    q.push(w);
                } else if (found->second == colour[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

void classify(const MultiGraph& g, Block& b) {
    if (block_is_bipartite(g, b.edges)) {
        b.kind = BlockKind::Bipartite;
        return;
    }
    const int n = static_cast<int>(b.vertices.size());
    const int m = static_cast<int>(b.edges.size());
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (EdgeId e : b.edges)
        pairs.insert({std::min(g.edge(e).a, g.edge(e).b), std::max(g.edge(e).a, g.edge(e).b)});
    auto joined = [&](VertexId u, VertexId v) {
        return pairs.count({std::min(u, v), std::max(u, v)}) > 0;
    };

    if (n == 4 && m == 6) {
        b.kind = BlockKind::FourClique;
        return;
    }

    if (m == 2 * n - 3 && n >= 3) {
        // Candidate spines in lexicographic endpoint order; every other
        // vertex must form a triangle with the spine, and the spikes must be
        // pairwise non-adjacent.
        for (const auto& [sv, sw] : pairs) {
            bool ok = true;
            std::vector<VertexId> spikes;
            for (VertexId x : b.vertices) {
                if (x == sv || x == sw) continue;
                if (!joined(x, sv) || !joined(x, sw)) {
                    ok = false;
                    break;
                }
                spikes.push_back(x);
            }
            if (ok)
                for (std::size_t i = 0; i < spikes.size() && ok; ++i)
                    for (std::size_t j = i + 1; j < spikes.size(); ++j)
                        if (joined(spikes[i], spikes[j])) {
                            ok = false;
                            break;
                        }
            if (ok && !spikes.empty()) {
                b.kind = BlockKind::TypeT;
                b.spikes = spikes;
                for (EdgeId e : b.edges) {
                    VertexId a = std::min(g.edge(e).a, g.edge(e).b);
                    VertexId c = std::max(g.edge(e).a, g.edge(e).b);
                    if (a == sv && c == sw) {
                        b.spine = e;
                        break;
                    }
                }
                return;
            }
        }
    }
    b.kind = BlockKind::Unclassified;
}

}  // namespace

BlockDecomposition classify_blocks(const MultiGraph& g) {
    if (!g.is_simple())
        throw PreconditionError("block classification requires a simple graph");
    if (!g.connected())
        throw PreconditionError("block classification requires a connected graph");

    const int n = g.vertex_count();
    BlockDecomposition out;
    if (g.edge_count() == 0) return out;

    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<EdgeId> stack;
    std::set<VertexId> cuts;
    int timer = 0;

    auto pop_block = [&](EdgeId until) {
        Block b;
        std::set<VertexId> vs;
        while (true) {
            EdgeId e = stack.back();
            stack.pop_back();
            b.edges.push_back(e);
            vs.insert(g.edge(e).a);
            vs.insert(g.edge(e).b);
            if (e == until) break;
        }
        std::sort(b.edges.begin(), b.edges.end());
        b.vertices.assign(vs.begin(), vs.end());
        out.blocks.push_back(std::move(b));
    };

    auto dfs = [&](auto&& self, VertexId u, EdgeId parent) -> void {
        disc[u] = low[u] = timer++;
        int children = 0;
        for (EdgeId e : g.incident(u)) {
            if (e == parent) continue;
            VertexId v = g.other_end(e, u);
            if (disc[v] == -1) {
                ++children;
                stack.push_back(e);
                self(self, v, e);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    if (parent != -1 || children > 1) cuts.insert(u);
                    pop_block(e);
                }
            } else if (disc[v] < disc[u]) {
                stack.push_back(e);
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    dfs(dfs, 0, -1);

    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const Block& x, const Block& y) { return x.edges.front() < y.edges.front(); });
    for (auto& b : out.blocks) classify(g, b);
    out.cut_vertices.assign(cuts.begin(), cuts.end());
    return out;
}

bool has_long_odd_cycle(const MultiGraph& g) {
    if (!g.is_simple())
        throw PreconditionError("odd cycle detection requires a simple graph");

    const int n = g.vertex_count();
    std::vector<char> on_path(n, 0);
    std::vector<VertexId> path;

    // Simple cycles rooted at their smallest vertex; each cycle is seen once
    // because the walk's second vertex must stay below its last.
    auto extend = [&](auto&& self, VertexId root, VertexId v) -> bool {
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.other_end(e, v);
            if (w == root && path.size() >= 3) {
                if (path[1] < path.back() && path.size() >= 5 && path.size() % 2 == 1) return true;
                continue;
            }
            if (w <= root || on_path[w]) continue;
            on_path[w] = 1;
            path.push_back(w);
            if (self(self, root, w)) return true;
            path.pop_back();
            on_path[w] = 0;
        }
        return false;
    };

    for (VertexId root = 0; root < n; ++root) {
        std::fill(on_path.begin(), on_path.end(), 0);
        path.assign(1, root);
        on_path[root] = 1;
        if (extend(extend, root, root)) return true;
    }
    return false;
}

}  // namespace galvin
