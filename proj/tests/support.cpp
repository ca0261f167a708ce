#include "support.hpp"

#include <algorithm>
#include <cstdio>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

#ifndef GALVIN_CLI_PATH
#define GALVIN_CLI_PATH "galvin"
#endif

namespace galvin::test {

std::vector<Arc> oracle_arcs(const MultiGraph& g, const VertexPartition& p,
                             const EdgeColouring& c) {
    std::vector<Arc> arcs;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (EdgeId f = e + 1; f < g.edge_count(); ++f) {
            const auto& ee = g.edge(e);
            const auto& fe = g.edge(f);
            std::vector<VertexId> shared;
            if (ee.a == fe.a) shared.push_back(ee.a);
            if (ee.a == fe.b) shared.push_back(ee.a);
            if (ee.b == fe.a) shared.push_back(ee.b);
            if (ee.b == fe.b) shared.push_back(ee.b);
            for (VertexId w : shared) {
                const bool down = p.side[w] == Side::D;
                const EdgeId hi = c.colour[e] > c.colour[f] ? e : f;
                const EdgeId lo = hi == e ? f : e;
                arcs.push_back(down ? Arc{hi, lo, w} : Arc{lo, hi, w});
            }
        }
    return arcs;
}

namespace {

std::vector<std::uint32_t> out_masks(int node_count, const std::vector<Arc>& arcs) {
    std::vector<std::uint32_t> out(node_count, 0);
    for (const Arc& a : arcs) out[a.from] |= std::uint32_t{1} << a.to;
    return out;
}

}  // namespace

bool oracle_kernel_perfect(int node_count, const std::vector<Arc>& arcs) {
    if (node_count > 16) throw std::runtime_error("oracle_kernel_perfect cap is 16 nodes");
    const std::vector<std::uint32_t> out = out_masks(node_count, arcs);
    const std::uint32_t all = (std::uint32_t{1} << node_count) - 1;
    for (std::uint32_t s = 1; s <= all; ++s) {
        bool found = false;
        for (std::uint32_t k = s; k != 0 && !found; k = (k - 1) & s) {
            bool ok = true;
            for (int v = 0; v < node_count && ok; ++v) {
                const std::uint32_t bit = std::uint32_t{1} << v;
                if (!(s & bit)) continue;
                if (k & bit)
                    ok = (out[v] & k) == 0;  // independence
                else
                    ok = (out[v] & k) != 0;  // dominated
            }
            found = ok;
        }
        if (!found) return false;
    }
    return true;
}

std::vector<std::vector<int>> oracle_bad_odd_cycles(int node_count,
                                                    const std::vector<Arc>& arcs) {
    std::vector<std::uint32_t> out = out_masks(node_count, arcs);
    std::vector<std::vector<int>> bad;

    auto classify = [&](const std::vector<int>& cycle) {
        if (cycle.size() < 3 || cycle.size() % 2 == 0) return;
        const int t = static_cast<int>(cycle.size());
        std::vector<int> pos(node_count, -1);
        for (int i = 0; i < t; ++i) pos[cycle[i]] = i;
        for (int u = 0; u < node_count; ++u) {
            if (pos[u] < 0) continue;
            for (int v = 0; v < node_count; ++v) {
                if (pos[v] < 0 || !(out[u] & (std::uint32_t{1} << v)) || u == v) continue;
                if (cycle[(pos[u] + 1) % t] == v) continue;  // a cycle arc
                return;  // chord or pseudochord
            }
        }
        bad.push_back(cycle);
    };

    std::vector<int> path;
    auto dfs = [&](auto&& self, int root, int v, std::uint32_t on_path) -> void {
        for (int w = 0; w < node_count; ++w) {
            if (!(out[v] & (std::uint32_t{1} << w))) continue;
            if (w == root) {
                classify(path);
                continue;
            }
            if (w < root || (on_path & (std::uint32_t{1} << w))) continue;
            path.push_back(w);
            self(self, root, w, on_path | (std::uint32_t{1} << w));
            path.pop_back();
        }
    };
    for (int root = 0; root < node_count; ++root) {
        path.assign(1, root);
        dfs(dfs, root, root, std::uint32_t{1} << root);
    }
    std::sort(bad.begin(), bad.end());
    return bad;
}

bool oracle_proper(const MultiGraph& g, const VertexPartition& p, const EdgeColouring& c,
                   int k) {
    const std::vector<Arc> arcs = oracle_arcs(g, p, c);
    std::vector<int> outdeg(g.edge_count(), 0);
    for (const Arc& a : arcs) ++outdeg[a.from];
    for (int d : outdeg)
        if (d > k - 1) return false;
    return oracle_kernel_perfect(g.edge_count(), arcs);
}

bool oracle_search(const MultiGraph& g, int k) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    if (m == 0) return true;
    if (k < 1) return false;

    std::vector<int> colour(m, 1);
    EdgeColouring c;
    c.k = k;
    while (true) {
        c.colour = colour;
        bool proper = true;
        for (EdgeId e = 0; e < m && proper; ++e)
            for (EdgeId f = e + 1; f < m && proper; ++f) {
                const auto& ee = g.edge(e);
                const auto& fe = g.edge(f);
                const bool touch =
                    ee.a == fe.a || ee.a == fe.b || ee.b == fe.a || ee.b == fe.b;
                if (touch && colour[e] == colour[f]) proper = false;
            }
        if (proper) {
            for (std::uint32_t q = 0; q < (std::uint32_t{1} << n); ++q) {
                VertexPartition p;
                for (int v = 0; v < n; ++v)
                    p.side.push_back((q >> v) & 1 ? Side::U : Side::D);
                if (oracle_proper(g, p, c, k)) return true;
            }
        }
        int i = m - 1;
        while (i >= 0 && colour[i] == k) colour[i--] = 1;
        if (i < 0) return false;
        ++colour[i];
    }
}

MultiGraph random_simple_connected(int max_vertices, Rng& rng) {
    const int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % v), v);
    std::set<std::pair<int, int>> present(edges.begin(), edges.end());
    const int extras = static_cast<int>(rng() % (n + 1));
    for (int t = 0; t < extras; ++t) {
        int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        if (present.insert({a, b}).second) edges.emplace_back(a, b);
    }
    return build_graph(n, edges);
}

MultiGraph random_multigraph(int max_vertices, int max_edges, Rng& rng) {
    const int n = 2 + static_cast<int>(rng() % (max_vertices - 1));
    const int m = 1 + static_cast<int>(rng() % max_edges);
    std::vector<std::pair<int, int>> edges;
    while (static_cast<int>(edges.size()) < m) {
        const int a = static_cast<int>(rng() % n), b = static_cast<int>(rng() % n);
        if (a != b) edges.emplace_back(a, b);
    }
    return build_graph(n, edges);
}

MultiGraph random_bipartite(int max_edges, Rng& rng) {
    const int l = 1 + static_cast<int>(rng() % 4);
    const int r = 1 + static_cast<int>(rng() % 4);
    std::vector<std::pair<int, int>> all;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < r; ++j) all.emplace_back(i, l + j);
    std::shuffle(all.begin(), all.end(), rng);
    const int cap = std::min<int>(max_edges, static_cast<int>(all.size()));
    const int m = 1 + static_cast<int>(rng() % cap);
    all.resize(m);
    return build_graph(l + r, all);
}

namespace {

// Local edge list of one glue piece plus its vertex count.
struct Piece {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;
};

Piece bipartite_piece(Rng& rng) {
    // Random tree (bipartite, connected) plus extra same-parity-respecting
    // edges: every added edge joins vertices of opposite tree depth parity.
    Piece p;
    p.vertices = 2 + static_cast<int>(rng() % 7);
    std::vector<int> parity(p.vertices, 0);
    for (int v = 1; v < p.vertices; ++v) {
        const int parent = static_cast<int>(rng() % v);
        p.edges.emplace_back(parent, v);
        parity[v] = parity[parent] ^ 1;
    }
    std::set<std::pair<int, int>> present(p.edges.begin(), p.edges.end());
    const int extras = static_cast<int>(rng() % 4);
    for (int t = 0; t < extras; ++t) {
        int a = static_cast<int>(rng() % p.vertices);
        int b = static_cast<int>(rng() % p.vertices);
        if (a == b || parity[a] == parity[b]) continue;
        if (a > b) std::swap(a, b);
        if (present.insert({a, b}).second) p.edges.emplace_back(a, b);
    }
    return p;
}

Piece k4_piece() {
    return {4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

Piece type_t_piece(Rng& rng) {
    const int spikes = 1 + static_cast<int>(rng() % 4);
    Piece p;
    p.vertices = 2 + spikes;
    p.edges.emplace_back(0, 1);  // spine
    for (int i = 0; i < spikes; ++i) {
        p.edges.emplace_back(0, 2 + i);
        p.edges.emplace_back(1, 2 + i);
    }
    return p;
}

}  // namespace

MultiGraph random_maffray(Rng& rng) {
    const int pieces = 1 + static_cast<int>(rng() % 5);
    std::vector<std::pair<int, int>> edges;
    int total = 0;
    for (int t = 0; t < pieces; ++t) {
        Piece piece;
        switch (rng() % 3) {
            case 0: piece = bipartite_piece(rng); break;
            case 1: piece = k4_piece(); break;
            default: piece = type_t_piece(rng); break;
        }
        std::vector<int> map(piece.vertices);
        int next = total;
        int glue_local = 0;
        if (total > 0) glue_local = static_cast<int>(rng() % piece.vertices);
        for (int v = 0; v < piece.vertices; ++v)
            map[v] = (total > 0 && v == glue_local)
                         ? static_cast<int>(rng() % total)
                         : next++;
        for (auto [a, b] : piece.edges) edges.emplace_back(map[a], map[b]);
        total = next;
    }
    return build_graph(total, edges);
}

EdgeColouring random_proper_colouring(const MultiGraph& g, Rng& rng) {
    std::vector<EdgeId> order(g.edge_count());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);

    const int palette = 2 * g.max_degree() + 1;
    EdgeColouring c;
    c.colour.assign(g.edge_count(), 0);
    for (EdgeId e : order) {
        std::set<Colour> seen;
        for (VertexId v : {g.edge(e).a, g.edge(e).b})
            for (EdgeId f : g.incident(v))
                if (c.colour[f] != 0) seen.insert(c.colour[f]);
        std::vector<Colour> allowed;
        for (Colour x = 1; x <= palette; ++x)
            if (!seen.count(x)) allowed.push_back(x);
        c.colour[e] = allowed[rng() % allowed.size()];
    }
    c.k = 0;
    for (Colour x : c.colour) c.k = std::max(c.k, x);
    c.k += static_cast<int>(rng() % 2);
    if (g.edge_count() == 0) c.k = 0;
    return c;
}

VertexPartition random_partition(const MultiGraph& g, Rng& rng) {
    VertexPartition p;
    for (int v = 0; v < g.vertex_count(); ++v)
        p.side.push_back(rng() % 2 ? Side::U : Side::D);
    return p;
}

ListAssignment random_lists(const MultiGraph& g, int size, int universe, Rng& rng) {
    ListAssignment lists;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::set<Colour> chosen;
        while (static_cast<int>(chosen.size()) < size)
            chosen.insert(1 + static_cast<int>(rng() % universe));
        lists.lists.emplace_back(chosen.begin(), chosen.end());
    }
    return lists;
}

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(GALVIN_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("popen failed for: " + cmd);
    CliResult result;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::string write_temp(const std::string& name, const std::string& text) {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "galvin_tests";
    fs::create_directories(dir);
    const fs::path path = dir / name;
    std::ofstream out(path, std::ios::binary);
    out << text;
    return path.string();
}

}  // namespace galvin::test
