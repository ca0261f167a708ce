#include "galvin/orientation.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "galvin/errors.hpp"

namespace galvin {

GalvinOrientation galvin_orient(const MultiGraph& g, const VertexPartition& p,
                                const EdgeColouring& c) {
    validate_partition(g, p);
    if (!is_proper_colouring(g, c))
        throw PreconditionError("colouring is not proper, cannot orient the line graph");

    GalvinOrientation o;
    o.node_count = g.edge_count();
    o.k = c.k;
    o.outdegree.assign(o.node_count, 0);
    for (const LineIncidence& inc : line_incidences(g)) {
        EdgeId lo = inc.e, hi = inc.f;
        if (c.colour[lo] > c.colour[hi]) std::swap(lo, hi);
        Arc a;
        a.witness = inc.shared;
        if (p.side[inc.shared] == Side::D) {
            a.from = hi;
            a.to = lo;
        } else {
            a.from = lo;
            a.to = hi;
        }
        o.outdegree[a.from] += 1;
        o.arcs.push_back(a);
    }
    return o;
}

GalvinOrientation make_orientation(int node_count, int k, std::vector<Arc> arcs) {
    if (node_count < 0) throw PreconditionError("node count may not be negative");
    GalvinOrientation o;
    o.node_count = node_count;
    o.k = k;
    o.outdegree.assign(node_count, 0);
    for (const Arc& a : arcs) {
        if (a.from < 0 || a.from >= node_count || a.to < 0 || a.to >= node_count)
            throw PreconditionError("arc endpoint outside 0.." + std::to_string(node_count - 1));
        if (a.from == a.to) throw PreconditionError("arc may not be a self-loop");
        o.outdegree[a.from] += 1;
    }
    o.arcs = std::move(arcs);
    return o;
}

std::vector<std::pair<EdgeId, int>> check_outdegree(const GalvinOrientation& o, int k) {
    std::vector<std::pair<EdgeId, int>> bad;
    for (EdgeId e = 0; e < o.node_count; ++e)
        if (o.outdegree[e] > k - 1) bad.emplace_back(e, o.outdegree[e]);
    return bad;
}

namespace {

// Deduplicated arc relation as bitset rows.  Arc multiplicity matters only
// for outdegrees, which GalvinOrientation tracks separately.
struct ArcRel {
    int n = 0;
    int words = 1;
    std::vector<std::uint64_t> out;  // row v: bits of {w : v->w}
    std::vector<std::uint64_t> adj;  // row v: bits of {w : v->w or w->v}

    explicit ArcRel(const GalvinOrientation& o) : n(o.node_count), words((o.node_count + 63) / 64) {
        if (words == 0) words = 1;
        out.assign(static_cast<std::size_t>(n) * words, 0);
        adj.assign(static_cast<std::size_t>(n) * words, 0);
        for (const Arc& a : o.arcs) {
            set(out, a.from, a.to);
            set(adj, a.from, a.to);
            set(adj, a.to, a.from);
        }
    }

    void set(std::vector<std::uint64_t>& rows, int r, int c) {
        rows[static_cast<std::size_t>(r) * words + c / 64] |= std::uint64_t{1} << (c % 64);
    }

    bool has_arc(int a, int b) const { return test(out, a, b); }
    bool adjacent(int a, int b) const { return test(adj, a, b); }

    const std::uint64_t* adj_row(int r) const {
        return adj.data() + static_cast<std::size_t>(r) * words;
    }

private:
    bool test(const std::vector<std::uint64_t>& rows, int r, int c) const {
        return (rows[static_cast<std::size_t>(r) * words + c / 64] >> (c % 64)) & 1u;
    }
};

// Lexicographically least kernel of the subdigraph induced by `nodes`
// (already sorted, deduplicated and validated).  Include-first DFS over the
// nodes in ascending order; distinct kernels are incomparable under
// inclusion, so the first kernel found this way is the lexicographically
// least one.  A branch dies as soon as an excluded node can no longer gain
// an arc into the kernel.
std::optional<Kernel> kernel_of_induced(const std::vector<EdgeId>& nodes,
                                        const GalvinOrientation& o) {
    const int s = static_cast<int>(nodes.size());
    if (s == 0) return Kernel{};
    if (s > 64) throw ScaleLimitError("kernel search refuses induced sets larger than 64");

    std::vector<std::uint64_t> out(s, 0), in(s, 0), adj(s, 0);
    std::vector<int> local(o.node_count, -1);
    for (int i = 0; i < s; ++i) local[nodes[i]] = i;
    for (const Arc& a : o.arcs) {
        int u = local[a.from], v = local[a.to];
        if (u < 0 || v < 0) continue;
        out[u] |= std::uint64_t{1} << v;
        in[v] |= std::uint64_t{1} << u;
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }
    const std::uint64_t all = s == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << s) - 1;

    std::uint64_t members = 0;
    std::uint64_t pending = 0;  // excluded nodes with no arc into the kernel yet

    auto search = [&](auto&& self, int v) -> bool {
        if (v == s) return pending == 0;
        const std::uint64_t bit = std::uint64_t{1} << v;
        const std::uint64_t later = all & ~(bit | (bit - 1));
        if ((adj[v] & members) == 0) {
            std::uint64_t satisfied = pending & in[v];
            members |= bit;
            pending &= ~satisfied;
            if (self(self, v + 1)) return true;
            members &= ~bit;
            pending |= satisfied;
        }
        if (out[v] & members) return self(self, v + 1);
        if ((out[v] & later) == 0) return false;
        pending |= bit;
        if (self(self, v + 1)) return true;
        pending &= ~bit;
        return false;
    };

    if (!search(search, 0)) return std::nullopt;
    Kernel k;
    for (int i = 0; i < s; ++i)
        if (members & (std::uint64_t{1} << i)) k.members.push_back(nodes[i]);
    return k;
}

std::vector<EdgeId> checked_node_set(std::vector<EdgeId> nodes, const GalvinOrientation& o) {
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
    for (EdgeId e : nodes)
        if (e < 0 || e >= o.node_count)
            throw PreconditionError("node " + std::to_string(e) + " outside the orientation");
    return nodes;
}

}  // namespace

std::optional<Kernel> find_kernel(const std::vector<EdgeId>& nodes, const GalvinOrientation& o) {
    std::vector<EdgeId> set = checked_node_set(nodes, o);
    if (set.size() > 25) throw ScaleLimitError("kernel search refuses node sets larger than 25");
    return kernel_of_induced(set, o);
}

std::vector<std::vector<EdgeId>> check_clique_kernels(const MultiGraph& g,
                                                      const GalvinOrientation& o) {
    if (o.node_count != g.edge_count())
        throw PreconditionError("orientation node count does not match the edge count");

    std::vector<std::vector<EdgeId>> candidates;
    std::set<std::vector<EdgeId>> seen;
    auto push = [&](std::vector<EdgeId> c) {
        std::sort(c.begin(), c.end());
        if (seen.insert(c).second) candidates.push_back(std::move(c));
    };

    for (const LineIncidence& inc : line_incidences(g)) push({inc.e, inc.f});
    for (std::vector<EdgeId>& clique : line_cliques(g)) push(std::move(clique));

    std::vector<std::vector<EdgeId>> kernelless;
    for (const std::vector<EdgeId>& clique : candidates)
        if (!kernel_of_induced(clique, o)) kernelless.push_back(clique);
    return kernelless;
}

OddCycleReport check_odd_cycles(const GalvinOrientation& o, std::uint64_t budget,
                                bool stop_at_first) {
    OddCycleReport report;
    const int n = o.node_count;
    if (n == 0) return report;

    ArcRel rel(o);
    // A cycle arc must not be reversed, so only one-way arcs can take part.
    std::vector<std::vector<int>> succ(n);
    for (const Arc& a : o.arcs)
        if (!rel.has_arc(a.to, a.from)) succ[a.from].push_back(a.to);
    for (std::vector<int>& s : succ) {
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }

    const int words = rel.words;
    std::vector<int> path;
    std::vector<char> on_path(n, 0);
    // interior[depth] = bits of path nodes other than the root and the
    // current last node, for the path of depth + 1 nodes
    std::vector<std::uint64_t> interior(static_cast<std::size_t>(n + 1) * words, 0);
    bool done = false;

    auto interior_at = [&](int depth) {
        return interior.data() + static_cast<std::size_t>(depth) * words;
    };

    auto extend = [&](auto&& self, int root) -> void {
        if (done) return;
        const int last = path.back();
        const int depth = static_cast<int>(path.size());
        const std::uint64_t* inner = interior_at(depth - 1);
        for (int w : succ[last]) {
            if (done) return;
            if (w <= root || on_path[w]) continue;
            if (++report.steps > budget) {
                report.budget_exhausted = true;
                done = true;
                return;
            }
            bool touches_interior = false;
            for (int i = 0; i < words && !touches_interior; ++i)
                if (rel.adj_row(w)[i] & inner[i]) touches_interior = true;
            if (touches_interior) continue;
            if (depth >= 2 && rel.adjacent(w, root)) {
                // adjacent to the root: closing the cycle is the only option
                if (rel.has_arc(w, root) && !rel.has_arc(root, w) && (depth + 1) % 2 == 1) {
                    std::vector<EdgeId> cycle(path.begin(), path.end());
                    cycle.push_back(w);
                    report.bad_cycles.push_back(std::move(cycle));
                    if (stop_at_first) {
                        done = true;
                        return;
                    }
                }
                continue;
            }
            std::uint64_t* next = interior_at(depth);
            std::copy(inner, inner + words, next);
            if (depth >= 2) next[last / 64] |= std::uint64_t{1} << (last % 64);
            path.push_back(w);
            on_path[w] = 1;
            self(self, root);
            on_path[w] = 0;
            path.pop_back();
        }
    };

    for (int root = 0; root < n && !done; ++root) {
        path.assign(1, root);
        on_path[root] = 1;
        std::fill(interior_at(0), interior_at(0) + words, 0);
        extend(extend, root);
        on_path[root] = 0;
    }
    return report;
}

PropernessReport verify_proper(const MultiGraph& g, const VertexPartition& p,
                               const EdgeColouring& c, int k, std::uint64_t cycle_budget) {
    if (k < 0) throw PreconditionError("k may not be negative");
    GalvinOrientation o = galvin_orient(g, p, c);

    PropernessReport report;
    report.outdegree_violations = check_outdegree(o, k);
    report.kernelless_cliques = check_clique_kernels(g, o);
    OddCycleReport cycles = check_odd_cycles(o, cycle_budget, false);
    report.bad_odd_cycles = cycles.bad_cycles;
    report.odd_cycles_unverified = cycles.budget_exhausted;
    report.cycle_steps = cycles.steps;
    report.verdict = report.outdegree_violations.empty() && report.kernelless_cliques.empty() &&
                     report.bad_odd_cycles.empty() && !report.odd_cycles_unverified;
    return report;
}

bool is_kernel_perfect_bruteforce(const GalvinOrientation& o) {
    const int n = o.node_count;
    if (n > 16) throw ScaleLimitError("brute force kernel perfection refuses more than 16 nodes");
    std::vector<std::uint32_t> out(n, 0), adj(n, 0);
    for (const Arc& a : o.arcs) {
        out[a.from] |= std::uint32_t{1} << a.to;
        adj[a.from] |= std::uint32_t{1} << a.to;
        adj[a.to] |= std::uint32_t{1} << a.from;
    }
    const std::uint32_t all = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
    for (std::uint32_t sub = all; sub > 0; sub = (sub - 1) & all) {
        bool has_kernel = false;
        for (std::uint32_t ker = sub;; ker = (ker - 1) & sub) {
            bool ok = true;
            for (std::uint32_t rest = ker; rest && ok;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (adj[v] & ker & ~(std::uint32_t{1} << v)) ok = false;
            }
            for (std::uint32_t rest = sub & ~ker; rest && ok;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                if (!(out[v] & ker)) ok = false;
            }
            if (ok) {
                has_kernel = true;
                break;
            }
            if (ker == 0) break;
        }
        if (!has_kernel) return false;
    }
    return true;
}

}  // namespace galvin
