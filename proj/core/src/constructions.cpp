#include "galvin/constructions.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <utility>

#include "galvin/bipartite.hpp"
#include "galvin/blocks.hpp"
#include "galvin/chromatic.hpp"
#include "galvin/errors.hpp"

namespace galvin {

Witness construct_bipartite(const MultiGraph& g) {
    std::optional<Bipartition> bp = bipartition(g);
    if (!bp) throw PreconditionError("graph is not bipartite");
    Witness w;
    w.k = g.max_degree();
    w.colouring = bipartite_edge_colouring(g, w.k);
    w.partition.side.assign(g.vertex_count(), Side::U);
    for (VertexId v : bp->left) w.partition.side[v] = Side::D;
    return w;
}

Witness construct_bip_plus_edge(const MultiGraph& g) {
    if (bipartition(g)) return construct_bipartite(g);

    const int k = chromatic_index(g).chromatic_index;
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const MultiGraph::Edge& e : g.edges())
        pairs.insert({std::min(e.a, e.b), std::max(e.a, e.b)});

    std::vector<EdgeId> chosen;
    VertexId ca = -1, cb = -1;
    bool any_restores_bipartite = false;
    MultiGraph rest(0, {});
    for (const auto& [a, b] : pairs) {
        std::vector<EdgeId> cls = g.parallel_class(a, b);
        std::vector<std::pair<VertexId, VertexId>> kept;
        std::set<EdgeId> drop(cls.begin(), cls.end());
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (!drop.count(e)) kept.push_back({g.edge(e).a, g.edge(e).b});
        MultiGraph candidate = build_graph(g.vertex_count(), kept);
        if (!bipartition(candidate)) continue;
        any_restores_bipartite = true;
        if (static_cast<int>(cls.size()) > (k + 1) / 2) continue;
        chosen = std::move(cls);
        ca = a;
        cb = b;
        rest = std::move(candidate);
        break;
    }
    if (chosen.empty()) {
        if (any_restores_bipartite)
            throw PreconditionError(
                "every parallel class restoring bipartiteness exceeds multiplicity "
                "floor((k+1)/2)");
        throw PreconditionError("no parallel class separates the graph from bipartiteness");
    }

    // Permute the exact colouring so the chosen class holds colours
    // 1..multiplicity; a colour bijection keeps the colouring proper.
    EdgeColouring exact = chromatic_index(g).witness;
    std::vector<Colour> class_colours;
    for (EdgeId e : chosen) class_colours.push_back(exact.colour[e]);
    std::sort(class_colours.begin(), class_colours.end());
    std::vector<Colour> relabel(k + 1, 0);
    Colour next = 1;
    for (Colour c : class_colours) relabel[c] = next++;
    for (Colour c = 1; c <= k; ++c)
        if (relabel[c] == 0) relabel[c] = next++;

    Witness w;
    w.k = k;
    w.colouring.k = k;
    w.colouring.colour.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) w.colouring.colour[e] = relabel[exact.colour[e]];

    // Two-colour the bipartite remainder so both class endpoints land in D.
    std::vector<int> parity(g.vertex_count(), -1);
    for (VertexId start = 0; start < g.vertex_count(); ++start) {
        if (parity[start] != -1) continue;
        std::vector<VertexId> component;
        parity[start] = 0;
        std::queue<VertexId> bfs;
        bfs.push(start);
        while (!bfs.empty()) {
            VertexId v = bfs.front();
            bfs.pop();
            component.push_back(v);
            for (EdgeId e : rest.incident(v)) {
                VertexId u = rest.other_end(e, v);
                if (parity[u] == -1) {
                    parity[u] = 1 - parity[v];
                    bfs.push(u);
                }
            }
        }
        bool flip = (parity[ca] == 1 && std::count(component.begin(), component.end(), ca)) ||
                    (parity[cb] == 1 && std::count(component.begin(), component.end(), cb));
        if (flip)
            for (VertexId v : component) parity[v] = 1 - parity[v];
    }
    if (parity[ca] != 0 || parity[cb] != 0)
        throw InvariantError("class endpoints refuse to share a bipartition side");
    w.partition.side.assign(g.vertex_count(), Side::U);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (parity[v] == 0) w.partition.side[v] = Side::D;
    return w;
}

int f_clique(int n) {
    if (n < 2) throw PreconditionError("f_clique requires n >= 2");
    static constexpr int adjust[4] = {0, 1, 2, 1};
    return 3 * (n - 1) / 2 + adjust[n % 4];
}

namespace {

// Round-robin edge colouring of an m-clique on local vertices 0..m-1,
// 0-based colours: (i+j) mod m when m is odd (m colours), and for even m the
// fixed vertex m-1 plays round 2i against i (m-1 colours).
int circle_colour(int i, int j, int m) {
    if (m % 2 == 1) return (i + j) % m;
    const int rounds = m - 1;
    if (i == m - 1) return (2 * j) % rounds;
    if (j == m - 1) return (2 * i) % rounds;
    return (i + j) % rounds;
}

int clique_band_width(int m) { return m < 2 ? 0 : (m % 2 == 0 ? m - 1 : m); }

}  // namespace

Witness construct_clique(int n) {
    const int k = f_clique(n);
    const int d = n / 2;
    const int u = n - d;
    const int low_band = clique_band_width(d);
    MultiGraph g = complete_graph(n);

    Witness w;
    w.k = k;
    w.colouring.k = k;
    w.colouring.colour.assign(g.edge_count(), 0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const VertexId a = g.edge(e).a, b = g.edge(e).b;
        Colour c;
        if (b < d)
            c = 1 + circle_colour(a, b, d);
        else if (a >= d)
            c = 1 + low_band + u + circle_colour(a - d, b - d, u);
        else
            c = 1 + low_band + (a + (b - d)) % u;
        w.colouring.colour[e] = c;
    }
    w.partition.side.assign(n, Side::U);
    for (VertexId v = 0; v < d; ++v) w.partition.side[v] = Side::D;
    return w;
}

namespace {

constexpr int kUnset = -1;
constexpr int kSideD = 0;
constexpr int kSideU = 1;

class BlockBuilder {
public:
    explicit BlockBuilder(const MultiGraph& g)
        : g_(g),
          k_(g.max_degree() + 1),
          colour_(g.edge_count(), 0),
          side_(g.vertex_count(), kUnset) {}

    Witness run() {
        if (!g_.is_simple()) throw PreconditionError("graph must be simple");
        if (g_.vertex_count() == 0) throw PreconditionError("graph must have a vertex");
        if (!g_.connected()) throw PreconditionError("graph must be connected");
        if (has_long_odd_cycle(g_))
            throw PreconditionError("graph has an odd cycle of length >= 5");

        side_[0] = kSideD;
        if (g_.edge_count() > 0) {
            decomposition_ = classify_blocks(g_);
            for (const Block& blk : decomposition_.blocks)
                if (blk.kind == BlockKind::Unclassified)
                    throw PreconditionError("block is neither bipartite, K4 nor type T");
            process_all();
        }

        for (EdgeId e = 0; e < g_.edge_count(); ++e)
            if (colour_[e] == 0) throw InvariantError("block traversal left an edge uncoloured");
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (side_[v] == kUnset) throw InvariantError("block traversal left a vertex unassigned");

        Witness w;
        w.k = k_;
        w.colouring.k = k_;
        w.colouring.colour = colour_;
        w.partition.side.assign(g_.vertex_count(), Side::U);
        for (VertexId v = 0; v < g_.vertex_count(); ++v)
            if (side_[v] == kSideD) w.partition.side[v] = Side::D;
        return w;
    }

private:
    const MultiGraph& g_;
    const int k_;
    std::vector<Colour> colour_;
    std::vector<int> side_;
    BlockDecomposition decomposition_;

    void process_all() {
        const auto& blocks = decomposition_.blocks;
        std::vector<std::vector<int>> at_vertex(g_.vertex_count());
        for (int i = 0; i < static_cast<int>(blocks.size()); ++i)
            for (VertexId v : blocks[i].vertices) at_vertex[v].push_back(i);

        std::vector<char> queued(blocks.size(), 0);
        std::queue<std::pair<int, VertexId>> order;
        order.push({at_vertex[0].front(), 0});
        queued[at_vertex[0].front()] = 1;
        while (!order.empty()) {
            auto [index, anchor] = order.front();
            order.pop();
            const Block& blk = blocks[index];
            process_block(blk, anchor);
            assert_partial();
            for (VertexId v : blk.vertices)
                for (int next : at_vertex[v])
                    if (!queued[next]) {
                        queued[next] = 1;
                        order.push({next, v});
                    }
        }
    }

    void process_block(const Block& blk, VertexId b) {
        for (VertexId v : blk.vertices)
            if (v != b && side_[v] != kUnset)
                throw InvariantError("block vertex was assigned before its block");
        for (EdgeId e : blk.edges)
            if (colour_[e] != 0) throw InvariantError("block edge was coloured before its block");
        switch (blk.kind) {
            case BlockKind::Bipartite: process_bipartite(blk, b); return;
            case BlockKind::FourClique: process_four_clique(blk, b); return;
            case BlockKind::TypeT: process_type_t(blk, b); return;
            case BlockKind::Unclassified: break;
        }
        throw InvariantError("no block case applies");
    }

    std::set<Colour> used_at(VertexId v) const {
        std::set<Colour> used;
        for (EdgeId e : g_.incident(v))
            if (colour_[e] != 0) used.insert(colour_[e]);
        return used;
    }

    std::vector<Colour> free_at(VertexId v) const {
        std::set<Colour> used = used_at(v);
        std::vector<Colour> free;
        for (Colour c = 1; c <= k_; ++c)
            if (!used.count(c)) free.push_back(c);
        return free;
    }

    EdgeId edge_between(const Block& blk, VertexId x, VertexId y) const {
        for (EdgeId e : blk.edges) {
            const auto& ed = g_.edge(e);
            if ((ed.a == x && ed.b == y) || (ed.a == y && ed.b == x)) return e;
        }
        throw InvariantError("expected block edge is missing");
    }

    void give_side(VertexId v, int s) {
        if (side_[v] == kUnset) side_[v] = s;
        else if (side_[v] != s)
            throw InvariantError("conflicting side assignment");
    }

    void process_bipartite(const Block& blk, VertexId b) {
        std::vector<VertexId> vs = blk.vertices;
        std::vector<int> local(g_.vertex_count(), -1);
        for (int i = 0; i < static_cast<int>(vs.size()); ++i) local[vs[i]] = i;
        std::vector<std::pair<VertexId, VertexId>> ledges;
        for (EdgeId e : blk.edges) ledges.push_back({local[g_.edge(e).a], local[g_.edge(e).b]});
        MultiGraph sub = build_graph(static_cast<int>(vs.size()), ledges);

        std::map<VertexId, std::set<Colour>> forbidden;
        std::set<Colour> used = used_at(b);
        if (!used.empty()) forbidden[local[b]] = used;
        EdgeColouring sc = bipartite_edge_colouring(sub, k_, forbidden);
        for (int i = 0; i < static_cast<int>(blk.edges.size()); ++i)
            colour_[blk.edges[i]] = sc.colour[i];

        std::vector<int> parity(vs.size(), -1);
        parity[local[b]] = 0;
        std::queue<int> bfs;
        bfs.push(local[b]);
        while (!bfs.empty()) {
            int v = bfs.front();
            bfs.pop();
            for (EdgeId e : sub.incident(v)) {
                int u = sub.other_end(e, v);
                if (parity[u] == -1) {
                    parity[u] = 1 - parity[v];
                    bfs.push(u);
                }
            }
        }
        for (int i = 0; i < static_cast<int>(vs.size()); ++i) {
            if (parity[i] == -1) throw InvariantError("block is not connected");
            give_side(vs[i], parity[i] == 0 ? side_[b] : 1 - side_[b]);
        }
    }

    void process_four_clique(const Block& blk, VertexId b) {
        std::vector<VertexId> others;
        for (VertexId v : blk.vertices)
            if (v != b) others.push_back(v);
        const VertexId x = others[0], y = others[1], z = others[2];
        const EdgeId bx = edge_between(blk, b, x), by = edge_between(blk, b, y),
                     bz = edge_between(blk, b, z), xy = edge_between(blk, x, y),
                     xz = edge_between(blk, x, z), yz = edge_between(blk, y, z);

        std::vector<Colour> lows, highs;
        for (Colour c : free_at(b)) (is_low_colour(c, k_) ? lows : highs).push_back(c);
        const int nl = static_cast<int>(lows.size()), nh = static_cast<int>(highs.size());

        if (side_[b] == kSideD && nl >= 3) {
            colour_[bx] = colour_[yz] = lows[0];
            colour_[by] = colour_[xz] = lows[1];
            colour_[bz] = colour_[xy] = lows[2];
            for (VertexId v : others) give_side(v, kSideD);
        } else if (side_[b] == kSideU && nh >= 3) {
            colour_[bx] = colour_[yz] = highs[nh - 1];
            colour_[by] = colour_[xz] = highs[nh - 2];
            colour_[bz] = colour_[xy] = highs[nh - 3];
            for (VertexId v : others) give_side(v, kSideU);
        } else if (side_[b] == kSideD && nh >= 4) {
            const Colour alpha = highs[0], beta = highs[1], gamma = highs[2], tau = highs[3];
            colour_[bx] = alpha;
            colour_[by] = beta;
            colour_[bz] = gamma;
            colour_[xz] = tau;
            colour_[xy] = gamma;
            colour_[yz] = alpha;
            for (VertexId v : others) give_side(v, kSideU);
        } else if (side_[b] == kSideU && nl >= 4) {
            const Colour alpha = lows[nl - 1], beta = lows[nl - 2], gamma = lows[nl - 3],
                         tau = lows[nl - 4];
            colour_[bx] = alpha;
            colour_[by] = beta;
            colour_[bz] = gamma;
            colour_[xz] = tau;
            colour_[xy] = gamma;
            colour_[yz] = alpha;
            for (VertexId v : others) give_side(v, kSideD);
        } else if (side_[b] == kSideD && nl >= 1 && nl + nh >= 4) {
            const Colour alpha = lows[0];
            const Colour beta = nl >= 2 ? lows[1] : highs[0];
            const Colour gamma = nl >= 2 ? highs[0] : highs[1];
            const Colour tau = nl >= 2 ? highs[1] : highs[2];
            colour_[bx] = alpha;
            colour_[by] = beta;
            colour_[bz] = gamma;
            colour_[yz] = tau;
            colour_[xy] = gamma;
            colour_[xz] = beta;
            give_side(x, kSideD);
            give_side(y, kSideU);
            give_side(z, kSideU);
        } else if (side_[b] == kSideU && nh >= 1 && nl + nh >= 4) {
            const Colour alpha = highs[nh - 1];
            const Colour beta = nh >= 2 ? highs[nh - 2] : lows[nl - 1];
            const Colour gamma = nh >= 2 ? lows[nl - 1] : lows[nl - 2];
            const Colour tau = nh >= 2 ? lows[nl - 2] : lows[nl - 3];
            colour_[bx] = alpha;
            colour_[by] = beta;
            colour_[bz] = gamma;
            colour_[yz] = tau;
            colour_[xy] = gamma;
            colour_[xz] = beta;
            give_side(x, kSideU);
            give_side(y, kSideD);
            give_side(z, kSideD);
        } else {
            throw InvariantError("no K4 case applies");
        }
    }

    Colour pick_free(VertexId v, Colour avoid, bool smallest) const {
        std::set<Colour> used = used_at(v);
        if (smallest) {
            for (Colour c = 1; c <= k_; ++c)
                if (c != avoid && !used.count(c)) return c;
        } else {
            for (Colour c = k_; c >= 1; --c)
                if (c != avoid && !used.count(c)) return c;
        }
        throw InvariantError("no free colour at a spike end");
    }

    void process_type_t(const Block& blk, VertexId b) {
        const VertexId sv = std::min(g_.edge(blk.spine).a, g_.edge(blk.spine).b);
        const VertexId sw = std::max(g_.edge(blk.spine).a, g_.edge(blk.spine).b);
        const bool b_is_spike = (b != sv && b != sw);
        std::vector<Colour> free = free_at(b);

        if (b_is_spike) {
            if (free.size() < 3) throw InvariantError("spike anchor has fewer than 3 free colours");
            const bool down = side_[b] == kSideD;
            colour_[edge_between(blk, b, sv)] = down ? free[0] : free[free.size() - 1];
            colour_[edge_between(blk, b, sw)] = down ? free[1] : free[free.size() - 2];
            colour_[blk.spine] = down ? k_ : 1;
            give_side(sv, down ? kSideU : kSideD);
            give_side(sw, down ? kSideU : kSideD);
            for (VertexId spike : blk.spikes) {
                if (spike == b) continue;
                give_side(spike, down ? kSideD : kSideU);
                Colour cv = pick_free(sv, 0, down);
                colour_[edge_between(blk, spike, sv)] = cv;
                colour_[edge_between(blk, spike, sw)] = pick_free(sw, cv, down);
            }
            return;
        }

        const VertexId other = (b == sv) ? sw : sv;
        const int p = static_cast<int>(blk.spikes.size());
        const int t = p + 2;
        if (static_cast<int>(free.size()) < t)
            throw InvariantError("spine anchor has fewer than deg+1 free colours");
        std::vector<Colour> lows, highs;
        for (Colour c : free) (is_low_colour(c, k_) ? lows : highs).push_back(c);

        if ((side_[b] == kSideD && !lows.empty()) || (side_[b] == kSideU && !highs.empty())) {
            const bool down = side_[b] == kSideD;
            colour_[blk.spine] = down ? free.front() : free.back();
            give_side(other, side_[b]);
            // the p free colours nearest the spine's colour, then one spare
            std::vector<Colour> near(p + 1);
            for (int i = 0; i <= p; ++i)
                near[i] = down ? free[1 + i] : free[free.size() - 2 - i];
            for (int i = 0; i < p; ++i) {
                give_side(blk.spikes[i], down ? kSideU : kSideD);
                colour_[edge_between(blk, b, blk.spikes[i])] = near[i];
            }
            if (p == 1) {
                colour_[edge_between(blk, blk.spikes[0], other)] = near[1];
            } else {
                for (int i = 0; i < p; ++i)
                    colour_[edge_between(blk, blk.spikes[i], other)] = near[(i + 1) % p];
            }
            return;
        }

        // no suitably-banded colour is free at b: take the t extreme free
        // colours, spine gets the innermost, spikes pair shifted colours
        const bool down = side_[b] == kSideD;
        std::vector<Colour> alpha(t + 1);
        for (int i = 1; i <= t; ++i)
            alpha[i] = down ? free[i - 1] : free[free.size() - i];
        colour_[blk.spine] = alpha[t];
        give_side(other, down ? kSideU : kSideD);
        for (int i = 1; i <= p; ++i) {
            give_side(blk.spikes[i - 1], down ? kSideU : kSideD);
            colour_[edge_between(blk, b, blk.spikes[i - 1])] = alpha[i + 1];
            colour_[edge_between(blk, blk.spikes[i - 1], other)] = alpha[i];
        }
    }

    void assert_partial() const {
        for (VertexId v = 0; v < g_.vertex_count(); ++v) {
            std::set<Colour> seen;
            for (EdgeId e : g_.incident(v))
                if (colour_[e] != 0 && !seen.insert(colour_[e]).second)
                    throw InvariantError("partial colouring is not proper");
        }
        for (EdgeId e = 0; e < g_.edge_count(); ++e) {
            if (colour_[e] == 0) continue;
            const VertexId a = g_.edge(e).a, bb = g_.edge(e).b;
            if (side_[a] == kUnset || side_[a] != side_[bb]) continue;
            const bool low = is_low_colour(colour_[e], k_);
            if (side_[a] == kSideD && !low)
                throw InvariantError("high colour between two D vertices");
            if (side_[a] == kSideU && low)
                throw InvariantError("low colour between two U vertices");
        }
        for (VertexId u = 0; u < g_.vertex_count(); ++u)
            for (VertexId v = u + 1; v < g_.vertex_count(); ++v)
                for (VertexId w = v + 1; w < g_.vertex_count(); ++w) {
                    if (!g_.adjacent(u, v) || !g_.adjacent(u, w) || !g_.adjacent(v, w)) continue;
                    if (side_[u] == kUnset || side_[v] == kUnset || side_[w] == kUnset) continue;
                    struct Leg {
                        Colour c;
                        VertexId p, q;
                    };
                    Leg legs[3] = {{0, u, v}, {0, u, w}, {0, v, w}};
                    legs[0].c = colour_of(u, v);
                    legs[1].c = colour_of(u, w);
                    legs[2].c = colour_of(v, w);
                    if (legs[0].c == 0 || legs[1].c == 0 || legs[2].c == 0) continue;
                    std::sort(std::begin(legs), std::end(legs),
                              [](const Leg& l, const Leg& r) { return l.c < r.c; });
                    const bool low_ok = side_[legs[0].p] == side_[legs[0].q];
                    const bool high_ok = side_[legs[2].p] == side_[legs[2].q];
                    if (!low_ok && !high_ok)
                        throw InvariantError("triangle has no same-side extreme edge");
                }
    }

    Colour colour_of(VertexId a, VertexId b) const {
        for (EdgeId e : g_.incident(a))
            if (g_.other_end(e, a) == b) return colour_[e];
        return 0;
    }
};

}  // namespace

Witness construct_no_long_odd(const MultiGraph& g) { return BlockBuilder(g).run(); }

}  // namespace galvin
