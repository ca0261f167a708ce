#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace galvin {

using VertexId = int;
using EdgeId = int;

// Undirected multigraph: loop-free, parallel edges allowed.  Vertices are
// 0..n-1, edges keep the order they were given in and are addressed by
// 0-based id throughout the library.
class MultiGraph {
public:
    struct Edge {
        VertexId a = 0;
        VertexId b = 0;
    };

    MultiGraph() = default;

    // Throws PreconditionError on loops or endpoint ids outside 0..n-1.
    MultiGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Edge ids incident to v, ascending.
    const std::vector<EdgeId>& incident(VertexId v) const { return incidence_[v]; }

    int degree(VertexId v) const { return static_cast<int>(incidence_[v].size()); }
    int max_degree() const;

    VertexId other_end(EdgeId e, VertexId v) const {
        return edges_[e].a == v ? edges_[e].b : edges_[e].a;
    }

    // True when no two edges share both endpoints.
    bool is_simple() const;

    // True when some edge joins u and v (in either order).
    bool adjacent(VertexId u, VertexId v) const;

    // All edge ids joining u and v (the parallel class of the pair), ascending.
    std::vector<EdgeId> parallel_class(VertexId u, VertexId v) const;

    // True when the whole graph is connected (vacuously true for n <= 1).
    bool connected() const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

// Validating named constructor used by the JSON layer and tests; equivalent
// to the MultiGraph constructor.
MultiGraph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

// Convenience builders used all over the tests.
MultiGraph complete_graph(int n);
MultiGraph cycle_graph(int n);
MultiGraph path_graph(int n);

// The Petersen graph: outer 5-cycle on 0..4, inner pentagram on 5..9,
// spokes i -- i+5.  15 edges in that order.
MultiGraph petersen();

}  // namespace galvin
