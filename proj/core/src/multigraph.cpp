#include "galvin/multigraph.hpp"

#include <algorithm>
#include <string>

#include "galvin/errors.hpp"

namespace galvin {

MultiGraph::MultiGraph(int vertex_count, std::vector<std::pair<int, int>> edges)
    : vertex_count_(vertex_count) {
    if (vertex_count < 0)
        throw PreconditionError("vertex count must be non-negative");
    edges_.reserve(edges.size());
    incidence_.assign(vertex_count_, {});
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        if (a < 0 || a >= vertex_count_ || b < 0 || b >= vertex_count_)
            throw PreconditionError("edge " + std::to_string(i) + " has endpoint outside 0.." +
                                    std::to_string(vertex_count_ - 1));
        if (a == b)
            throw PreconditionError("edge " + std::to_string(i) + " is a loop");
        EdgeId e = static_cast<EdgeId>(i);
        edges_.push_back({a, b});
        incidence_[a].push_back(e);
        incidence_[b].push_back(e);
    }
}

int MultiGraph::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
    return d;
}

bool MultiGraph::is_simple() const {
    for (VertexId v = 0; v < vertex_count_; ++v) {
        const auto& inc = incidence_[v];
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (other_end(inc[i], v) == other_end(inc[j], v)) return false;
    }
    return true;
}

bool MultiGraph::adjacent(VertexId u, VertexId v) const {
    for (EdgeId e : incidence_[u])
        if (other_end(e, u) == v) return true;
    return false;
}

std::vector<EdgeId> MultiGraph::parallel_class(VertexId u, VertexId v) const {
    std::vector<EdgeId> out;
    for (EdgeId e : incidence_[u])
        if (other_end(e, u) == v) out.push_back(e);
    std::sort(out.begin(), out.end());
    return out;
}

bool MultiGraph::connected() const {
    if (vertex_count_ <= 1) return true;
    std::vector<char> seen(vertex_count_, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        for (EdgeId e : incidence_[v]) {
            VertexId w = other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == vertex_count_;
}

MultiGraph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
    return MultiGraph(vertex_count, edges);
}

MultiGraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return MultiGraph(n, std::move(edges));
}

MultiGraph cycle_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return MultiGraph(n, std::move(edges));
}

MultiGraph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return MultiGraph(n, std::move(edges));
}

MultiGraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, (i + 1) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(5 + i, 5 + (i + 2) % 5);
    for (int i = 0; i < 5; ++i) edges.emplace_back(i, i + 5);
    return MultiGraph(10, std::move(edges));
}

}  // namespace galvin
