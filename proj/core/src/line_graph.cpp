#include "galvin/line_graph.hpp"

#include <algorithm>
#include <set>

namespace galvin {

std::vector<LineIncidence> line_incidences(const MultiGraph& g) {
    std::vector<LineIncidence> out;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                EdgeId e = std::min(inc[i], inc[j]);
                EdgeId f = std::max(inc[i], inc[j]);
                out.push_back({e, f, v});
            }
    }
    return out;
}

std::vector<std::vector<EdgeId>> line_cliques(const MultiGraph& g) {
    std::vector<std::vector<EdgeId>> out;
    std::set<std::vector<EdgeId>> seen;

    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 2) continue;
        std::vector<EdgeId> star = g.incident(v);
        std::sort(star.begin(), star.end());
        if (seen.insert(star).second) out.push_back(std::move(star));
    }

    // Triangles of the underlying simple graph, one edge per side.  With
    // parallel edges a triangle contributes one clique per class combination.
    for (VertexId u = 0; u < g.vertex_count(); ++u)
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            if (!g.adjacent(u, v)) continue;
            for (VertexId w = v + 1; w < g.vertex_count(); ++w) {
                if (!g.adjacent(u, w) || !g.adjacent(v, w)) continue;
                for (EdgeId e1 : g.parallel_class(u, v))
                    for (EdgeId e2 : g.parallel_class(u, w))
                        for (EdgeId e3 : g.parallel_class(v, w)) {
                            std::vector<EdgeId> tri{e1, e2, e3};
                            std::sort(tri.begin(), tri.end());
                            if (seen.insert(tri).second) out.push_back(std::move(tri));
                        }
            }
        }
    return out;
}

}  // namespace galvin
