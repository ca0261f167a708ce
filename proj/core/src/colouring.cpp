#include "galvin/colouring.hpp"

#include <string>

#include "galvin/errors.hpp"

namespace galvin {

void validate_colouring(const MultiGraph& g, const EdgeColouring& c) {
    if (static_cast<int>(c.colour.size()) != g.edge_count())
        throw PreconditionError("colouring covers " + std::to_string(c.colour.size()) +
                                " edges, graph has " + std::to_string(g.edge_count()));
    if (c.k < 0 || (g.edge_count() > 0 && c.k < 1))
        throw PreconditionError("colour count k must be positive");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (c.colour[e] < 1 || c.colour[e] > c.k)
            throw PreconditionError("edge " + std::to_string(e) + " has colour " +
                                    std::to_string(c.colour[e]) + " outside 1.." +
                                    std::to_string(c.k));
}

void validate_partition(const MultiGraph& g, const VertexPartition& p) {
    if (static_cast<int>(p.side.size()) != g.vertex_count())
        throw PreconditionError("partition covers " + std::to_string(p.side.size()) +
                                " vertices, graph has " + std::to_string(g.vertex_count()));
}

bool is_proper_colouring(const MultiGraph& g, const EdgeColouring& c) {
    validate_colouring(g, c);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        const auto& inc = g.incident(v);
        for (std::size_t i = 0; i < inc.size(); ++i)
            for (std::size_t j = i + 1; j < inc.size(); ++j)
                if (c.colour[inc[i]] == c.colour[inc[j]]) return false;
    }
    return true;
}

VertexPartition swap_partition(const VertexPartition& p) {
    VertexPartition q = p;
    for (auto& s : q.side) s = (s == Side::D) ? Side::U : Side::D;
    return q;
}

EdgeColouring reverse_colouring(const EdgeColouring& c) {
    EdgeColouring r = c;
    for (auto& col : r.colour) col = c.k + 1 - col;
    return r;
}

}  // namespace galvin
