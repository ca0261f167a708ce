#include "galvin/dot_export.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>
#include <vector>

#include "galvin/errors.hpp"

namespace galvin {

std::string orientation_to_dot(const GalvinOrientation& o, const EdgeColouring& c) {
    if (static_cast<int>(c.colour.size()) != o.node_count)
        throw PreconditionError("colouring does not cover the orientation's nodes");

    std::vector<Arc> arcs = o.arcs;
    std::sort(arcs.begin(), arcs.end(), [](const Arc& x, const Arc& y) {
        return std::tie(x.from, x.to, x.witness) < std::tie(y.from, y.to, y.witness);
    });

    std::ostringstream out;
    out << "digraph galvin {\n";
    for (int e = 0; e < o.node_count; ++e)
        out << "  e" << e << " [label=\"e" << e << ":c" << c.colour[e] << "\"];\n";
    for (const Arc& a : arcs)
        out << "  e" << a.from << " -> e" << a.to << " [label=\"" << a.witness << "\"];\n";
    out << "}\n";
    return out.str();
}

std::string witness_to_dot(const MultiGraph& g, const Witness& w) {
    return orientation_to_dot(galvin_orient(g, w.partition, w.colouring), w.colouring);
}

}  // namespace galvin
