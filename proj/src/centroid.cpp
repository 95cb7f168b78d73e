#include "quiverkit/centroid.hpp"

namespace quiverkit {

CentroidDescriptor centroid_descriptor(const Graph& g) {
    CentroidDescriptor d;
    for (auto& comp : undirected_components(g)) {
        CentroidComponent c;
        c.vertices = comp;
        // In-degree one and out-degree one across a connected component force
        // a single covering cycle.
        bool cycle = true;
        for (VertexIdx v : comp)
            if (g.out_edges(v).size() != 1 || g.in_edges(v).size() != 1) {
                cycle = false;
                break;
            }
        c.kind = cycle ? CentroidKind::PolynomialOnCycle : CentroidKind::Scalar;
        c.cycle_length = cycle ? comp.size() : 0;
        d.components.push_back(std::move(c));
    }
    return d;
}

} // namespace quiverkit
