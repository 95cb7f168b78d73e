#include "quiverkit/dot.hpp"

#include "quiverkit/scc.hpp"

namespace quiverkit {

std::string export_dot(const Graph& g) {
    SccPartition scc = scc_condense(g);
    std::string s = "digraph G {\n";
    std::size_t cluster = 0;
    std::vector<bool> clustered(g.vertex_count(), false);
    for (std::size_t k = 0; k < scc.classes.size(); ++k) {
        if (!scc.class_has_cycle[k]) continue;
        s += "  subgraph cluster_" + std::to_string(cluster++) + " {\n";
        for (VertexIdx v : scc.classes[k]) {
            s += "    \"" + g.vertex_id(v) + "\";\n";
            clustered[v] = true;
        }
        s += "  }\n";
    }
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        if (!clustered[v]) s += "  \"" + g.vertex_id(v) + "\";\n";
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        s += "  \"" + g.vertex_id(g.src(e)) + "\" -> \"" + g.vertex_id(g.dst(e)) +
             "\" [label=\"" + g.edge_id(e) + "\"";
        if (scc.class_of[g.src(e)] != scc.class_of[g.dst(e)]) s += ", style=dashed";
        s += "];\n";
    }
    return s + "}\n";
}

} // namespace quiverkit
