#pragma once

#include <memory>
#include <string>
#include <vector>

#include "quiverkit/element.hpp"

namespace quiverkit {

/// A homogeneous generator set for a monomial two-sided ideal: either all
/// vertices or all edges of the ambient graph.
struct ResolvedGenerators {
    bool vertex_kind = true;
    std::vector<std::uint32_t> indices;
};

/// Resolves generator ids against the graph.  Vertex and edge generators may
/// not be mixed; unknown ids are rejected.
inline ResolvedGenerators resolve_generators(const Graph& g,
                                             const std::vector<std::string>& ids) {
    ResolvedGenerators r;
    bool saw_vertex = false, saw_edge = false;
    for (const auto& id : ids) {
        if (auto v = g.find_vertex(id)) {
            saw_vertex = true;
            r.indices.push_back(*v);
        } else if (auto e = g.find_edge(id)) {
            saw_edge = true;
            r.indices.push_back(*e);
        } else {
            throw PreconditionError("unknown id '" + id + "'");
        }
        if (saw_vertex && saw_edge)
            throw PreconditionError("mixed generator kinds");
    }
    r.vertex_kind = !saw_edge;
    return r;
}

/// True when the path lies in the two-sided ideal spanned by the generators:
/// it visits a generator vertex, or uses a generator edge.
inline bool path_in_ideal(const Graph& g, const ResolvedGenerators& gen, const Path& p) {
    if (gen.vertex_kind) {
        for (VertexIdx v : p.vertex_seq(g))
            for (std::uint32_t x : gen.indices)
                if (v == x) return true;
        return false;
    }
    for (EdgeIdx e : p.edges())
        for (std::uint32_t y : gen.indices)
            if (e == y) return true;
    return false;
}

/// Membership in the two-sided ideal generated by the given vertices or
/// edges.  The ideal is spanned by the paths it contains, so an element
/// belongs exactly when every support path does.  Zero always belongs.
template <FieldScalar K>
bool ideal_contains(const Graph& g, const std::vector<std::string>& generator_ids,
                    const Element<K>& a) {
    ResolvedGenerators gen = resolve_generators(g, generator_ids);
    for (const auto& [p, c] : a.terms())
        if (!path_in_ideal(g, gen, p)) return false;
    return true;
}

/// Image of a in KE/(X), realized over the collapse graph: support paths in
/// the ideal are dropped, the rest are reinterpreted by id in the collapsed
/// graph.  The result's ambient graph is built fresh; structural equality
/// makes results from separate calls interoperable.
template <FieldScalar K>
Element<K> quotient_project(const Element<K>& a, const std::vector<std::string>& generator_ids) {
    const Graph& g = a.graph();
    ResolvedGenerators gen = resolve_generators(g, generator_ids);
    Graph collapsed = gen.vertex_kind
        ? collapse_vertices(g, std::vector<VertexIdx>(gen.indices.begin(), gen.indices.end()))
        : collapse_edges(g, std::vector<EdgeIdx>(gen.indices.begin(), gen.indices.end()));
    auto f = std::make_shared<const Graph>(std::move(collapsed));
    Element<K> r(f);
    for (const auto& [p, c] : a.terms()) {
        if (path_in_ideal(g, gen, p)) continue;
        if (p.trivial()) {
            r.add_term(Path::at_vertex(f->vertex(g.vertex_id(p.source()))), c);
            continue;
        }
        std::vector<EdgeIdx> edges;
        for (EdgeIdx e : p.edges()) edges.push_back(f->edge(g.edge_id(e)));
        r.add_term(Path::along(*f, std::move(edges)), c);
    }
    return r;
}

} // namespace quiverkit
