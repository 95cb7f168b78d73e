#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "quiverkit/cycle_algebra.hpp"
#include "quiverkit/element.hpp"

namespace quiverkit {

enum class CentroidKind { Scalar, PolynomialOnCycle };

struct CentroidComponent {
    std::vector<VertexIdx> vertices;
    CentroidKind kind;
    std::size_t cycle_length; // 0 unless PolynomialOnCycle
    bool operator==(const CentroidComponent&) const = default;
};

/// Centroid shape, one entry per connected component: polynomial in the
/// component's turn when the component is exactly a cycle, scalar otherwise.
struct CentroidDescriptor {
    std::vector<CentroidComponent> components;
    bool operator==(const CentroidDescriptor&) const = default;
};

CentroidDescriptor centroid_descriptor(const Graph& g);

/// z = sum of the full turns c_i.  Multiplication by z commutes with both
/// module actions, so K[z] realizes the centroid of KC_n.
template <FieldScalar K>
Element<K> center_generator(const CycleAlgebra& c) {
    Element<K> z = Element<K>::zero(c.graph());
    for (std::size_t i = 0; i < c.n(); ++i)
        z.add_term(c.c_path(i), K::one());
    return z;
}

/// Outcome of propagating a corner seed across the graph: either a total
/// vertexwise assignment satisfying T(s)f = fT(r) on every edge, or the first
/// edge where no assignment can work.
template <FieldScalar K>
struct CentralizerResult {
    bool consistent;
    std::vector<Element<K>> values; // by vertex; partial when inconsistent
    std::optional<EdgeIdx> failing_edge;
};

namespace detail {

/// Remove the leading edge f from every term; nullopt if some term does not
/// start with f.
template <FieldScalar K>
std::optional<Element<K>> strip_leading(const Element<K>& a, EdgeIdx f) {
    const Graph& g = a.graph();
    Element<K> out = Element<K>::zero(a.ambient());
    for (const auto& [p, c] : a.terms()) {
        if (p.trivial() || p.edges().front() != f) return std::nullopt;
        std::vector<EdgeIdx> rest(p.edges().begin() + 1, p.edges().end());
        Path q = rest.empty() ? Path::at_vertex(g.dst(f)) : Path::along(g, std::move(rest));
        out.add_term(q, c);
    }
    return out;
}

/// Remove the trailing edge f from every term; nullopt if some term does not
/// end with f.
template <FieldScalar K>
std::optional<Element<K>> strip_trailing(const Element<K>& a, EdgeIdx f) {
    const Graph& g = a.graph();
    Element<K> out = Element<K>::zero(a.ambient());
    for (const auto& [p, c] : a.terms()) {
        if (p.trivial() || p.edges().back() != f) return std::nullopt;
        std::vector<EdgeIdx> rest(p.edges().begin(), p.edges().end() - 1);
        Path q = rest.empty() ? Path::at_vertex(g.src(f)) : Path::along(g, std::move(rest));
        out.add_term(q, c);
    }
    return out;
}

} // namespace detail

/// Extend a corner value at u to a centralizer candidate on all of A.  The
/// value at each neighbour is forced: across f with source known, T(r) is the
/// unique solution of f T(r) = T(s) f (f has trivial right annihilator in
/// r(f)A), and symmetrically backwards.  A final sweep checks every edge, so
/// a consistent result really is a centralizer on the vertex ideals.
template <FieldScalar K>
CentralizerResult<K> centralizer_extend(const std::shared_ptr<const Graph>& g,
                                        const std::string& u_id,
                                        const Element<K>& value_at_u) {
    if (undirected_components(*g).size() != 1)
        throw PreconditionError("graph is not connected");
    VertexIdx u = g->vertex(u_id);
    if (!(peirce_project(value_at_u, u_id, u_id) == value_at_u))
        throw PreconditionError("value is not in the corner at '" + u_id + "'");

    CentralizerResult<K> res;
    res.consistent = false;
    res.values.assign(g->vertex_count(), Element<K>::zero(g));
    std::vector<bool> known(g->vertex_count(), false);

    res.values[u] = value_at_u;
    known[u] = true;
    std::vector<VertexIdx> queue{u};
    while (!queue.empty()) {
        VertexIdx v = queue.back();
        queue.pop_back();
        for (EdgeIdx f : g->out_edges(v)) {
            VertexIdx r = g->dst(f);
            if (known[r]) continue;
            auto ef = Element<K>::path_term(g, Path::along(*g, {f}));
            auto forced = detail::strip_leading(res.values[v] * ef, f);
            if (!forced) {
                res.failing_edge = f;
                return res;
            }
            res.values[r] = *forced;
            known[r] = true;
            queue.push_back(r);
        }
        for (EdgeIdx f : g->in_edges(v)) {
            VertexIdx s = g->src(f);
            if (known[s]) continue;
            auto ef = Element<K>::path_term(g, Path::along(*g, {f}));
            auto forced = detail::strip_trailing(ef * res.values[v], f);
            if (!forced) {
                res.failing_edge = f;
                return res;
            }
            res.values[s] = *forced;
            known[s] = true;
            queue.push_back(s);
        }
    }

    for (EdgeIdx f = 0; f < g->edge_count(); ++f) {
        auto ef = Element<K>::path_term(g, Path::along(*g, {f}));
        if (!(res.values[g->src(f)] * ef == ef * res.values[g->dst(f)])) {
            res.failing_edge = f;
            return res;
        }
    }
    res.consistent = true;
    return res;
}

} // namespace quiverkit
