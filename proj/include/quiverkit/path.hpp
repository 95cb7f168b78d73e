#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverkit/graph.hpp"

namespace quiverkit {

/// A path in a fixed ambient graph: the trivial path at a vertex (no edges)
/// or a nonempty chain of composable edges.  The base vertex is always the
/// source; for a nonempty chain it coincides with the source of the first
/// edge.  Paths do not carry their graph; validity is relative to the graph
/// they are used with.
class Path {
public:
    static Path at_vertex(VertexIdx v) { return Path(v, {}); }

    /// Builds a nonempty path and checks the chain composes inside g.
    static Path along(const Graph& g, std::vector<EdgeIdx> edges) {
        if (edges.empty())
            throw PreconditionError("empty edge chain has no base vertex");
        for (EdgeIdx e : edges)
            if (e >= g.edge_count())
                throw PreconditionError("edge index out of range");
        for (std::size_t i = 0; i + 1 < edges.size(); ++i)
            if (g.dst(edges[i]) != g.src(edges[i + 1]))
                throw PreconditionError("edges do not form a path");
        VertexIdx base = g.src(edges[0]);
        return Path(base, std::move(edges));
    }

    bool trivial() const { return edges_.empty(); }
    std::size_t length() const { return edges_.size(); }

    VertexIdx source() const { return base_; }
    VertexIdx range(const Graph& g) const {
        return edges_.empty() ? base_ : g.dst(edges_.back());
    }

    const std::vector<EdgeIdx>& edges() const { return edges_; }

    /// Vertex sequence visited, source first; length() + 1 entries.
    std::vector<VertexIdx> vertex_seq(const Graph& g) const {
        std::vector<VertexIdx> seq{base_};
        for (EdgeIdx e : edges_) seq.push_back(g.dst(e));
        return seq;
    }

    bool valid_in(const Graph& g) const {
        if (edges_.empty()) return base_ < g.vertex_count();
        for (EdgeIdx e : edges_)
            if (e >= g.edge_count()) return false;
        if (g.src(edges_[0]) != base_) return false;
        for (std::size_t i = 0; i + 1 < edges_.size(); ++i)
            if (g.dst(edges_[i]) != g.src(edges_[i + 1])) return false;
        return true;
    }

    bool operator==(const Path&) const = default;

    /// "v0" for a trivial path, "f0.f1" for an edge chain.
    std::string str(const Graph& g) const {
        if (edges_.empty()) return g.vertex_id(base_);
        std::string s = g.edge_id(edges_[0]);
        for (std::size_t i = 1; i < edges_.size(); ++i)
            s += "." + g.edge_id(edges_[i]);
        return s;
    }

private:
    Path(VertexIdx base, std::vector<EdgeIdx> edges)
        : base_(base), edges_(std::move(edges)) {}

    VertexIdx base_;
    std::vector<EdgeIdx> edges_;
};

/// Concatenation when r(p) = s(q), nothing otherwise; trivial paths act as
/// local units.  Both paths must be valid in g.
inline std::optional<Path> path_compose(const Graph& g, const Path& p, const Path& q) {
    if (!p.valid_in(g) || !q.valid_in(g))
        throw PreconditionError("path is not valid in this graph");
    if (p.range(g) != q.source()) return std::nullopt;
    if (p.trivial()) return q;
    if (q.trivial()) return p;
    std::vector<EdgeIdx> joined = p.edges();
    joined.insert(joined.end(), q.edges().begin(), q.edges().end());
    return Path::along(g, std::move(joined));
}

/// Canonical term order: by length, then trivial paths by vertex id rank,
/// then edge chains lexicographically by edge id rank.  Ties the serialized
/// form of elements to a single byte sequence per value.
struct PathLess {
    const Graph* g = nullptr;

    bool operator()(const Path& a, const Path& b) const {
        if (a.length() != b.length()) return a.length() < b.length();
        if (a.trivial())
            return g->vertex_lex_rank(a.source()) < g->vertex_lex_rank(b.source());
        const auto& ae = a.edges();
        const auto& be = b.edges();
        for (std::size_t i = 0; i < ae.size(); ++i) {
            auto ra = g->edge_lex_rank(ae[i]);
            auto rb = g->edge_lex_rank(be[i]);
            if (ra != rb) return ra < rb;
        }
        return false;
    }
};

} // namespace quiverkit
