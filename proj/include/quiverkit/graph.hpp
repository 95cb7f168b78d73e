#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "quiverkit/errors.hpp"

namespace quiverkit {

using VertexIdx = std::uint32_t;
using EdgeIdx = std::uint32_t;

/// Finite directed multigraph with named vertices and edges.  Loops and
/// parallel edges are allowed.  Vertex and edge ids live in one namespace
/// (no name may denote both); declaration order is kept and is the basis
/// for all deterministic output.  Graphs are built once and then treated
/// as immutable values.
class Graph {
public:
    VertexIdx add_vertex(std::string id);
    EdgeIdx add_edge(std::string id, const std::string& src_id, const std::string& dst_id);
    EdgeIdx add_edge(std::string id, VertexIdx src, VertexIdx dst);

    std::size_t vertex_count() const { return vertex_ids_.size(); }
    std::size_t edge_count() const { return edge_ids_.size(); }

    const std::string& vertex_id(VertexIdx v) const { return vertex_ids_[v]; }
    const std::string& edge_id(EdgeIdx e) const { return edge_ids_[e]; }
    VertexIdx src(EdgeIdx e) const { return src_[e]; }
    VertexIdx dst(EdgeIdx e) const { return dst_[e]; }

    std::optional<VertexIdx> find_vertex(const std::string& id) const;
    std::optional<EdgeIdx> find_edge(const std::string& id) const;

    /// Resolves an id or throws; used where the caller already validated
    /// existence is required.
    VertexIdx vertex(const std::string& id) const;
    EdgeIdx edge(const std::string& id) const;

    const std::vector<EdgeIdx>& out_edges(VertexIdx v) const { return out_[v]; }
    const std::vector<EdgeIdx>& in_edges(VertexIdx v) const { return in_[v]; }

    /// Position of the vertex id in lexicographic order over all vertex ids;
    /// cheap tie-free total order for canonical cycle rotation and printing.
    std::uint32_t vertex_lex_rank(VertexIdx v) const;
    std::uint32_t edge_lex_rank(EdgeIdx e) const;

    /// Structural equality: same ids in the same declaration order with the
    /// same endpoints.  Elements built over structurally equal graphs are
    /// interchangeable.
    bool operator==(const Graph& o) const;

private:
    void check_fresh_id(const std::string& id) const;

    std::vector<std::string> vertex_ids_;
    std::vector<std::string> edge_ids_;
    std::vector<VertexIdx> src_, dst_;
    std::vector<std::vector<EdgeIdx>> out_, in_;
    std::map<std::string, VertexIdx> vertex_by_id_;
    std::map<std::string, EdgeIdx> edge_by_id_;

    mutable std::vector<std::uint32_t> vertex_rank_, edge_rank_;
};

/// True for ids matching [A-Za-z0-9_]+.
bool is_valid_id(const std::string& id);

/// Same ids, every edge reversed.
Graph reverse_graph(const Graph& g);

/// Removes the listed vertices and every edge touching them.  Remaining
/// vertices and edges keep their ids and relative order.
Graph collapse_vertices(const Graph& g, const std::vector<VertexIdx>& removed);

/// Removes the listed edges; all vertices stay.
Graph collapse_edges(const Graph& g, const std::vector<EdgeIdx>& removed);

/// Vertices grouped by undirected connectivity (edge direction ignored),
/// components ordered by smallest member index, members ascending.
std::vector<std::vector<VertexIdx>> undirected_components(const Graph& g);

/// BFS reachability; a length-0 path makes every vertex reach itself.
bool reaches(const Graph& g, VertexIdx from, VertexIdx to);

/// Characteristic vector of the vertices reachable from `from`.
std::vector<bool> reachable_set(const Graph& g, VertexIdx from);

/// Parses the plain-text graph format: one declaration per line, either
/// "vertex <id>" or "edge <id> <src> <dst>", with blank lines and full-line
/// '#' comments allowed.  Errors carry 1-based line and column positions.
Graph parse_graph(const std::string& text);

} // namespace quiverkit
