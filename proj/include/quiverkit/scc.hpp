#pragma once

#include "quiverkit/graph.hpp"

namespace quiverkit {

/// Left-sided notions use sources and left socles; right-sided ones the
/// duals.  Every right-sided computation is the left one on the reversed
/// graph.
enum class Side { Left, Right };

/// Strongly connected components in canonical form: classes ordered by their
/// smallest vertex index, members ascending.  A class "has a cycle" when some
/// edge keeps both endpoints inside it (covers loops and nontrivial classes).
struct SccPartition {
    std::vector<std::vector<VertexIdx>> classes;
    std::vector<std::uint32_t> class_of;
    std::vector<bool> class_has_cycle;
    /// Distinct inter-class edges of the condensation, sorted pairs.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> condensation_edges;

    bool vertex_on_cycle(VertexIdx v) const { return class_has_cycle[class_of[v]]; }
};

SccPartition scc_condense(const Graph& g);

/// Vertices lying on some closed path, ascending.
std::vector<VertexIdx> cycle_vertices(const Graph& g);

/// Collapse of the graph through all cycle vertices.
Graph skeleton(const Graph& g);

/// Iterated source (or sink) stages: stage i holds the sources of what is
/// left after removing stages 0..i-1.  Peeling stops when no source remains;
/// `residue` is what survives.  On the left side the residue is exactly the
/// set of vertices reachable from a closed path.
struct SourceChain {
    std::vector<std::vector<VertexIdx>> stages;
    std::vector<VertexIdx> residue;
};

SourceChain source_chain(const Graph& g, Side side);

} // namespace quiverkit
