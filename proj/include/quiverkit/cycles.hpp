#pragma once

#include "quiverkit/scc.hpp"

namespace quiverkit {

/// A simple cycle as its edge sequence; consecutive edges compose, the last
/// closes to the first, and the source vertices are pairwise distinct.
using Cycle = std::vector<EdgeIdx>;

/// Every simple cycle exactly once, rotated to start at its lexicographically
/// smallest vertex id.  Search is restricted to one strongly connected
/// component at a time.  Throws CapExceeded once more than `cap` cycles
/// exist.
std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap);

struct ExitsEntries {
    std::vector<EdgeIdx> exits;
    std::vector<EdgeIdx> entries;
};

/// Exits share a source with some cycle edge without being it; entries share
/// a range.  Every edge of the graph is scanned against the definition,
/// including edges inside the cycle's own component.
ExitsEntries cycle_exits_entries(const Graph& g, const Cycle& cycle);

/// Source vertices along a validated cycle, in traversal order.
std::vector<VertexIdx> cycle_vertex_seq(const Graph& g, const Cycle& cycle);

} // namespace quiverkit
