#pragma once

#include <string>

#include "quiverkit/graph.hpp"

namespace quiverkit {

/// DOT rendering of the graph: strongly connected components that contain a
/// cycle become clusters, radical (no-return) edges are dashed, and all
/// ordering follows declaration order, so output is deterministic.
std::string export_dot(const Graph& g);

} // namespace quiverkit
