#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quiverkit/path.hpp"

namespace quiverkit {

/// Shape of the corner uAu: K when no closed path passes through u, a
/// polynomial ring on the unique first-return path, or free on two or more
/// first-return paths.
enum class CornerKind { Scalar, Polynomial, Free };

struct CornerClass {
    CornerKind kind = CornerKind::Scalar;
    /// One witness for Polynomial (the unique first-return closed path at u),
    /// two distinct ones for Free, none for Scalar.
    std::vector<Path> witnesses;
};

/// Shortest closed path at u that does not revisit u in between, when one
/// exists.  Deterministic: out-edges are tried in lexicographic id order and
/// BFS parents are fixed the same way.
std::optional<Path> first_return_path(const Graph& g, VertexIdx u);

/// Classifies the corner uAu by the number of first-return closed paths at
/// u: none, exactly one, or at least two.
CornerClass corner_classify(const Graph& g, VertexIdx u);
CornerClass corner_classify(const Graph& g, const std::string& u_id);

} // namespace quiverkit
