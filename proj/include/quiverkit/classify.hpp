#pragma once

#include <map>
#include <string>
#include <vector>

#include "quiverkit/cycles.hpp"
#include "quiverkit/element.hpp"

namespace quiverkit {

/// Answer of a decision procedure together with its evidence: a certificate
/// (kind "certificate") when true, a named counterexample otherwise.
struct Decision {
    bool value = false;
    Witness witness;
};

/// True iff the graph has no closed path.  Counterexample: a closed path's
/// edge ids; certificate: a topological order of the vertices.
Decision is_artinian(const Graph& g);

/// True iff the iterated source (sink) chain exhausts the graph.
/// Certificate: the stages; counterexample: the residue vertices.
Decision is_semiartinian(const Graph& g, Side side);

/// True iff every edge keeps both endpoints in one strongly connected
/// component.  Counterexample: a no-return edge.
Decision is_semiprime(const Graph& g);

/// True iff the graph is strongly connected and nonempty.  Counterexample:
/// an unreachable ordered vertex pair.
Decision is_prime(const Graph& g);

/// True iff strongly connected and every simple cycle has an exit; a single
/// vertex without a loop counts (the exit condition is vacuous).
Decision is_primitive(const Graph& g, std::size_t cycle_cap = 10000);

/// True iff the graph is exactly one vertex and no edges.
bool is_simple(const Graph& g);

/// True iff no simple cycle has an entry (left) / exit (right).
/// Counterexample: the cycle and the offending edge.
Decision is_noetherian(const Graph& g, Side side, std::size_t cycle_cap = 10000);

/// Sources (left) or sinks (right); these generate the socle.
std::vector<VertexIdx> socle_vertices(const Graph& g, Side side);

/// Explicit socle basis: all paths starting at a source (left) or ending at
/// a sink (right), in canonical order.  Only acyclic graphs have one.
std::vector<Path> socle_basis(const Graph& g, Side side);

/// Vertices generating the alpha-th member of the socle chain: the union of
/// the first alpha stages of the source chain.
std::vector<VertexIdx> socle_chain_ideal(const Graph& g, Side side, std::size_t alpha);

/// Edges whose endpoints lie in different strongly connected components;
/// they generate the radical.
std::vector<EdgeIdx> radical_edges(const Graph& g);

/// True iff every support path has length >= 1 and no return from its range
/// to its source.  Vertices are never in the radical; zero always is.
template <FieldScalar K>
bool radical_contains(const Element<K>& a) {
    const Graph& g = a.graph();
    for (const auto& [p, c] : a.terms()) {
        if (p.trivial()) return false;
        if (reaches(g, p.range(g), p.source())) return false;
    }
    return true;
}

enum class ComponentKind { SimpleVertex, Cycle, Primitive };

struct DecompComponent {
    std::vector<VertexIdx> vertices;
    ComponentKind kind = ComponentKind::SimpleVertex;
    std::size_t cycle_length = 0; // set when kind == Cycle

    bool operator==(const DecompComponent&) const = default;
};

struct Decomposition {
    std::vector<DecompComponent> components;

    bool operator==(const Decomposition&) const = default;
};

/// Splits a semiprime graph into its connected components, each a single
/// vertex, a cycle, or a primitive block.  Non-semiprime input is an error
/// carrying the no-return witness.
Decomposition decompose_semiprime(const Graph& g);

/// The same split applied to the strongly connected components of an
/// arbitrary graph; this is the semisimple-quotient shape.
Decomposition decompose_mod_radical(const Graph& g);

/// Block-triangular presentation of a one-sided noetherian algebra: the
/// cycle block, the acyclic block, and the finite generator set of the
/// connecting bimodule.
struct TriangularForm {
    std::vector<VertexIdx> s_block_vertices;
    std::vector<VertexIdx> t_block_vertices;
    std::vector<Path> b_generators;
};

TriangularForm triangular_form(const Graph& g, Side side, std::size_t cycle_cap = 10000);

/// Isomorphism invariant of a one-sided noetherian algebra: skeleton size
/// and the multiset of cycle lengths.
struct NoetherInvariant {
    std::size_t n0 = 0;
    std::vector<std::size_t> cycle_lengths; // ascending

    bool operator==(const NoetherInvariant&) const = default;
};

NoetherInvariant noether_invariant(const Graph& g, Side side, std::size_t cycle_cap = 10000);

/// Every decidable property of the algebra in one record, each answer backed
/// by a witness entry under its property name.
struct ClassificationReport {
    bool artinian = false;
    bool finite_dim = false;
    bool noetherian_left = false;
    bool noetherian_right = false;
    bool prime = false;
    bool primitive = false;
    bool semiartinian_left = false;
    bool semiartinian_right = false;
    bool semiprime = false;
    bool simple = false;
    std::map<std::string, Witness> witnesses;

    bool operator==(const ClassificationReport&) const = default;
};

ClassificationReport classification_report(const Graph& g, std::size_t cycle_cap = 10000);

} // namespace quiverkit
