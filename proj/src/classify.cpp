#include "quiverkit/classify.hpp"

#include <algorithm>

#include "quiverkit/corner.hpp"
#include "quiverkit/scc.hpp"

namespace quiverkit {

namespace {

std::vector<std::string> vertex_ids(const Graph& g, const std::vector<VertexIdx>& vs) {
    std::vector<std::string> out;
    out.reserve(vs.size());
    for (VertexIdx v : vs) out.push_back(g.vertex_id(v));
    return out;
}

std::vector<std::string> edge_ids(const Graph& g, const std::vector<EdgeIdx>& es) {
    std::vector<std::string> out;
    out.reserve(es.size());
    for (EdgeIdx e : es) out.push_back(g.edge_id(e));
    return out;
}

/// Any closed path, for witnessing non-artinian graphs: the first-return
/// path at the smallest cycle vertex.
std::vector<EdgeIdx> some_closed_path(const Graph& g, const SccPartition& scc) {
    for (const auto& cls : scc.classes)
        if (scc.class_has_cycle[scc.class_of[cls[0]]])
            return first_return_path(g, cls[0])->edges();
    return {};
}

/// All paths of an acyclic graph starting from `start`, the trivial one
/// excluded; callers add what they need.
void paths_from(const Graph& g, VertexIdx start, std::vector<Path>& out) {
    std::vector<EdgeIdx> walk;
    auto rec = [&](auto&& self, VertexIdx at) -> void {
        for (EdgeIdx e : g.out_edges(at)) {
            walk.push_back(e);
            out.push_back(Path::along(g, walk));
            self(self, g.dst(e));
            walk.pop_back();
        }
    };
    rec(rec, start);
}

} // namespace

Decision is_artinian(const Graph& g) {
    SccPartition scc = scc_condense(g);
    for (bool cyc : scc.class_has_cycle)
        if (cyc)
            return {false, {"closed-path", {edge_ids(g, some_closed_path(g, scc))}}};
    Witness w{"certificate", {}};
    SourceChain chain = source_chain(g, Side::Left);
    std::vector<std::string> topo;
    for (const auto& stage : chain.stages)
        for (VertexIdx v : stage) topo.push_back(g.vertex_id(v));
    w.groups.push_back(std::move(topo));
    return {true, std::move(w)};
}

Decision is_semiartinian(const Graph& g, Side side) {
    SourceChain chain = source_chain(g, side);
    if (!chain.residue.empty())
        return {false, {"residue", {vertex_ids(g, chain.residue)}}};
    Witness w{"certificate", {}};
    for (const auto& stage : chain.stages) w.groups.push_back(vertex_ids(g, stage));
    return {true, std::move(w)};
}

Decision is_semiprime(const Graph& g) {
    SccPartition scc = scc_condense(g);
    for (EdgeIdx e = 0; e < g.edge_count(); ++e)
        if (scc.class_of[g.src(e)] != scc.class_of[g.dst(e)])
            return {false, {"no-return-edge", {{g.edge_id(e)}}}};
    Witness w{"certificate", {}};
    for (const auto& cls : scc.classes) w.groups.push_back(vertex_ids(g, cls));
    return {true, std::move(w)};
}

Decision is_prime(const Graph& g) {
    if (g.vertex_count() == 0) return {false, {"empty-graph", {}}};
    SccPartition scc = scc_condense(g);
    if (scc.classes.size() == 1) {
        Witness w{"certificate", {vertex_ids(g, scc.classes[0])}};
        return {true, std::move(w)};
    }
    for (VertexIdx u = 0; u < g.vertex_count(); ++u) {
        auto seen = reachable_set(g, u);
        for (VertexIdx v = 0; v < g.vertex_count(); ++v)
            if (!seen[v])
                return {false,
                        {"unreachable-pair", {{g.vertex_id(u), g.vertex_id(v)}}}};
    }
    return {false, {"unreachable-pair", {}}}; // unreachable: >1 class has a gap
}

Decision is_primitive(const Graph& g, std::size_t cycle_cap) {
    Decision prime = is_prime(g);
    if (!prime.value) return prime;
    Witness cert{"certificate", {}};
    for (const Cycle& cyc : enumerate_simple_cycles(g, cycle_cap)) {
        ExitsEntries ee = cycle_exits_entries(g, cyc);
        if (ee.exits.empty())
            return {false, {"exitless-cycle", {edge_ids(g, cyc)}}};
        cert.groups.push_back(edge_ids(g, cyc));
        cert.groups.push_back({g.edge_id(ee.exits[0])});
    }
    return {true, std::move(cert)};
}

bool is_simple(const Graph& g) {
    return g.vertex_count() == 1 && g.edge_count() == 0;
}

Decision is_noetherian(const Graph& g, Side side, std::size_t cycle_cap) {
    Witness cert{"certificate", {}};
    for (const Cycle& cyc : enumerate_simple_cycles(g, cycle_cap)) {
        ExitsEntries ee = cycle_exits_entries(g, cyc);
        const auto& bad = side == Side::Left ? ee.entries : ee.exits;
        if (!bad.empty())
            return {false,
                    {side == Side::Left ? "cycle-entry" : "cycle-exit",
                     {edge_ids(g, cyc), {g.edge_id(bad[0])}}}};
        cert.groups.push_back(edge_ids(g, cyc));
    }
    return {true, std::move(cert)};
}

std::vector<VertexIdx> socle_vertices(const Graph& g, Side side) {
    std::vector<VertexIdx> out;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
        const auto& against = side == Side::Left ? g.in_edges(v) : g.out_edges(v);
        if (against.empty()) out.push_back(v);
    }
    return out;
}

std::vector<Path> socle_basis(const Graph& g, Side side) {
    if (!cycle_vertices(g).empty())
        throw PreconditionError("infinite-dimensional socle basis");
    std::vector<Path> out;
    if (side == Side::Left) {
        for (VertexIdx v : socle_vertices(g, side)) {
            out.push_back(Path::at_vertex(v));
            paths_from(g, v, out);
        }
    } else {
        std::vector<VertexIdx> sinks = socle_vertices(g, side);
        std::vector<bool> is_sink(g.vertex_count(), false);
        for (VertexIdx v : sinks) {
            is_sink[v] = true;
            out.push_back(Path::at_vertex(v));
        }
        std::vector<Path> all;
        for (VertexIdx v = 0; v < g.vertex_count(); ++v) paths_from(g, v, all);
        for (const Path& p : all)
            if (is_sink[p.range(g)]) out.push_back(p);
    }
    std::sort(out.begin(), out.end(), PathLess{&g});
    return out;
}

std::vector<VertexIdx> socle_chain_ideal(const Graph& g, Side side, std::size_t alpha) {
    SourceChain chain = source_chain(g, side);
    std::vector<VertexIdx> out;
    for (std::size_t i = 0; i < alpha && i < chain.stages.size(); ++i)
        out.insert(out.end(), chain.stages[i].begin(), chain.stages[i].end());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<EdgeIdx> radical_edges(const Graph& g) {
    SccPartition scc = scc_condense(g);
    std::vector<EdgeIdx> out;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e)
        if (scc.class_of[g.src(e)] != scc.class_of[g.dst(e)]) out.push_back(e);
    return out;
}

namespace {

/// Kind of a vertex set that is known to have all its edges inside: a lone
/// vertex, a single cycle, or something bigger.  `intra` counts only edges
/// with both endpoints in the set.
DecompComponent classify_block(const Graph& g, std::vector<VertexIdx> vs) {
    std::vector<bool> inside(g.vertex_count(), false);
    for (VertexIdx v : vs) inside[v] = true;
    std::size_t intra = 0;
    bool degrees_one = true;
    for (VertexIdx v : vs) {
        std::size_t out_in = 0, in_in = 0;
        for (EdgeIdx e : g.out_edges(v))
            if (inside[g.dst(e)]) ++out_in, ++intra;
        for (EdgeIdx e : g.in_edges(v))
            if (inside[g.src(e)]) ++in_in;
        if (out_in != 1 || in_in != 1) degrees_one = false;
    }
    DecompComponent c;
    c.vertices = std::move(vs);
    if (c.vertices.size() == 1 && intra == 0) {
        c.kind = ComponentKind::SimpleVertex;
    } else if (degrees_one) {
        c.kind = ComponentKind::Cycle;
        c.cycle_length = c.vertices.size();
    } else {
        c.kind = ComponentKind::Primitive;
    }
    return c;
}

} // namespace

Decomposition decompose_semiprime(const Graph& g) {
    Decision sp = is_semiprime(g);
    if (!sp.value)
        throw PreconditionError("graph is not semiprime", sp.witness);
    Decomposition d;
    for (auto& comp : undirected_components(g))
        d.components.push_back(classify_block(g, std::move(comp)));
    return d;
}

Decomposition decompose_mod_radical(const Graph& g) {
    SccPartition scc = scc_condense(g);
    Decomposition d;
    for (const auto& cls : scc.classes)
        d.components.push_back(classify_block(g, cls));
    return d;
}

TriangularForm triangular_form(const Graph& g, Side side, std::size_t cycle_cap) {
    Decision noeth = is_noetherian(g, side, cycle_cap);
    if (!noeth.value)
        throw PreconditionError(side == Side::Left ? "graph is not left noetherian"
                                                   : "graph is not right noetherian",
                                noeth.witness);
    std::vector<bool> on_cycle(g.vertex_count(), false);
    for (VertexIdx v : cycle_vertices(g)) on_cycle[v] = true;

    TriangularForm tf;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
        bool s_side = side == Side::Left ? on_cycle[v] : !on_cycle[v];
        (s_side ? tf.s_block_vertices : tf.t_block_vertices).push_back(v);
    }

    // Left: generators run from a cycle vertex straight into acyclic
    // territory and stay there; the cycle part of any s-to-t path is then a
    // left factor from the block itself.  Right: mirror image, only the
    // range touches a cycle.
    std::vector<EdgeIdx> walk;
    if (side == Side::Left) {
        auto rec = [&](auto&& self, VertexIdx at) -> void {
            for (EdgeIdx e : g.out_edges(at)) {
                if (on_cycle[g.dst(e)]) continue;
                walk.push_back(e);
                tf.b_generators.push_back(Path::along(g, walk));
                self(self, g.dst(e));
                walk.pop_back();
            }
        };
        for (VertexIdx v : tf.s_block_vertices) rec(rec, v);
    } else {
        auto rec = [&](auto&& self, VertexIdx at) -> void {
            for (EdgeIdx e : g.out_edges(at)) {
                walk.push_back(e);
                if (on_cycle[g.dst(e)])
                    tf.b_generators.push_back(Path::along(g, walk));
                else
                    self(self, g.dst(e));
                walk.pop_back();
            }
        };
        for (VertexIdx v : tf.s_block_vertices) rec(rec, v);
    }
    std::sort(tf.b_generators.begin(), tf.b_generators.end(), PathLess{&g});
    return tf;
}

NoetherInvariant noether_invariant(const Graph& g, Side side, std::size_t cycle_cap) {
    Decision noeth = is_noetherian(g, side, cycle_cap);
    if (!noeth.value)
        throw PreconditionError(side == Side::Left ? "graph is not left noetherian"
                                                   : "graph is not right noetherian",
                                noeth.witness);
    SccPartition scc = scc_condense(g);
    NoetherInvariant inv;
    for (std::size_t k = 0; k < scc.classes.size(); ++k) {
        if (scc.class_has_cycle[k])
            inv.cycle_lengths.push_back(scc.classes[k].size());
        else
            inv.n0 += scc.classes[k].size();
    }
    std::sort(inv.cycle_lengths.begin(), inv.cycle_lengths.end());
    return inv;
}

ClassificationReport classification_report(const Graph& g, std::size_t cycle_cap) {
    ClassificationReport r;
    auto put = [&](const char* name, Decision d) {
        r.witnesses[name] = std::move(d.witness);
        return d.value;
    };
    Decision art = is_artinian(g);
    r.artinian = r.finite_dim = art.value;
    r.witnesses["finite_dim"] = art.witness;
    r.witnesses["artinian"] = std::move(art.witness);
    r.noetherian_left = put("noetherian_left", is_noetherian(g, Side::Left, cycle_cap));
    r.noetherian_right = put("noetherian_right", is_noetherian(g, Side::Right, cycle_cap));
    r.prime = put("prime", is_prime(g));
    r.primitive = put("primitive", is_primitive(g, cycle_cap));
    r.semiartinian_left = put("semiartinian_left", is_semiartinian(g, Side::Left));
    r.semiartinian_right = put("semiartinian_right", is_semiartinian(g, Side::Right));
    r.semiprime = put("semiprime", is_semiprime(g));
    r.simple = is_simple(g);
    if (r.simple) {
        r.witnesses["simple"] = {"certificate", {{g.vertex_id(0)}}};
    } else if (g.vertex_count() == 0) {
        r.witnesses["simple"] = {"empty-graph", {}};
    } else if (g.vertex_count() > 1) {
        r.witnesses["simple"] = {"extra-structure", {{g.vertex_id(1)}}};
    } else {
        r.witnesses["simple"] = {"extra-structure", {{g.edge_id(0)}}};
    }
    return r;
}

} // namespace quiverkit
