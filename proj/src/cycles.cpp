#include "quiverkit/cycles.hpp"

#include <algorithm>

namespace quiverkit {

namespace {

struct CycleSearch {
    const Graph& g;
    const SccPartition& scc;
    std::size_t cap;
    std::vector<Cycle> found;
    std::vector<bool> visited;
    Cycle path;
    VertexIdx root = 0;
    std::uint32_t root_rank = 0;

    CycleSearch(const Graph& g_, const SccPartition& scc_, std::size_t cap_)
        : g(g_), scc(scc_), cap(cap_), visited(g_.vertex_count(), false) {}

    // Vertex-simple DFS from the root, never descending below the root's lex
    // rank, so each cycle is produced exactly once: at the rotation starting
    // on its lex-smallest vertex.
    void dfs(VertexIdx v) {
        for (EdgeIdx e : g.out_edges(v)) {
            VertexIdx w = g.dst(e);
            if (scc.class_of[w] != scc.class_of[root]) continue;
            if (w == root) {
                path.push_back(e);
                if (found.size() == cap) throw CapExceeded("cycle cap exceeded", static_cast<long long>(cap));
                found.push_back(path);
                path.pop_back();
                continue;
            }
            if (visited[w] || g.vertex_lex_rank(w) < root_rank) continue;
            visited[w] = true;
            path.push_back(e);
            dfs(w);
            path.pop_back();
            visited[w] = false;
        }
    }
};

} // namespace

std::vector<Cycle> enumerate_simple_cycles(const Graph& g, std::size_t cap) {
    SccPartition scc = scc_condense(g);
    CycleSearch search(g, scc, cap);

    std::vector<VertexIdx> roots(g.vertex_count());
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) roots[v] = v;
    std::sort(roots.begin(), roots.end(), [&](VertexIdx a, VertexIdx b) {
        return g.vertex_lex_rank(a) < g.vertex_lex_rank(b);
    });

    for (VertexIdx root : roots) {
        if (!scc.class_has_cycle[scc.class_of[root]]) continue;
        search.root = root;
        search.root_rank = g.vertex_lex_rank(root);
        search.dfs(root);
    }
    return search.found;
}

std::vector<VertexIdx> cycle_vertex_seq(const Graph& g, const Cycle& cycle) {
    if (cycle.empty()) throw PreconditionError("input is not a simple cycle");
    std::vector<VertexIdx> seq;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        if (cycle[i] >= g.edge_count())
            throw PreconditionError("input is not a simple cycle");
        seq.push_back(g.src(cycle[i]));
        EdgeIdx next = cycle[(i + 1) % cycle.size()];
        if (next >= g.edge_count() || g.dst(cycle[i]) != g.src(next))
            throw PreconditionError("input is not a simple cycle");
    }
    std::vector<VertexIdx> sorted(seq);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw PreconditionError("input is not a simple cycle");
    return seq;
}

ExitsEntries cycle_exits_entries(const Graph& g, const Cycle& cycle) {
    cycle_vertex_seq(g, cycle); // validation only
    ExitsEntries result;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        bool is_exit = false, is_entry = false;
        for (EdgeIdx c : cycle) {
            if (e == c) continue;
            if (g.src(e) == g.src(c)) is_exit = true;
            if (g.dst(e) == g.dst(c)) is_entry = true;
        }
        if (is_exit) result.exits.push_back(e);
        if (is_entry) result.entries.push_back(e);
    }
    return result;
}

} // namespace quiverkit
