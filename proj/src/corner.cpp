#include "quiverkit/corner.hpp"

#include <algorithm>
#include <queue>

namespace quiverkit {

namespace {

/// BFS parent edges toward `to` on the reversed orientation: follow[v] is an
/// out-edge of v lying on a shortest v -> to path, or nullopt when to is
/// unreachable.  Out-edges are scanned in lexicographic id order so the
/// chosen tree does not depend on declaration order.
std::vector<std::optional<EdgeIdx>> shortest_step_toward(const Graph& g, VertexIdx to) {
    std::vector<std::optional<EdgeIdx>> follow(g.vertex_count());
    std::vector<int> dist(g.vertex_count(), -1);
    dist[to] = 0;
    std::queue<VertexIdx> bfs;
    bfs.push(to);
    while (!bfs.empty()) {
        VertexIdx v = bfs.front();
        bfs.pop();
        std::vector<EdgeIdx> ins = g.in_edges(v);
        std::sort(ins.begin(), ins.end(), [&](EdgeIdx a, EdgeIdx b) {
            return g.edge_lex_rank(a) < g.edge_lex_rank(b);
        });
        for (EdgeIdx e : ins) {
            VertexIdx w = g.src(e);
            if (dist[w] != -1) continue;
            dist[w] = dist[v] + 1;
            follow[w] = e;
            bfs.push(w);
        }
    }
    return follow;
}

/// Shortest path from `from` to `to` along a precomputed step table; empty
/// when from == to.
std::vector<EdgeIdx> walk_along(const Graph& g,
                                const std::vector<std::optional<EdgeIdx>>& follow,
                                VertexIdx from, VertexIdx to) {
    std::vector<EdgeIdx> edges;
    VertexIdx v = from;
    while (v != to) {
        EdgeIdx e = *follow[v];
        edges.push_back(e);
        v = g.dst(e);
    }
    return edges;
}

} // namespace

std::optional<Path> first_return_path(const Graph& g, VertexIdx u) {
    auto follow = shortest_step_toward(g, u);
    std::vector<EdgeIdx> outs = g.out_edges(u);
    std::sort(outs.begin(), outs.end(), [&](EdgeIdx a, EdgeIdx b) {
        return g.edge_lex_rank(a) < g.edge_lex_rank(b);
    });
    std::optional<EdgeIdx> best;
    std::size_t best_len = 0;
    for (EdgeIdx e : outs) {
        VertexIdx w = g.dst(e);
        if (w != u && !follow[w]) continue;
        // Shortest closed walks never revisit u in between, so this is a
        // first-return path.
        std::size_t len = 1 + walk_along(g, follow, w, u).size();
        if (!best || len < best_len) {
            best = e;
            best_len = len;
        }
    }
    if (!best) return std::nullopt;
    std::vector<EdgeIdx> edges{*best};
    auto rest = walk_along(g, follow, g.dst(*best), u);
    edges.insert(edges.end(), rest.begin(), rest.end());
    return Path::along(g, std::move(edges));
}

CornerClass corner_classify(const Graph& g, VertexIdx u) {
    if (u >= g.vertex_count()) throw PreconditionError("vertex index out of range");
    CornerClass out;
    auto witness = first_return_path(g, u);
    if (!witness) {
        out.kind = CornerKind::Scalar;
        return out;
    }
    // A second, distinct first-return path exists exactly when the known one
    // can be abandoned part-way: at some vertex along it there is a different
    // out-edge from which u is still reachable.  Splicing the shortest way
    // back to u after that edge yields the second witness.
    auto reaches_u = reachable_set(reverse_graph(g), u);
    auto follow = shortest_step_toward(g, u);
    const auto& wedges = witness->edges();
    VertexIdx at = u;
    for (std::size_t i = 0; i < wedges.size(); ++i) {
        std::vector<EdgeIdx> outs = g.out_edges(at);
        std::sort(outs.begin(), outs.end(), [&](EdgeIdx a, EdgeIdx b) {
            return g.edge_lex_rank(a) < g.edge_lex_rank(b);
        });
        for (EdgeIdx e : outs) {
            if (e == wedges[i] || !reaches_u[g.dst(e)]) continue;
            std::vector<EdgeIdx> second(wedges.begin(), wedges.begin() + i);
            second.push_back(e);
            auto rest = walk_along(g, follow, g.dst(e), u);
            second.insert(second.end(), rest.begin(), rest.end());
            out.kind = CornerKind::Free;
            out.witnesses = {*witness, Path::along(g, std::move(second))};
            return out;
        }
        at = g.dst(wedges[i]);
    }
    out.kind = CornerKind::Polynomial;
    out.witnesses = {*witness};
    return out;
}

CornerClass corner_classify(const Graph& g, const std::string& u_id) {
    return corner_classify(g, g.vertex(u_id));
}

} // namespace quiverkit
