#include "quiverkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace quiverkit {

bool is_valid_id(const std::string& id) {
    if (id.empty()) return false;
    for (char c : id) {
        bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                  (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

void Graph::check_fresh_id(const std::string& id) const {
    if (!is_valid_id(id))
        throw ParseError("invalid id '" + id + "'");
    if (vertex_by_id_.count(id) || edge_by_id_.count(id))
        throw ParseError("duplicate id '" + id + "'");
}

VertexIdx Graph::add_vertex(std::string id) {
    check_fresh_id(id);
    auto v = static_cast<VertexIdx>(vertex_ids_.size());
    vertex_by_id_.emplace(id, v);
    vertex_ids_.push_back(std::move(id));
    out_.emplace_back();
    in_.emplace_back();
    vertex_rank_.clear();
    return v;
}

EdgeIdx Graph::add_edge(std::string id, const std::string& src_id, const std::string& dst_id) {
    auto s = find_vertex(src_id);
    if (!s) throw ParseError("unknown vertex '" + src_id + "'");
    auto d = find_vertex(dst_id);
    if (!d) throw ParseError("unknown vertex '" + dst_id + "'");
    return add_edge(std::move(id), *s, *d);
}

EdgeIdx Graph::add_edge(std::string id, VertexIdx src, VertexIdx dst) {
    check_fresh_id(id);
    if (src >= vertex_count() || dst >= vertex_count())
        throw PreconditionError("edge endpoint out of range");
    auto e = static_cast<EdgeIdx>(edge_ids_.size());
    edge_by_id_.emplace(id, e);
    edge_ids_.push_back(std::move(id));
    src_.push_back(src);
    dst_.push_back(dst);
    out_[src].push_back(e);
    in_[dst].push_back(e);
    edge_rank_.clear();
    return e;
}

std::optional<VertexIdx> Graph::find_vertex(const std::string& id) const {
    auto it = vertex_by_id_.find(id);
    if (it == vertex_by_id_.end()) return std::nullopt;
    return it->second;
}

std::optional<EdgeIdx> Graph::find_edge(const std::string& id) const {
    auto it = edge_by_id_.find(id);
    if (it == edge_by_id_.end()) return std::nullopt;
    return it->second;
}

VertexIdx Graph::vertex(const std::string& id) const {
    auto v = find_vertex(id);
    if (!v) throw PreconditionError("unknown vertex '" + id + "'");
    return *v;
}

EdgeIdx Graph::edge(const std::string& id) const {
    auto e = find_edge(id);
    if (!e) throw PreconditionError("unknown edge '" + id + "'");
    return *e;
}

namespace {

std::vector<std::uint32_t> ranks_of(const std::vector<std::string>& ids) {
    std::vector<std::uint32_t> order(ids.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return ids[a] < ids[b]; });
    std::vector<std::uint32_t> rank(ids.size());
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) rank[order[pos]] = pos;
    return rank;
}

} // namespace

std::uint32_t Graph::vertex_lex_rank(VertexIdx v) const {
    if (vertex_rank_.size() != vertex_ids_.size()) vertex_rank_ = ranks_of(vertex_ids_);
    return vertex_rank_[v];
}

std::uint32_t Graph::edge_lex_rank(EdgeIdx e) const {
    if (edge_rank_.size() != edge_ids_.size()) edge_rank_ = ranks_of(edge_ids_);
    return edge_rank_[e];
}

bool Graph::operator==(const Graph& o) const {
    return vertex_ids_ == o.vertex_ids_ && edge_ids_ == o.edge_ids_ &&
           src_ == o.src_ && dst_ == o.dst_;
}

Graph reverse_graph(const Graph& g) {
    Graph r;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) r.add_vertex(g.vertex_id(v));
    for (EdgeIdx e = 0; e < g.edge_count(); ++e)
        r.add_edge(g.edge_id(e), g.dst(e), g.src(e));
    return r;
}

Graph collapse_vertices(const Graph& g, const std::vector<VertexIdx>& removed) {
    std::vector<bool> gone(g.vertex_count(), false);
    for (VertexIdx v : removed) gone[v] = true;
    Graph r;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        if (!gone[v]) r.add_vertex(g.vertex_id(v));
    for (EdgeIdx e = 0; e < g.edge_count(); ++e)
        if (!gone[g.src(e)] && !gone[g.dst(e)])
            r.add_edge(g.edge_id(e), g.vertex_id(g.src(e)), g.vertex_id(g.dst(e)));
    return r;
}

Graph collapse_edges(const Graph& g, const std::vector<EdgeIdx>& removed) {
    std::vector<bool> gone(g.edge_count(), false);
    for (EdgeIdx e : removed) gone[e] = true;
    Graph r;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) r.add_vertex(g.vertex_id(v));
    for (EdgeIdx e = 0; e < g.edge_count(); ++e)
        if (!gone[e]) r.add_edge(g.edge_id(e), g.src(e), g.dst(e));
    return r;
}

std::vector<std::vector<VertexIdx>> undirected_components(const Graph& g) {
    std::vector<std::uint32_t> comp(g.vertex_count(), UINT32_MAX);
    std::uint32_t count = 0;
    for (VertexIdx start = 0; start < g.vertex_count(); ++start) {
        if (comp[start] != UINT32_MAX) continue;
        std::queue<VertexIdx> q;
        q.push(start);
        comp[start] = count;
        while (!q.empty()) {
            VertexIdx v = q.front();
            q.pop();
            auto visit = [&](VertexIdx w) {
                if (comp[w] == UINT32_MAX) {
                    comp[w] = count;
                    q.push(w);
                }
            };
            for (EdgeIdx e : g.out_edges(v)) visit(g.dst(e));
            for (EdgeIdx e : g.in_edges(v)) visit(g.src(e));
        }
        ++count;
    }
    std::vector<std::vector<VertexIdx>> components(count);
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) components[comp[v]].push_back(v);
    return components;
}

std::vector<bool> reachable_set(const Graph& g, VertexIdx from) {
    std::vector<bool> seen(g.vertex_count(), false);
    seen[from] = true;
    std::queue<VertexIdx> q;
    q.push(from);
    while (!q.empty()) {
        VertexIdx v = q.front();
        q.pop();
        for (EdgeIdx e : g.out_edges(v)) {
            VertexIdx w = g.dst(e);
            if (!seen[w]) {
                seen[w] = true;
                q.push(w);
            }
        }
    }
    return seen;
}

bool reaches(const Graph& g, VertexIdx from, VertexIdx to) {
    return reachable_set(g, from)[to];
}

} // namespace quiverkit
