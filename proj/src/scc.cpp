#include "quiverkit/scc.hpp"

#include <algorithm>
#include <set>

namespace quiverkit {

namespace {

// Iterative Tarjan; component ids are assigned in completion order and
// remapped to the canonical order afterwards.
struct TarjanState {
    const Graph& g;
    std::vector<std::uint32_t> index, lowlink, raw_class;
    std::vector<bool> on_stack;
    std::vector<VertexIdx> stack;
    std::uint32_t next_index = 0, class_count = 0;
    static constexpr std::uint32_t none = UINT32_MAX;

    explicit TarjanState(const Graph& g_)
        : g(g_), index(g_.vertex_count(), none), lowlink(g_.vertex_count(), 0),
          raw_class(g_.vertex_count(), none), on_stack(g_.vertex_count(), false) {}

    void run(VertexIdx root) {
        struct Frame {
            VertexIdx v;
            std::size_t next_edge;
        };
        std::vector<Frame> frames{{root, 0}};
        open(root);
        while (!frames.empty()) {
            Frame& f = frames.back();
            const auto& out = g.out_edges(f.v);
            if (f.next_edge < out.size()) {
                VertexIdx w = g.dst(out[f.next_edge++]);
                if (index[w] == none) {
                    open(w);
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                if (lowlink[f.v] == index[f.v]) {
                    VertexIdx w;
                    do {
                        w = stack.back();
                        stack.pop_back();
                        on_stack[w] = false;
                        raw_class[w] = class_count;
                    } while (w != f.v);
                    ++class_count;
                }
                VertexIdx child = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] =
                        std::min(lowlink[frames.back().v], lowlink[child]);
            }
        }
    }

    void open(VertexIdx v) {
        index[v] = lowlink[v] = next_index++;
        stack.push_back(v);
        on_stack[v] = true;
    }
};

} // namespace

SccPartition scc_condense(const Graph& g) {
    TarjanState t(g);
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        if (t.index[v] == TarjanState::none) t.run(v);

    // Canonical class order: by smallest member vertex index.
    std::vector<VertexIdx> smallest(t.class_count, UINT32_MAX);
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        smallest[t.raw_class[v]] = std::min(smallest[t.raw_class[v]], v);
    std::vector<std::uint32_t> order(t.class_count);
    for (std::uint32_t c = 0; c < t.class_count; ++c) order[c] = c;
    std::sort(order.begin(), order.end(),
              [&](std::uint32_t a, std::uint32_t b) { return smallest[a] < smallest[b]; });
    std::vector<std::uint32_t> remap(t.class_count);
    for (std::uint32_t pos = 0; pos < order.size(); ++pos) remap[order[pos]] = pos;

    SccPartition p;
    p.classes.resize(t.class_count);
    p.class_of.resize(g.vertex_count());
    p.class_has_cycle.assign(t.class_count, false);
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
        p.class_of[v] = remap[t.raw_class[v]];
        p.classes[p.class_of[v]].push_back(v);
    }
    std::set<std::pair<std::uint32_t, std::uint32_t>> cond;
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) {
        std::uint32_t a = p.class_of[g.src(e)], b = p.class_of[g.dst(e)];
        if (a == b)
            p.class_has_cycle[a] = true;
        else
            cond.insert({a, b});
    }
    p.condensation_edges.assign(cond.begin(), cond.end());
    return p;
}

std::vector<VertexIdx> cycle_vertices(const Graph& g) {
    SccPartition p = scc_condense(g);
    std::vector<VertexIdx> out;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        if (p.vertex_on_cycle(v)) out.push_back(v);
    return out;
}

Graph skeleton(const Graph& g) {
    return collapse_vertices(g, cycle_vertices(g));
}

SourceChain source_chain(const Graph& g, Side side) {
    // degree[v] counts incoming edges still alive; Side::Right peels sinks by
    // counting outgoing ones instead.
    std::vector<std::size_t> degree(g.vertex_count(), 0);
    for (EdgeIdx e = 0; e < g.edge_count(); ++e)
        ++degree[side == Side::Left ? g.dst(e) : g.src(e)];

    std::vector<bool> removed(g.vertex_count(), false);
    SourceChain chain;
    for (;;) {
        std::vector<VertexIdx> stage;
        for (VertexIdx v = 0; v < g.vertex_count(); ++v)
            if (!removed[v] && degree[v] == 0) stage.push_back(v);
        if (stage.empty()) break;
        for (VertexIdx v : stage) removed[v] = true;
        for (VertexIdx v : stage) {
            for (EdgeIdx e : side == Side::Left ? g.out_edges(v) : g.in_edges(v)) {
                VertexIdx w = side == Side::Left ? g.dst(e) : g.src(e);
                if (!removed[w]) --degree[w];
            }
        }
        chain.stages.push_back(std::move(stage));
    }
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        if (!removed[v]) chain.residue.push_back(v);
    return chain;
}

} // namespace quiverkit
