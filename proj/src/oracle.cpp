#include "quiverkit/oracle.hpp"

#include <algorithm>

namespace quiverkit {

namespace {

using PathKey = std::pair<VertexIdx, std::vector<EdgeIdx>>;

PathKey key_of(const Path& p) { return {p.source(), p.edges()}; }

/// Peel in-degree-zero vertices; anything left sits on a closed path.
bool has_closed_path(const Graph& g) {
    std::vector<std::size_t> indeg(g.vertex_count(), 0);
    for (EdgeIdx e = 0; e < g.edge_count(); ++e) ++indeg[g.dst(e)];
    std::vector<VertexIdx> ready;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v)
        if (indeg[v] == 0) ready.push_back(v);
    std::size_t removed = 0;
    while (!ready.empty()) {
        VertexIdx v = ready.back();
        ready.pop_back();
        ++removed;
        for (EdgeIdx e : g.out_edges(v))
            if (--indeg[g.dst(e)] == 0) ready.push_back(g.dst(e));
    }
    return removed != g.vertex_count();
}

} // namespace

StructureAlgebra::StructureAlgebra(std::shared_ptr<const Graph> g,
                                   std::vector<Path> basis)
    : graph_(std::move(g)), basis_(std::move(basis)) {
    std::size_t d = basis_.size();
    std::map<PathKey, std::size_t> index;
    for (std::size_t i = 0; i < d; ++i) index.emplace(key_of(basis_[i]), i);

    table_.assign(d * d, npos);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (basis_[i].range(*graph_) != basis_[j].source()) continue;
            std::vector<EdgeIdx> edges = basis_[i].edges();
            edges.insert(edges.end(), basis_[j].edges().begin(),
                         basis_[j].edges().end());
            table_[i * d + j] = index.at({basis_[i].source(), std::move(edges)});
        }
}

std::size_t StructureAlgebra::index_of(const Path& p) const {
    for (std::size_t i = 0; i < basis_.size(); ++i)
        if (basis_[i] == p) return i;
    throw PreconditionError("path is not in the basis");
}

StructureAlgebra structure_constants(const Graph& g, std::size_t bound) {
    if (has_closed_path(g)) throw PreconditionError("graph contains a closed path");

    auto shared = std::make_shared<const Graph>(g);
    std::vector<Path> basis;
    for (VertexIdx v = 0; v < g.vertex_count(); ++v) {
        std::vector<std::vector<EdgeIdx>> frontier{{}};
        basis.push_back(Path::at_vertex(v));
        if (basis.size() > bound)
            throw CapExceeded("basis bound exceeded", static_cast<long long>(bound));
        while (!frontier.empty()) {
            std::vector<std::vector<EdgeIdx>> next;
            for (const auto& walk : frontier) {
                VertexIdx at = walk.empty() ? v : g.dst(walk.back());
                for (EdgeIdx e : g.out_edges(at)) {
                    std::vector<EdgeIdx> longer = walk;
                    longer.push_back(e);
                    basis.push_back(Path::along(g, longer));
                    if (basis.size() > bound)
                        throw CapExceeded("basis bound exceeded",
                                          static_cast<long long>(bound));
                    next.push_back(std::move(longer));
                }
            }
            frontier = std::move(next);
        }
    }
    std::sort(basis.begin(), basis.end(), PathLess{shared.get()});
    return StructureAlgebra(shared, std::move(basis));
}

bool return_path_exists(const Graph& g, VertexIdx from, VertexIdx to) {
    return reaches(g, from, to);
}

namespace detail {

std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows) {
    std::size_t nrows = rows.size();
    std::size_t ncols = nrows ? rows[0].size() : 0;
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < nrows; ++c) {
        std::size_t sel = r;
        while (sel < nrows && rows[sel][c].is_zero()) ++sel;
        if (sel == nrows) continue;
        std::swap(rows[r], rows[sel]);
        Rational inv = rows[r][c].inverse();
        for (std::size_t k = c; k < ncols; ++k) rows[r][k] = rows[r][k] * inv;
        for (std::size_t i = 0; i < nrows; ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            Rational f = rows[i][c];
            for (std::size_t k = c; k < ncols; ++k)
                rows[i][k] = rows[i][k] - rows[r][k] * f;
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

} // namespace detail

} // namespace quiverkit
