#pragma once

#include <cstddef>
#include <memory>
#include <string>

#include "quiverkit/element.hpp"
#include "quiverkit/matrix.hpp"

namespace quiverkit {

/// The cycle graph C_n together with its path bookkeeping: vertices v0..v{n-1}
/// and edges f_i from v_i to v_{i+1 mod n}.  Every path from v_i factors
/// uniquely as k full turns followed by the short arc mu(i, j), which is what
/// the matrix embedding below records.
class CycleAlgebra {
public:
    explicit CycleAlgebra(std::size_t n) : n_(n) {
        if (n == 0) throw PreconditionError("cycle needs at least one vertex");
        Graph g;
        for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
        for (std::size_t i = 0; i < n; ++i)
            g.add_edge("f" + std::to_string(i), "v" + std::to_string(i),
                       "v" + std::to_string((i + 1) % n));
        g_ = std::make_shared<const Graph>(std::move(g));
    }

    std::size_t n() const { return n_; }
    const std::shared_ptr<const Graph>& graph() const { return g_; }

    /// 1 when i > j, else 0: the extra x picked up below the diagonal.
    int m_exp(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return i > j ? 1 : 0;
    }

    /// 1 exactly when (i<=k<j) or (j<i<=k) or (k<j<i): whether composing the
    /// arcs i->j->k passes the base vertex.
    int n_exp(std::size_t i, std::size_t j, std::size_t k) const {
        check_index(i);
        check_index(j);
        check_index(k);
        bool one = (i <= k && k < j) || (j < i && i <= k) || (k < j && j < i);
        return one ? 1 : 0;
    }

    /// Short arc from v_i to v_j; mu(i, i) is the trivial path at v_i.
    Path mu(std::size_t i, std::size_t j) const {
        check_index(i);
        check_index(j);
        return walk_unchecked(i, (j + n_ - i) % n_);
    }

    /// Full turn c_i: the closed path of length n starting at v_i.
    Path c_path(std::size_t i) const {
        check_index(i);
        return walk_unchecked(i, n_);
    }

    /// Walk of length len from v_i; len = k*n + arc realizes c_i^k mu(i, j).
    Path walk(std::size_t i, std::size_t len) const {
        check_index(i);
        return walk_unchecked(i, len);
    }

private:
    Path walk_unchecked(std::size_t i, std::size_t len) const {
        if (len == 0) return Path::at_vertex(static_cast<VertexIdx>(i));
        std::vector<EdgeIdx> edges;
        edges.reserve(len);
        for (std::size_t s = 0; s < len; ++s)
            edges.push_back(static_cast<EdgeIdx>((i + s) % n_));
        return Path::along(*g_, std::move(edges));
    }

    void check_index(std::size_t i) const {
        if (i >= n_) throw PreconditionError("cycle index out of range");
    }

    std::size_t n_;
    std::shared_ptr<const Graph> g_;
};

/// Matrix embedding of KC_n into M_n(K[x]): the path with k full turns from
/// v_i to v_j goes to x^(k + m(i,j)) E_{i,j}.
template <FieldScalar K>
PolyMatrix<K> tau_embed(const CycleAlgebra& c, const Element<K>& a) {
    if (!(a.graph() == *c.graph()))
        throw PreconditionError("element is not over this cycle algebra");
    PolyMatrix<K> m(c.n());
    for (const auto& [path, coeff] : a.terms()) {
        std::size_t i = path.source();
        std::size_t len = path.length();
        std::size_t j = (i + len) % c.n();
        std::size_t deg = len / c.n() + static_cast<std::size_t>(c.m_exp(i, j));
        m.at(i, j) = m.at(i, j) + Poly<K>::monomial(coeff, deg);
    }
    return m;
}

/// Inverse of tau_embed on its image: entries below the diagonal must be
/// multiples of x, and a violation is reported by position.
template <FieldScalar K>
Element<K> tau_preimage(const CycleAlgebra& c, const PolyMatrix<K>& m) {
    if (m.size() != c.n()) throw PreconditionError("matrix size mismatch");
    Element<K> a = Element<K>::zero(c.graph());
    for (std::size_t i = 0; i < c.n(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) {
            const Poly<K>& entry = m.at(i, j);
            if (entry.is_zero()) continue;
            std::size_t low = static_cast<std::size_t>(c.m_exp(i, j));
            if (entry.order() < static_cast<int>(low))
                throw PreconditionError("not in Im(tau) at entry (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
            std::size_t arc = (j + c.n() - i) % c.n();
            for (std::size_t d = low; d <= static_cast<std::size_t>(entry.degree()); ++d) {
                K coeff = entry.coeff(d);
                if (coeff.is_zero()) continue;
                a.add_term(c.walk(i, (d - low) * c.n() + arc), coeff);
            }
        }
    return a;
}

} // namespace quiverkit
