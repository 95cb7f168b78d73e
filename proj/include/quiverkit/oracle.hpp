#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <type_traits>
#include <vector>

#include "quiverkit/element.hpp"
#include "quiverkit/scc.hpp"

namespace quiverkit {

/// Finite-dimensional realization of a path algebra without closed paths:
/// the full path basis in (length, lexicographic) order and the complete
/// product table.  Products of basis paths are again basis paths or zero,
/// so the table stores result indices with npos standing for zero.
class StructureAlgebra {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    StructureAlgebra(std::shared_ptr<const Graph> g, std::vector<Path> basis);

    const std::shared_ptr<const Graph>& graph() const { return graph_; }
    const std::vector<Path>& basis() const { return basis_; }
    std::size_t dim() const { return basis_.size(); }

    /// Index of basis[i] * basis[j], or npos when the product vanishes.
    std::size_t product(std::size_t i, std::size_t j) const {
        return table_[i * basis_.size() + j];
    }

    /// Index of a path in the basis; the path must be one of the basis paths.
    std::size_t index_of(const Path& p) const;

private:
    std::shared_ptr<const Graph> graph_;
    std::vector<Path> basis_;
    std::vector<std::size_t> table_;
};

/// Enumerates the whole path basis of an acyclic graph and tabulates all
/// pairwise products.  Independent of the classification code by design: the
/// enumeration walks edges directly.
StructureAlgebra structure_constants(const Graph& g, std::size_t bound = 64);

/// True when some path (length 0 allowed) leads from one vertex to another.
bool return_path_exists(const Graph& g, VertexIdx from, VertexIdx to);

namespace detail {

/// Reduced row echelon form over the rationals; returns pivot columns.
std::vector<std::size_t> rref(std::vector<std::vector<Rational>>& rows);

} // namespace detail

/// Radical of the trace form tr(L_x L_y) as coordinate vectors in the path
/// basis.  Valid in characteristic 0, where the trace-form radical equals
/// the nilpotent radical; positive characteristic is refused.
template <FieldScalar K>
std::vector<std::vector<K>> trace_radical(const StructureAlgebra& a) {
    if constexpr (!std::is_same_v<K, Rational>) {
        throw PreconditionError("oracle requires characteristic 0");
    } else {
        std::size_t d = a.dim();
        // Gram entries count fixed basis vectors: products of basis paths are
        // basis paths, so every trace is a nonnegative integer.
        std::vector<std::vector<Rational>> gram(d, std::vector<Rational>(d));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                long long count = 0;
                for (std::size_t k = 0; k < d; ++k) {
                    std::size_t t = a.product(j, k);
                    if (t != StructureAlgebra::npos && a.product(i, t) == k) ++count;
                }
                gram[i][j] = Rational::from_long(count);
            }

        std::vector<std::size_t> pivots = detail::rref(gram);
        std::vector<bool> is_pivot(d, false);
        for (std::size_t c : pivots) is_pivot[c] = true;

        std::vector<std::vector<K>> null_basis;
        for (std::size_t free = 0; free < d; ++free) {
            if (is_pivot[free]) continue;
            std::vector<K> v(d, K::zero());
            v[free] = K::one();
            for (std::size_t r = 0; r < pivots.size(); ++r)
                v[pivots[r]] = -gram[r][free];
            null_basis.push_back(std::move(v));
        }
        return null_basis;
    }
}

/// Decides whether the one-sided ideal generated by x is one-dimensional,
/// by row-reducing x together with all basis multiples.
template <FieldScalar K>
bool minimal_ideal_check(const StructureAlgebra& a, const Element<K>& x, Side side) {
    if (x.is_zero()) throw PreconditionError("element is zero");
    std::size_t d = a.dim();

    auto coords = [&](const Element<K>& e) {
        std::vector<K> v(d, K::zero());
        for (const auto& [p, c] : e.terms()) v[a.index_of(p)] = c;
        return v;
    };

    std::vector<std::vector<K>> span;
    auto insert = [&](std::vector<K> v) {
        for (const auto& row : span) {
            std::size_t lead = 0;
            while (lead < d && row[lead].is_zero()) ++lead;
            if (lead < d && !v[lead].is_zero()) {
                K f = v[lead] / row[lead];
                for (std::size_t c = lead; c < d; ++c) v[c] = v[c] - row[c] * f;
            }
        }
        for (std::size_t c = 0; c < d; ++c)
            if (!v[c].is_zero()) {
                K inv = v[c].inverse();
                for (std::size_t k = c; k < d; ++k) v[k] = v[k] * inv;
                span.push_back(std::move(v));
                std::sort(span.begin(), span.end(), [d](const auto& r1, const auto& r2) {
                    std::size_t l1 = 0, l2 = 0;
                    while (l1 < d && r1[l1].is_zero()) ++l1;
                    while (l2 < d && r2[l2].is_zero()) ++l2;
                    return l1 < l2;
                });
                return;
            }
    };

    insert(coords(x));
    for (const Path& b : a.basis()) {
        auto eb = Element<K>::path_term(a.graph(), b);
        Element<K> prod = side == Side::Left ? eb * x : x * eb;
        if (!prod.is_zero()) insert(coords(prod));
        if (span.size() > 1) return false;
    }
    return span.size() == 1;
}

} // namespace quiverkit
