#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "quiverkit/errors.hpp"
#include "quiverkit/poly.hpp"
#include "quiverkit/ratfunc.hpp"

namespace quiverkit {

/// Dense square matrix over any exact coefficient ring (scalars, polynomials,
/// rational functions).  Entries default to the ring zero.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() : n_(0) {}
    explicit SquareMatrix(std::size_t n) : n_(n), entries_(n * n) {}

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T::one();
        return m;
    }

    /// Matrix unit with a single 1 in row i, column j.
    static SquareMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
        SquareMatrix m(n);
        m.at(i, j) = T::one();
        return m;
    }

    std::size_t size() const { return n_; }

    T& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    SquareMatrix operator+(const SquareMatrix& o) const {
        check_size(o);
        SquareMatrix r(n_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] + o.entries_[i];
        return r;
    }

    SquareMatrix operator*(const SquareMatrix& o) const {
        check_size(o);
        SquareMatrix r(n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k) {
                const T& a = at(i, k);
                if (a.is_zero()) continue;
                for (std::size_t j = 0; j < n_; ++j) {
                    const T& b = o.at(k, j);
                    if (b.is_zero()) continue;
                    r.at(i, j) = r.at(i, j) + a * b;
                }
            }
        return r;
    }

    SquareMatrix scaled(const T& c) const {
        SquareMatrix r(n_);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            r.entries_[i] = entries_[i] * c;
        return r;
    }

    bool is_zero() const {
        for (const T& e : entries_)
            if (!e.is_zero()) return false;
        return true;
    }

    bool operator==(const SquareMatrix& o) const = default;

    /// One row per line, entries separated by single spaces.
    std::string str() const {
        std::string out;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (j) out += ' ';
                out += at(i, j).str();
            }
            out += '\n';
        }
        return out;
    }

private:
    void check_size(const SquareMatrix& o) const {
        if (n_ != o.n_) throw PreconditionError("matrix size mismatch");
    }

    std::size_t n_;
    std::vector<T> entries_;
};

template <typename K>
using PolyMatrix = SquareMatrix<Poly<K>>;

template <typename K>
using RatMatrix = SquareMatrix<RatFunc<K>>;

template <typename T>
SquareMatrix<T> mat_mul(const SquareMatrix<T>& a, const SquareMatrix<T>& b) {
    return a * b;
}

} // namespace quiverkit
