#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "quiverkit/cycle_algebra.hpp"

namespace quiverkit {

/// Canonical representative (p, q) of an extended-centroid class: q monic and
/// coprime to p, zero stored as (0, 1).  Normalizing on construction makes
/// structural equality the right notion of equality.
template <FieldScalar K>
class AdmissiblePair {
public:
    AdmissiblePair() : p_(), q_(Poly<K>::one()) {}

    AdmissiblePair(Poly<K> p, Poly<K> q) : p_(std::move(p)), q_(std::move(q)) {
        if (q_.is_zero()) throw PreconditionError("division by zero polynomial");
        normalize();
    }

    static AdmissiblePair zero() { return AdmissiblePair(); }
    static AdmissiblePair one() {
        return AdmissiblePair(Poly<K>::one(), Poly<K>::one());
    }

    const Poly<K>& p() const { return p_; }
    const Poly<K>& q() const { return q_; }
    bool is_zero() const { return p_.is_zero(); }

    /// Sum over the least common denominator q0 = lcm(q, q').
    AdmissiblePair operator+(const AdmissiblePair& o) const {
        Poly<K> q0 = poly_lcm(q_, o.q_);
        Poly<K> p0 = p_ * (q0 / q_) + o.p_ * (q0 / o.q_);
        return AdmissiblePair(std::move(p0), std::move(q0));
    }

    AdmissiblePair operator-() const {
        AdmissiblePair r(*this);
        r.p_ = -r.p_;
        return r;
    }

    AdmissiblePair operator-(const AdmissiblePair& o) const { return *this + (-o); }

    AdmissiblePair operator*(const AdmissiblePair& o) const {
        return AdmissiblePair(p_ * o.p_, q_ * o.q_);
    }

    bool operator==(const AdmissiblePair&) const = default;

    std::string str() const { return "(" + p_.str() + ", " + q_.str() + ")"; }

private:
    void normalize() {
        if (p_.is_zero()) {
            q_ = Poly<K>::one();
            return;
        }
        Poly<K> g = poly_gcd(p_, q_);
        p_ = p_ / g;
        q_ = q_ / g;
        K lead = q_.leading();
        if (!lead.is_one()) {
            K inv = lead.inverse();
            p_ = p_.scaled(inv);
            q_ = q_.scaled(inv);
        }
    }

    Poly<K> p_;
    Poly<K> q_;
};

template <FieldScalar K>
RatFunc<K> omega(const AdmissiblePair<K>& pair) {
    return RatFunc<K>(pair.p(), pair.q());
}

template <FieldScalar K>
AdmissiblePair<K> omega_inverse(const RatFunc<K>& r) {
    return AdmissiblePair<K>(r.num(), r.den());
}

/// Apply the class (p, q) to an element of its domain ideal J(q).  The tau
/// image must be entrywise divisible by q x^m(i,j); the result is the unique
/// element with tau image (p/q) tau(a).
template <FieldScalar K>
Element<K> admissible_apply(const CycleAlgebra& c, const AdmissiblePair<K>& pair,
                            const Element<K>& a) {
    PolyMatrix<K> m = tau_embed(c, a);
    PolyMatrix<K> out(c.n());
    for (std::size_t i = 0; i < c.n(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) {
            const Poly<K>& entry = m.at(i, j);
            if (entry.is_zero()) continue;
            Poly<K> need =
                pair.q().times_x_pow(static_cast<std::size_t>(c.m_exp(i, j)));
            if (!need.divides(entry))
                throw PreconditionError("not in J(q) at entry (" + std::to_string(i) +
                                        "," + std::to_string(j) + ")");
            out.at(i, j) = pair.p() * (entry / pair.q());
        }
    return tau_preimage(c, out);
}

/// One summand a (x) lambda of a central-closure element.
template <FieldScalar K>
struct TensorTerm {
    Element<K> a;
    AdmissiblePair<K> lambda;
};

template <FieldScalar K>
RatMatrix<K> rat_matrix_from_poly(const PolyMatrix<K>& m) {
    RatMatrix<K> out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out.at(i, j) = RatFunc<K>::from_poly(m.at(i, j));
    return out;
}

/// theta(sum a_k (x) lambda_k) = sum tau(a_k) omega(lambda_k).
template <FieldScalar K>
RatMatrix<K> theta(const CycleAlgebra& c, const std::vector<TensorTerm<K>>& terms) {
    RatMatrix<K> out(c.n());
    for (const TensorTerm<K>& t : terms)
        out = out + rat_matrix_from_poly(tau_embed(c, t.a)).scaled(omega(t.lambda));
    return out;
}

template <FieldScalar K>
RatMatrix<K> theta(const CycleAlgebra& c, const Element<K>& a,
                   const AdmissiblePair<K>& lambda) {
    return theta(c, std::vector<TensorTerm<K>>{{a, lambda}});
}

template <FieldScalar K>
struct ClosurePreimage {
    Element<K> a;
    AdmissiblePair<K> pair;
};

/// Write M as (1/q) tau(a): q is the lcm of the entry denominators, padded by
/// one extra x when a below-diagonal numerator would otherwise have a nonzero
/// constant term.  The pair is kept as (1, q) so the decomposition is exact.
template <FieldScalar K>
ClosurePreimage<K> closure_preimage(const CycleAlgebra& c, const RatMatrix<K>& m) {
    if (m.size() != c.n()) throw PreconditionError("matrix size mismatch");
    Poly<K> q = Poly<K>::one();
    for (std::size_t i = 0; i < c.n(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j)
            q = poly_lcm(q, m.at(i, j).den());

    PolyMatrix<K> b(c.n());
    bool pad = false;
    for (std::size_t i = 0; i < c.n(); ++i)
        for (std::size_t j = 0; j < c.n(); ++j) {
            b.at(i, j) = m.at(i, j).num() * (q / m.at(i, j).den());
            if (i > j && !b.at(i, j).is_zero() && b.at(i, j).order() == 0) pad = true;
        }
    if (pad) {
        q = q * Poly<K>::x();
        for (std::size_t i = 0; i < c.n(); ++i)
            for (std::size_t j = 0; j < c.n(); ++j)
                b.at(i, j) = b.at(i, j).times_x_pow(1);
    }
    return {tau_preimage(c, b), AdmissiblePair<K>(Poly<K>::one(), std::move(q))};
}

} // namespace quiverkit
