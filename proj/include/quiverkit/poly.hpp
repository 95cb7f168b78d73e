#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "quiverkit/scalar.hpp"

namespace quiverkit {

/// Dense univariate polynomial over an exact field.  Coefficients are stored
/// ascending by degree with no trailing zeros, so representations are unique.
template <FieldScalar K>
class Poly {
public:
    Poly() = default;

    static Poly zero() { return Poly(); }
    static Poly one() { return constant(K::one()); }
    static Poly x() { return monomial(K::one(), 1); }

    static Poly constant(K c) {
        Poly p;
        if (!c.is_zero()) p.coeffs_.push_back(std::move(c));
        return p;
    }

    static Poly monomial(K c, std::size_t deg) {
        Poly p;
        if (!c.is_zero()) {
            p.coeffs_.assign(deg, K::zero());
            p.coeffs_.push_back(std::move(c));
        }
        return p;
    }

    /// Coefficients ascending by degree.
    static Poly from_coeffs(std::vector<K> coeffs) {
        Poly p;
        p.coeffs_ = std::move(coeffs);
        p.trim();
        return p;
    }

    static Poly from_longs(std::initializer_list<long long> ascending) {
        std::vector<K> cs;
        cs.reserve(ascending.size());
        for (long long c : ascending) cs.push_back(K::from_long(c));
        return from_coeffs(std::move(cs));
    }

    /// Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }

    K coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : K::zero();
    }

    K leading() const {
        return coeffs_.empty() ? K::zero() : coeffs_.back();
    }

    bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

    /// Exponent of the lowest nonzero term; -1 for the zero polynomial.
    int order() const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) return static_cast<int>(i);
        return -1;
    }

    Poly operator+(const Poly& o) const {
        std::vector<K> cs(std::max(coeffs_.size(), o.coeffs_.size()), K::zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) cs[i] = coeffs_[i];
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) cs[i] += o.coeffs_[i];
        return from_coeffs(std::move(cs));
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator-() const {
        Poly p(*this);
        for (K& c : p.coeffs_) c = -c;
        return p;
    }

    Poly operator*(const Poly& o) const {
        if (is_zero() || o.is_zero()) return Poly();
        std::vector<K> cs(coeffs_.size() + o.coeffs_.size() - 1, K::zero());
        for (std::size_t i = 0; i < coeffs_.size(); ++i)
            for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
                cs[i + j] += coeffs_[i] * o.coeffs_[j];
        return from_coeffs(std::move(cs));
    }

    Poly scaled(const K& c) const {
        Poly p;
        if (c.is_zero()) return p;
        p.coeffs_ = coeffs_;
        for (K& a : p.coeffs_) a *= c;
        return p;
    }

    Poly times_x_pow(std::size_t k) const {
        if (is_zero() || k == 0) return *this;
        Poly p;
        p.coeffs_.assign(k, K::zero());
        p.coeffs_.insert(p.coeffs_.end(), coeffs_.begin(), coeffs_.end());
        return p;
    }

    /// Long division; the divisor must be nonzero.
    std::pair<Poly, Poly> divmod(const Poly& d) const {
        if (d.is_zero()) throw PreconditionError("division by zero polynomial");
        Poly r(*this);
        std::vector<K> q(degree() >= d.degree() && degree() >= 0
                             ? static_cast<std::size_t>(degree() - d.degree()) + 1
                             : 0,
                         K::zero());
        K dinv = d.leading().inverse();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
            K c = r.leading() * dinv;
            q[shift] = c;
            r = r - d.scaled(c).times_x_pow(shift);
        }
        return {from_coeffs(std::move(q)), r};
    }

    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    bool divides(const Poly& a) const {
        if (is_zero()) return a.is_zero();
        return a.divmod(*this).second.is_zero();
    }

    Poly monic() const {
        if (is_zero() || is_monic()) return *this;
        return scaled(leading().inverse());
    }

    K eval(const K& at) const {
        K acc = K::zero();
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * at + *it;
        return acc;
    }

    bool operator==(const Poly& o) const = default;

    /// Canonical form, descending degree, no spaces: "x^2+3/2*x+1".
    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (int d = degree(); d >= 0; --d) {
            K c = coeff(static_cast<std::size_t>(d));
            if (c.is_zero()) continue;
            bool neg = c.is_negative();
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? "-" : "+";
            }
            K a = neg ? -c : c;
            if (d == 0) {
                out += a.str();
            } else {
                if (!a.is_one()) out += a.str() + "*";
                out += d == 1 ? "x" : "x^" + std::to_string(d);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::vector<K> coeffs_;
};

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0.
template <FieldScalar K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        Poly<K> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Monic lcm via a*b/gcd; lcm with the zero polynomial is 0.
template <FieldScalar K>
Poly<K> poly_lcm(const Poly<K>& a, const Poly<K>& b) {
    if (a.is_zero() || b.is_zero()) return Poly<K>();
    Poly<K> g = poly_gcd(a, b);
    return ((a * b) / g).monic();
}

} // namespace quiverkit
