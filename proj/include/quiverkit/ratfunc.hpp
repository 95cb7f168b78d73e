#pragma once

#include <string>
#include <utility>

#include "quiverkit/poly.hpp"

namespace quiverkit {

/// Rational function num/den in canonical form: den monic, gcd(num, den) = 1,
/// zero is 0/1.  Construction normalizes, so equal values compare equal.
template <FieldScalar K>
class RatFunc {
public:
    RatFunc() : num_(), den_(Poly<K>::one()) {}

    RatFunc(Poly<K> num, Poly<K> den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw PreconditionError("division by zero polynomial");
        normalize();
    }

    static RatFunc zero() { return RatFunc(); }
    static RatFunc one() { return from_poly(Poly<K>::one()); }
    static RatFunc from_poly(Poly<K> p) { return RatFunc(std::move(p), Poly<K>::one()); }
    static RatFunc constant(K c) { return from_poly(Poly<K>::constant(std::move(c))); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_poly() const { return den_.is_one(); }

    RatFunc operator+(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }

    RatFunc operator-(const RatFunc& o) const {
        return RatFunc(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }

    RatFunc operator*(const RatFunc& o) const {
        return RatFunc(num_ * o.num_, den_ * o.den_);
    }

    RatFunc operator/(const RatFunc& o) const {
        if (o.is_zero()) throw PreconditionError("division by zero polynomial");
        return RatFunc(num_ * o.den_, den_ * o.num_);
    }

    RatFunc operator-() const {
        RatFunc r(*this);
        r.num_ = -r.num_;
        return r;
    }

    RatFunc inverse() const {
        if (is_zero()) throw PreconditionError("division by zero polynomial");
        return RatFunc(den_, num_);
    }

    bool operator==(const RatFunc& o) const = default;

    /// Defined wherever the denominator does not vanish.
    K eval(const K& at) const {
        K d = den_.eval(at);
        if (d.is_zero()) throw PreconditionError("evaluation at a pole");
        return num_.eval(at) / d;
    }

    /// "(num)/(den)" with both sides parenthesized, plain "num" for
    /// polynomials; parses back unambiguously.
    std::string str() const {
        if (is_poly()) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize() {
        if (num_.is_zero()) {
            den_ = Poly<K>::one();
            return;
        }
        Poly<K> g = poly_gcd(num_, den_);
        num_ = num_ / g;
        den_ = den_ / g;
        K lead = den_.leading();
        if (!lead.is_one()) {
            K inv = lead.inverse();
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }

    Poly<K> num_;
    Poly<K> den_;
};

} // namespace quiverkit
