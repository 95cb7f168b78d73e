#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <concepts>
#include <cstdint>
#include <string>

#include "quiverkit/errors.hpp"

namespace quiverkit {

/// Exact scalar interface shared by the ground fields.  Everything downstream
/// (polynomials, matrices, algebra elements) is generic over this.
template <typename K>
concept FieldScalar = requires(const K a, const K b) {
    { K::zero() } -> std::same_as<K>;
    { K::one() } -> std::same_as<K>;
    { K::from_long(0LL) } -> std::same_as<K>;
    { a + b } -> std::same_as<K>;
    { a - b } -> std::same_as<K>;
    { a * b } -> std::same_as<K>;
    { a / b } -> std::same_as<K>;
    { -a } -> std::same_as<K>;
    { a.inverse() } -> std::same_as<K>;
    { a.is_zero() } -> std::same_as<bool>;
    { a.is_one() } -> std::same_as<bool>;
    { a.is_negative() } -> std::same_as<bool>;
    { a == b } -> std::same_as<bool>;
    { a.str() } -> std::same_as<std::string>;
};

/// Arbitrary-precision rational.  Always in lowest terms with positive
/// denominator; the backend keeps that canonical form on every operation.
class Rational {
public:
    using Backend = boost::multiprecision::cpp_rational;

    Rational() = default;
    explicit Rational(Backend v) : v_(std::move(v)) {}

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(Backend(1)); }
    static Rational from_long(long long n) { return Rational(Backend(n)); }

    static Rational from_fraction(long long num, long long den) {
        if (den == 0) throw PreconditionError("division by zero");
        return Rational(Backend(num) / Backend(den));
    }

    Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
    Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
    Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
    Rational operator-() const { return Rational(-v_); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw PreconditionError("division by zero");
        return Rational(v_ / o.v_);
    }

    Rational inverse() const {
        if (is_zero()) throw PreconditionError("division by zero");
        return Rational(Backend(1) / v_);
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    bool is_zero() const { return v_.is_zero(); }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return v_ < 0; }
    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }

    boost::multiprecision::cpp_int num() const { return numerator(v_); }
    boost::multiprecision::cpp_int den() const { return denominator(v_); }

    std::string str() const { return v_.str(); }

private:
    Backend v_;
};

/// Prime field GF(p), p an odd-or-2 prime below 2^31.  The modulus is fixed
/// once per run before any value is created; values hold the canonical
/// representative in [0, p).
class Fp {
public:
    Fp() : v_(0) {}

    /// Validates primality by trial division; p < 2^31 keeps products inside
    /// unsigned 64-bit range.
    static void set_modulus(std::uint64_t p) {
        if (p < 2 || p >= (1ULL << 31) || !is_prime(p))
            throw PreconditionError("field modulus must be a prime below 2^31");
        modulus_ = p;
    }

    static std::uint64_t modulus() {
        if (modulus_ == 0) throw PreconditionError("field modulus not set");
        return modulus_;
    }

    static Fp zero() { return Fp(); }
    static Fp one() { return from_long(1); }

    static Fp from_long(long long n) {
        auto p = static_cast<long long>(modulus());
        long long r = n % p;
        if (r < 0) r += p;
        return Fp(static_cast<std::uint64_t>(r));
    }

    static Fp from_fraction(long long num, long long den) {
        return from_long(num) / from_long(den);
    }

    Fp operator+(const Fp& o) const {
        std::uint64_t s = v_ + o.v_;
        if (s >= modulus()) s -= modulus();
        return Fp(s);
    }

    Fp operator-(const Fp& o) const {
        std::uint64_t p = modulus();
        return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_);
    }

    Fp operator*(const Fp& o) const { return Fp((v_ * o.v_) % modulus()); }
    Fp operator-() const { return v_ == 0 ? *this : Fp(modulus() - v_); }
    Fp operator/(const Fp& o) const { return *this * o.inverse(); }

    Fp inverse() const {
        if (v_ == 0) throw PreconditionError("division by zero");
        // Extended Euclid on (v, p); p prime makes every nonzero v a unit.
        std::int64_t t = 0, newt = 1;
        std::int64_t r = static_cast<std::int64_t>(modulus());
        std::int64_t newr = static_cast<std::int64_t>(v_);
        while (newr != 0) {
            std::int64_t q = r / newr;
            t = std::exchange(newt, t - q * newt);
            r = std::exchange(newr, r - q * newr);
        }
        if (t < 0) t += static_cast<std::int64_t>(modulus());
        return Fp(static_cast<std::uint64_t>(t));
    }

    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_negative() const { return false; }
    bool operator==(const Fp& o) const = default;

    std::uint64_t value() const { return v_; }
    std::string str() const { return std::to_string(v_); }

private:
    explicit Fp(std::uint64_t v) : v_(v) {}

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        for (std::uint64_t d = 2; d * d <= n; ++d)
            if (n % d == 0) return false;
        return true;
    }

    std::uint64_t v_;
    static inline std::uint64_t modulus_ = 0;
};

static_assert(FieldScalar<Rational>);
static_assert(FieldScalar<Fp>);

} // namespace quiverkit
