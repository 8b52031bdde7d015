#pragma once

#include <algorithm>
#include <utility>

#include "panev/newton.hpp"
#include "panev/poly.hpp"

namespace panev {

/// Rational function over the valued field, always reduced (gcd(num,den)=1)
/// with monic denominator, so equal functions have identical representations.
class RatFunc {
public:
    RatFunc(const ValuedPoly& num, const ValuedPoly& den) : num_(num), den_(den) { normalize(); }

    static RatFunc zero(const Prime& p) {
        return RatFunc(ValuedPoly::zero(p), ValuedPoly::constant(p, Rational(1)));
    }
    static RatFunc constant(const Prime& p, const Rational& c) {
        return RatFunc(ValuedPoly::constant(p, c), ValuedPoly::constant(p, Rational(1)));
    }
    static RatFunc var(const Prime& p) {
        return RatFunc(ValuedPoly::monomial(p, Rational(1), 1),
                       ValuedPoly::constant(p, Rational(1)));
    }
    static RatFunc from_poly(const ValuedPoly& f) {
        return RatFunc(f, ValuedPoly::constant(f.prime(), Rational(1)));
    }

    const ValuedPoly& num() const { return num_; }
    const ValuedPoly& den() const { return den_; }
    const Prime& prime() const { return num_.prime(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    bool is_poly() const { return den_.is_constant(); }

    friend RatFunc operator+(const RatFunc& x, const RatFunc& y) {
        return RatFunc(x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFunc operator-(const RatFunc& x, const RatFunc& y) {
        return RatFunc(x.num_ * y.den_ - y.num_ * x.den_, x.den_ * y.den_);
    }
    friend RatFunc operator-(const RatFunc& x) { return RatFunc(-x.num_, x.den_); }
    friend RatFunc operator*(const RatFunc& x, const RatFunc& y) {
        return RatFunc(x.num_ * y.num_, x.den_ * y.den_);
    }
    friend RatFunc operator/(const RatFunc& x, const RatFunc& y) {
        if (y.is_zero()) raise(errc::division_by_zero_function, "f / 0");
        return RatFunc(x.num_ * y.den_, x.den_ * y.num_);
    }

    RatFunc inverse() const {
        if (is_zero()) raise(errc::division_by_zero_function, "1 / 0");
        return RatFunc(den_, num_);
    }

    RatFunc pow(unsigned e) const {
        RatFunc acc = constant(prime(), Rational(1));
        RatFunc base = *this;
        for (unsigned k = e; k > 0; k >>= 1) {
            if (k & 1) acc = acc * base;
            if (k > 1) base = base * base;
        }
        return acc;
    }

    friend bool operator==(const RatFunc& x, const RatFunc& y) {
        return x.num_ == y.num_ && x.den_ == y.den_;
    }
    friend bool operator!=(const RatFunc& x, const RatFunc& y) { return !(x == y); }

private:
    void normalize() {
        require_same_prime(num_.prime(), den_.prime());
        if (den_.is_zero()) raise(errc::division_by_zero_function, "zero denominator");
        if (num_.is_zero()) {
            den_ = ValuedPoly::constant(num_.prime(), Rational(1));
            return;
        }
        ValuedPoly g = poly_gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divrem(num_, g).first;
            den_ = divrem(den_, g).first;
        }
        Rational lead = den_.leading();
        if (lead != 1) {
            Rational inv = Rational(1) / lead;
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    ValuedPoly num_;
    ValuedPoly den_;
};

inline long total_degree(const RatFunc& f) {
    if (f.is_zero()) raise(errc::zero_function, "total degree of 0");
    return std::max(f.num().degree(), f.den().degree());
}

inline LogValue mu_hat_rat(const RatFunc& f, const LogRadius& s) {
    if (f.is_zero()) raise(errc::zero_function, "mu of the zero function");
    return mu_hat(f.num(), s) - mu_hat(f.den(), s);
}

inline RatFunc compose_affine_rat(const RatFunc& f, const AffineMap& L) {
    return RatFunc(compose_affine(f.num(), L), compose_affine(f.den(), L));
}

inline RatFunc derivative(const RatFunc& f, unsigned k = 1) {
    RatFunc g = f;
    for (unsigned round = 0; round < k; ++round)
        g = RatFunc(derivative(g.num(), 1) * g.den() - g.num() * derivative(g.den(), 1),
                    g.den() * g.den());
    return g;
}

/// Order of vanishing at the origin (negative for a pole).
inline long origin_order(const RatFunc& f) {
    if (f.is_zero()) raise(errc::zero_function, "origin order of 0");
    return f.num().origin_order() - f.den().origin_order();
}

/// Leading Laurent coefficient at the origin.
inline Rational origin_leading_coeff(const RatFunc& f) {
    if (f.is_zero()) raise(errc::zero_function, "origin coefficient of 0");
    return f.num().trailing() / f.den().trailing();
}

} // namespace panev
