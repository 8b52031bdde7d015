#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "panev/affine.hpp"
#include "panev/error.hpp"
#include "panev/rational.hpp"
#include "panev/scalar.hpp"

namespace panev {

using LogRadius = Rational; // s = log_p r

/// Dense polynomial over Q carrying the prime that values its coefficients.
/// Coefficient vector is always trimmed: empty means the zero polynomial,
/// otherwise the back entry is the nonzero leading coefficient.
class ValuedPoly {
public:
    ValuedPoly(Prime p, std::vector<Rational> coeffs)
        : prime_(std::move(p)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static ValuedPoly zero(const Prime& p) { return ValuedPoly(p, {}); }
    static ValuedPoly constant(const Prime& p, const Rational& c) { return ValuedPoly(p, {c}); }
    /// c * z^k
    static ValuedPoly monomial(const Prime& p, const Rational& c, std::size_t k) {
        std::vector<Rational> v(k + 1, Rational(0));
        v[k] = c;
        return ValuedPoly(p, std::move(v));
    }

    const Prime& prime() const { return prime_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Degree of the zero polynomial is -1 by convention here; callers that
    /// need the mathematical convention must check is_zero() first.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    Rational coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : Rational(0);
    }

    Rational leading() const {
        if (is_zero()) raise(errc::zero_polynomial, "leading coefficient of 0");
        return coeffs_.back();
    }

    /// Order of vanishing at the origin (lowest nonzero coefficient degree).
    long origin_order() const {
        if (is_zero()) raise(errc::zero_polynomial, "origin order of 0");
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            if (coeffs_[k] != 0) return static_cast<long>(k);
        return 0; // unreachable: trimmed nonzero poly has a nonzero entry
    }

    Rational trailing() const { return coeffs_[static_cast<std::size_t>(origin_order())]; }

    friend ValuedPoly operator+(const ValuedPoly& f, const ValuedPoly& g) {
        require_same_prime(f.prime_, g.prime_);
        std::vector<Rational> out(std::max(f.coeffs_.size(), g.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.coeff(k) + g.coeff(k);
        return ValuedPoly(f.prime_, std::move(out));
    }

    friend ValuedPoly operator-(const ValuedPoly& f, const ValuedPoly& g) {
        require_same_prime(f.prime_, g.prime_);
        std::vector<Rational> out(std::max(f.coeffs_.size(), g.coeffs_.size()), Rational(0));
        for (std::size_t k = 0; k < out.size(); ++k) out[k] = f.coeff(k) - g.coeff(k);
        return ValuedPoly(f.prime_, std::move(out));
    }

    friend ValuedPoly operator-(const ValuedPoly& f) {
        std::vector<Rational> out = f.coeffs_;
        for (auto& c : out) c = -c;
        return ValuedPoly(f.prime_, std::move(out));
    }

    friend ValuedPoly operator*(const ValuedPoly& f, const ValuedPoly& g) {
        require_same_prime(f.prime_, g.prime_);
        if (f.is_zero() || g.is_zero()) return zero(f.prime_);
        std::vector<Rational> out(f.coeffs_.size() + g.coeffs_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            if (f.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j)
                out[i + j] += f.coeffs_[i] * g.coeffs_[j];
        }
        return ValuedPoly(f.prime_, std::move(out));
    }

    friend ValuedPoly operator*(const Rational& c, const ValuedPoly& f) {
        std::vector<Rational> out = f.coeffs_;
        for (auto& x : out) x *= c;
        return ValuedPoly(f.prime_, std::move(out));
    }

    friend bool operator==(const ValuedPoly& f, const ValuedPoly& g) {
        return f.prime_ == g.prime_ && f.coeffs_ == g.coeffs_;
    }
    friend bool operator!=(const ValuedPoly& f, const ValuedPoly& g) { return !(f == g); }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    Prime prime_;
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder over Q[z]; den must be nonzero.
inline std::pair<ValuedPoly, ValuedPoly> divrem(const ValuedPoly& num, const ValuedPoly& den) {
    require_same_prime(num.prime(), den.prime());
    if (den.is_zero()) raise(errc::zero_divisor, "polynomial division by zero");
    std::vector<Rational> r = num.coeffs();
    long dd = den.degree();
    if (static_cast<long>(r.size()) - 1 < dd)
        return {ValuedPoly::zero(num.prime()), num};
    std::vector<Rational> q(r.size() - static_cast<std::size_t>(dd), Rational(0));
    const Rational lead = den.leading();
    for (long k = static_cast<long>(r.size()) - 1; k >= dd; --k) {
        std::size_t uk = static_cast<std::size_t>(k);
        if (r[uk] == 0) continue;
        Rational c = r[uk] / lead;
        q[static_cast<std::size_t>(k - dd)] = c;
        for (long j = 0; j <= dd; ++j)
            r[static_cast<std::size_t>(k - dd + j)] -= c * den.coeff(static_cast<std::size_t>(j));
    }
    return {ValuedPoly(num.prime(), std::move(q)), ValuedPoly(num.prime(), std::move(r))};
}

/// Monic gcd over Q[z]; gcd(0,0) = 0.
inline ValuedPoly poly_gcd(ValuedPoly a, ValuedPoly b) {
    require_same_prime(a.prime(), b.prime());
    while (!b.is_zero()) {
        ValuedPoly r = divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return (Rational(1) / a.leading()) * a;
}

inline ValuedPoly derivative(const ValuedPoly& f, unsigned k = 1) {
    ValuedPoly g = f;
    for (unsigned round = 0; round < k; ++round) {
        if (g.is_zero() || g.degree() == 0) return ValuedPoly::zero(f.prime());
        std::vector<Rational> out(static_cast<std::size_t>(g.degree()), Rational(0));
        for (std::size_t n = 1; n < g.coeffs().size(); ++n)
            out[n - 1] = Rational(static_cast<long>(n)) * g.coeffs()[n];
        g = ValuedPoly(f.prime(), std::move(out));
    }
    return g;
}

/// f(a*z + b), expanded exactly (Horner in the image variable).
inline ValuedPoly compose_affine(const ValuedPoly& f, const AffineMap& L) {
    ValuedPoly lin(f.prime(), {L.b, L.a});
    ValuedPoly acc = ValuedPoly::zero(f.prime());
    for (long k = f.degree(); k >= 0; --k)
        acc = acc * lin + ValuedPoly::constant(f.prime(), f.coeff(static_cast<std::size_t>(k)));
    return acc;
}

/// log_p of the maximum term: max_n (lambda(a_n) + n*s).  For polynomials this
/// is the exact Gauss norm of f on |z| = p^s.
inline LogValue mu_hat(const ValuedPoly& f, const LogRadius& s) {
    LogValue best = LogValue::bottom();
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        LogValue lam = valuation(f.prime(), f.coeffs()[n]);
        if (lam.is_bottom()) continue;
        best = log_max(best, LogValue(lam.finite() + static_cast<long>(n) * s));
    }
    return best;
}

} // namespace panev
