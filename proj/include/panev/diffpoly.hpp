#pragma once

#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "panev/operators.hpp"
#include "panev/ratfunc.hpp"

namespace panev {

using ExpVec = std::vector<long>;

/// Graded lexicographic order; canonical monomial order for serialization.
struct GrlexLess {
    bool operator()(const ExpVec& a, const ExpVec& b) const {
        long da = std::accumulate(a.begin(), a.end(), 0L);
        long db = std::accumulate(b.begin(), b.end(), 0L);
        if (da != db) return da < db;
        return a < b;
    }
};

/// Multivariate polynomial in X_0..X_n with rational-function coefficients.
/// Zero coefficients are never stored; exponent vectors are dense of length
/// n+1.
class DiffPoly {
public:
    using TermMap = std::map<ExpVec, RatFunc, GrlexLess>;

    DiffPoly(Prime p, std::size_t nvars) : prime_(std::move(p)), nvars_(nvars) {
        if (nvars_ == 0) raise(errc::bad_input, "DiffPoly needs at least X_0");
    }

    const Prime& prime() const { return prime_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Accumulating insert; a term that cancels to zero is dropped.
    void add_term(const ExpVec& exp, const RatFunc& coeff) {
        if (exp.size() != nvars_)
            raise(errc::arity_mismatch, "exponent vector length " + std::to_string(exp.size()) +
                                            " for " + std::to_string(nvars_) + " variables");
        require_same_prime(prime_, coeff.prime());
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.emplace(exp, coeff);
        if (!inserted) {
            RatFunc sum = it->second + coeff;
            if (sum.is_zero())
                terms_.erase(it);
            else
                it->second = sum;
        }
    }

    friend DiffPoly operator+(const DiffPoly& P, const DiffPoly& Q) {
        if (P.nvars_ != Q.nvars_) raise(errc::arity_mismatch, "variable counts differ");
        DiffPoly out = P;
        for (const auto& [e, c] : Q.terms_) out.add_term(e, c);
        return out;
    }

    friend DiffPoly operator-(const DiffPoly& P, const DiffPoly& Q) {
        if (P.nvars_ != Q.nvars_) raise(errc::arity_mismatch, "variable counts differ");
        DiffPoly out = P;
        for (const auto& [e, c] : Q.terms_) out.add_term(e, -c);
        return out;
    }

    friend DiffPoly operator*(const DiffPoly& P, const DiffPoly& Q) {
        if (P.nvars_ != Q.nvars_) raise(errc::arity_mismatch, "variable counts differ");
        DiffPoly out(P.prime_, P.nvars_);
        for (const auto& [ep, cp] : P.terms_) {
            for (const auto& [eq, cq] : Q.terms_) {
                ExpVec e(P.nvars_);
                for (std::size_t k = 0; k < P.nvars_; ++k) e[k] = ep[k] + eq[k];
                out.add_term(e, cp * cq);
            }
        }
        return out;
    }

    friend DiffPoly operator*(const RatFunc& c, const DiffPoly& P) {
        DiffPoly out(P.prime_, P.nvars_);
        for (const auto& [e, t] : P.terms_) out.add_term(e, c * t);
        return out;
    }

    friend bool operator==(const DiffPoly& P, const DiffPoly& Q) {
        return P.nvars_ == Q.nvars_ && P.terms_ == Q.terms_;
    }

private:
    Prime prime_;
    std::size_t nvars_;
    TermMap terms_;
};

inline long total_deg(const DiffPoly& P) {
    if (P.is_zero()) raise(errc::zero_diffpoly, "total degree of the zero polynomial");
    long best = 0;
    for (const auto& [e, c] : P.terms())
        best = std::max(best, std::accumulate(e.begin(), e.end(), 0L));
    return best;
}

/// Degree in X_0 alone (the alternative reading of "deg" for hypotheses).
inline long x0_deg(const DiffPoly& P) {
    if (P.is_zero()) raise(errc::zero_diffpoly, "X_0 degree of the zero polynomial");
    long best = 0;
    for (const auto& [e, c] : P.terms()) best = std::max(best, e[0]);
    return best;
}

inline bool depends_only_on_x0(const DiffPoly& P) {
    for (const auto& [e, c] : P.terms())
        for (std::size_t k = 1; k < e.size(); ++k)
            if (e[k] != 0) return false;
    return true;
}

namespace detail {

inline std::vector<RatFunc> bind_arguments(const RatFunc& f, const std::vector<OperatorSpec>& ops,
                                           std::size_t nvars) {
    if (ops.size() + 1 != nvars)
        raise(errc::arity_mismatch, std::to_string(nvars) + " variables need " +
                                        std::to_string(nvars - 1) + " operators, got " +
                                        std::to_string(ops.size()));
    std::vector<RatFunc> args;
    args.reserve(nvars);
    args.push_back(f);
    for (const auto& op : ops) args.push_back(apply_operator(f, op));
    return args;
}

} // namespace detail

/// P(f, op_1 f, ..., op_n f) as an exact rational function.
inline RatFunc eval_diffpoly(const DiffPoly& P, const RatFunc& f,
                             const std::vector<OperatorSpec>& ops) {
    std::vector<RatFunc> args = detail::bind_arguments(f, ops, P.nvars());

    // power cache per variable
    std::vector<long> maxexp(P.nvars(), 0);
    for (const auto& [e, c] : P.terms())
        for (std::size_t k = 0; k < e.size(); ++k) maxexp[k] = std::max(maxexp[k], e[k]);
    std::vector<std::vector<RatFunc>> pw(P.nvars());
    for (std::size_t k = 0; k < P.nvars(); ++k) {
        pw[k].push_back(RatFunc::constant(P.prime(), Rational(1)));
        for (long e = 1; e <= maxexp[k]; ++e) pw[k].push_back(pw[k].back() * args[k]);
    }

    RatFunc acc = RatFunc::zero(P.prime());
    for (const auto& [e, c] : P.terms()) {
        RatFunc term = c;
        for (std::size_t k = 0; k < e.size(); ++k)
            if (e[k] > 0) term = term * pw[k][static_cast<std::size_t>(e[k])];
        acc = acc + term;
    }
    return acc;
}

/// B(X) = sum b_k X^k with rational-function coefficients, b_q != 0.
class UniPoly {
public:
    UniPoly(Prime p, std::vector<RatFunc> coeffs) : prime_(std::move(p)), coeffs_(std::move(coeffs)) {
        trim();
    }

    static UniPoly zero(const Prime& p) { return UniPoly(p, {}); }

    const Prime& prime() const { return prime_; }
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    RatFunc coeff(std::size_t k) const {
        return k < coeffs_.size() ? coeffs_[k] : RatFunc::zero(prime_);
    }

    RatFunc eval(const RatFunc& x) const {
        RatFunc acc = RatFunc::zero(prime_);
        for (long k = degree(); k >= 0; --k) acc = acc * x + coeffs_[static_cast<std::size_t>(k)];
        return acc;
    }

    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
        require_same_prime(a.prime_, b.prime_);
        std::vector<RatFunc> out;
        std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
        out.reserve(n);
        for (std::size_t k = 0; k < n; ++k) out.push_back(a.coeff(k) - b.coeff(k));
        return UniPoly(a.prime_, std::move(out));
    }

    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        require_same_prime(a.prime_, b.prime_);
        if (a.is_zero() || b.is_zero()) return zero(a.prime_);
        std::vector<RatFunc> out(a.coeffs_.size() + b.coeffs_.size() - 1, RatFunc::zero(a.prime_));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                out[i + j] = out[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return UniPoly(a.prime_, std::move(out));
    }

    friend bool operator==(const UniPoly& a, const UniPoly& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    Prime prime_;
    std::vector<RatFunc> coeffs_;
};

/// Division with remainder in M(kappa)[X]: Phi = Phi1 * B + Phi2 with
/// deg Phi2 < deg B.
inline std::pair<UniPoly, UniPoly> divide_univariate(const UniPoly& Phi, const UniPoly& B) {
    require_same_prime(Phi.prime(), B.prime());
    if (B.is_zero()) raise(errc::zero_divisor, "univariate division by zero");
    std::vector<RatFunc> rem = Phi.coeffs();
    long db = B.degree();
    if (Phi.degree() < db) return {UniPoly::zero(Phi.prime()), Phi};
    std::vector<RatFunc> quot(static_cast<std::size_t>(Phi.degree() - db) + 1,
                              RatFunc::zero(Phi.prime()));
    RatFunc lead = B.coeffs().back();
    for (long k = Phi.degree(); k >= db; --k) {
        std::size_t uk = static_cast<std::size_t>(k);
        if (rem[uk].is_zero()) continue;
        RatFunc c = rem[uk] / lead;
        quot[static_cast<std::size_t>(k - db)] = c;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k - db + j)] =
                rem[static_cast<std::size_t>(k - db + j)] - c * B.coeff(static_cast<std::size_t>(j));
    }
    return {UniPoly(Phi.prime(), std::move(quot)), UniPoly(Phi.prime(), std::move(rem))};
}

/// Expand P(X_0 + a_0, ..., X_n + a_n) where a_k = op_k(a), splitting off the
/// degree-zero part: returns (Psi, Pconst) with Psi holding every monomial of
/// positive total degree and Pconst = P evaluated at a.
inline std::pair<DiffPoly, RatFunc> substitute_shift_target(const DiffPoly& P, const RatFunc& a,
                                                            const std::vector<OperatorSpec>& ops) {
    std::vector<RatFunc> shifted = detail::bind_arguments(a, ops, P.nvars());

    DiffPoly expanded(P.prime(), P.nvars());
    mpz_class binom;
    for (const auto& [exp, coeff] : P.terms()) {
        // odometer over all j <= exp componentwise
        ExpVec j(P.nvars(), 0);
        while (true) {
            RatFunc factor = coeff;
            for (std::size_t k = 0; k < P.nvars(); ++k) {
                long drop = exp[k] - j[k];
                if (drop > 0) {
                    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(exp[k]),
                                 static_cast<unsigned long>(j[k]));
                    factor = factor * RatFunc::constant(P.prime(), Rational(binom)) *
                             shifted[k].pow(static_cast<unsigned>(drop));
                }
            }
            expanded.add_term(j, factor);

            std::size_t k = 0;
            while (k < P.nvars() && j[k] == exp[k]) {
                j[k] = 0;
                ++k;
            }
            if (k == P.nvars()) break;
            ++j[k];
        }
    }

    RatFunc pconst = RatFunc::zero(P.prime());
    DiffPoly psi(P.prime(), P.nvars());
    for (const auto& [e, c] : expanded.terms()) {
        if (std::accumulate(e.begin(), e.end(), 0L) == 0)
            pconst = c;
        else
            psi.add_term(e, c);
    }
    return {std::move(psi), std::move(pconst)};
}

/// Residual B(f) * Omega(f, f_1, ...) - Phi(f, f_1, ...); zero iff the
/// instance actually solves the functional equation.
inline RatFunc clunie_split_eval(const RatFunc& f, const UniPoly& B, const DiffPoly& Omega,
                                 const DiffPoly& Phi, const std::vector<OperatorSpec>& ops) {
    return B.eval(f) * eval_diffpoly(Omega, f, ops) - eval_diffpoly(Phi, f, ops);
}

} // namespace panev
