#pragma once

#include <string>

#include "panev/diffpoly.hpp"
#include "panev/poly.hpp"
#include "panev/ratfunc.hpp"

namespace panev {

/// Expression renderers whose output re-parses and re-elaborates to the same
/// canonical value (the printer half of the round-trip law).

inline std::string rat_literal(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

namespace detail {

inline std::string power_of(const std::string& var, long e) {
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

} // namespace detail

inline std::string poly_str(const ValuedPoly& f) {
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (long k = f.degree(); k >= 0; --k) {
        Rational c = f.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        Rational mag = c < 0 ? Rational(-c) : c;
        std::string term;
        if (k == 0)
            term = rat_literal(mag);
        else if (mag == 1)
            term = detail::power_of("z", k);
        else
            term = rat_literal(mag) + "*" + detail::power_of("z", k);
        if (first) {
            out = (c < 0 ? "-" : "") + term;
            first = false;
        } else {
            out += (c < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

/// Parenthesized unless the polynomial is safe as a single factor.
inline std::string poly_factor(const ValuedPoly& f) {
    if (f.is_zero()) return "0";
    if (f.degree() == 0) {
        Rational c = f.coeff(0);
        if (c >= 0 && c.get_den() == 1) return rat_literal(c);
        return "(" + rat_literal(c) + ")";
    }
    long k = f.degree();
    bool single = true;
    for (long j = 0; j < k; ++j)
        if (f.coeff(static_cast<std::size_t>(j)) != 0) single = false;
    if (single && f.leading() == 1) return detail::power_of("z", k);
    return "(" + poly_str(f) + ")";
}

inline std::string ratfunc_str(const RatFunc& f) {
    if (f.is_zero()) return "0";
    if (f.is_poly()) return poly_str(f.num());
    return poly_factor(f.num()) + "/" + poly_factor(f.den());
}

inline std::string ratfunc_factor(const RatFunc& f) {
    if (f.is_zero()) return "0";
    if (f.is_poly()) return poly_factor(f.num());
    return poly_factor(f.num()) + "/" + poly_factor(f.den());
}

inline std::string diffpoly_str(const DiffPoly& P) {
    if (P.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [exp, coeff] : P.terms()) {
        std::string mono;
        for (std::size_t k = 0; k < exp.size(); ++k) {
            if (exp[k] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += detail::power_of("X" + std::to_string(k), exp[k]);
        }
        std::string term;
        bool coeff_is_one = coeff.is_poly() && coeff.num().is_constant() && !coeff.is_zero() &&
                            coeff.num().coeff(0) == 1;
        if (mono.empty())
            term = ratfunc_factor(coeff);
        else if (coeff_is_one)
            term = mono;
        else
            term = ratfunc_factor(coeff) + "*" + mono;
        out += first ? term : " + " + term;
        first = false;
    }
    return out;
}

} // namespace panev
