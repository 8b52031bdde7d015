#pragma once

#include <string>
#include <utility>
#include <vector>

#include "panev/newton.hpp"
#include "panev/ratfunc.hpp"
#include "panev/series.hpp"

namespace panev {

/// Evaluation ladder "start:step:count" with exact rational start and step.
struct Ladder {
    Rational start;
    Rational step;
    long count = 0;

    std::vector<LogRadius> points() const {
        std::vector<LogRadius> out;
        out.reserve(static_cast<std::size_t>(count));
        Rational s = start;
        for (long k = 0; k < count; ++k, s += step) out.push_back(s);
        return out;
    }

    static Ladder parse(const std::string& text) {
        auto c1 = text.find(':');
        auto c2 = text.find(':', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            raise(errc::bad_input, "ladder must be start:step:count, got '" + text + "'");
        Ladder l;
        l.start = rat_parse(text.substr(0, c1));
        l.step = rat_parse(text.substr(c1 + 1, c2 - c1 - 1));
        try {
            l.count = std::stol(text.substr(c2 + 1));
        } catch (const std::exception&) {
            raise(errc::bad_input, "bad ladder count in '" + text + "'");
        }
        if (l.count <= 0) raise(errc::bad_input, "ladder count must be positive");
        return l;
    }
};

/// One row of a characteristic table; T = m + N holds exactly by construction.
struct CharacteristicRow {
    LogRadius s;
    Rational m;
    Rational N;
    Rational T;
};

/// log+ of the max term.
inline Rational m_hat(const RatFunc& f, const LogRadius& s) {
    LogValue mu = mu_hat_rat(f, s);
    if (mu.is_bottom() || mu.finite() < 0) return Rational(0);
    return mu.finite();
}

inline Rational m_hat(const ValuedPoly& f, const LogRadius& s) {
    if (f.is_zero()) raise(errc::zero_function, "m of the zero function");
    LogValue mu = mu_hat(f, s);
    if (mu.is_bottom() || mu.finite() < 0) return Rational(0);
    return mu.finite();
}

inline Rational m_hat(const TruncatedSeries& f, const LogRadius& s) {
    LogValue mu = mu_hat(f, s); // raises outside the certificate window
    if (mu.is_bottom() || mu.finite() < 0) return Rational(0);
    return mu.finite();
}

namespace detail {

/// Sum of mult * (s - s_w) over the non-origin zeros of g with s_w <= s.
inline Rational nonorigin_mass(const ValuedPoly& g, const LogRadius& s) {
    Rational acc(0);
    for (const auto& [sw, mult] : zero_log_radii(g).radii) {
        if (sw > s) break;
        acc += Rational(mult) * (s - sw);
    }
    return acc;
}

} // namespace detail

/// Poles with log-radius <= s, counted with multiplicity, origin included.
inline long n_count(const RatFunc& f, const LogRadius& s) {
    if (f.is_zero()) raise(errc::zero_function, "pole count of 0");
    if (f.den().is_constant()) return 0;
    ZeroRadii zr = zero_log_radii(f.den());
    long n = zr.origin_multiplicity;
    for (const auto& [sw, mult] : zr.radii)
        if (sw <= s) n += mult;
    return n;
}

/// Integrated pole-counting function, base radius s0 = 0: an origin pole of
/// multiplicity m0 contributes m0*s, every other pole of log-radius s_w <= s
/// contributes s - s_w.  Negative values at s < 0 are kept as-is.
inline Rational N_hat(const RatFunc& f, const LogRadius& s) {
    if (f.is_zero()) raise(errc::zero_function, "N of the zero function");
    if (f.den().is_constant()) return Rational(0);
    return Rational(f.den().origin_order()) * s + detail::nonorigin_mass(f.den(), s);
}

inline CharacteristicRow T_hat(const RatFunc& f, const LogRadius& s) {
    CharacteristicRow row;
    row.s = s;
    row.m = m_hat(f, s);
    row.N = N_hat(f, s);
    row.T = row.m + row.N;
    return row;
}

/// mu_hat(s,f) - [lambda(c0) + ord0(f)*s + zero mass - pole mass], which the
/// non-Archimedean Jensen identity makes identically zero.  A nonzero return
/// means the polygon, max-term, or zero/pole extraction disagree.
inline Rational jensen_defect(const RatFunc& f, const LogRadius& s) {
    if (f.is_zero()) raise(errc::zero_function, "jensen defect of 0");
    Rational mu = mu_hat_rat(f, s).finite();
    LogValue lam_c0 = valuation(f.prime(), origin_leading_coeff(f));
    Rational rhs = lam_c0.finite() + Rational(origin_order(f)) * s +
                   detail::nonorigin_mass(f.num(), s) - detail::nonorigin_mass(f.den(), s);
    return mu - rhs;
}

/// One line of an admissibility (slow-growth) diagnostic table.
struct RatioRow {
    LogRadius s;
    Rational numerator;   // e.g. sum of coefficient characteristics
    Rational denominator; // T of the candidate solution
    Rational ratio;
};

/// Exact per-radius ratios; report-only, nothing is asserted about decay.
inline std::vector<RatioRow> ratio_report(const std::vector<CharacteristicRow>& numerator_rows,
                                          const std::vector<CharacteristicRow>& denominator_rows) {
    if (numerator_rows.size() != denominator_rows.size())
        raise(errc::ladder_mismatch, "row counts differ");
    std::vector<RatioRow> out;
    out.reserve(numerator_rows.size());
    for (std::size_t k = 0; k < numerator_rows.size(); ++k) {
        const auto& a = numerator_rows[k];
        const auto& b = denominator_rows[k];
        if (a.s != b.s) raise(errc::ladder_mismatch, "radius ladders differ at index " + std::to_string(k));
        if (b.T <= 0) raise(errc::ladder_mismatch, "denominator characteristic not positive at s = " + rat_str(b.s));
        out.push_back({a.s, a.T, b.T, a.T / b.T});
    }
    return out;
}

} // namespace panev
