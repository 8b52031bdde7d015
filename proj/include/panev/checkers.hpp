#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "panev/instances.hpp"
#include "panev/nevanlinna.hpp"
#include "panev/verdict.hpp"

namespace panev {

struct CheckOptions {
    /// Read "deg Phi" in the hypothesis deg B >= deg Phi as degree in X_0
    /// alone instead of total degree.  The bound multiplier l always uses
    /// total degree; that is what the estimate's proof consumes.
    bool x0_degree_reading = false;
};

struct CheckOutput {
    std::vector<Verdict> verdicts;
    std::vector<RatioRow> ratios; // advisory decay tables, never asserted
    std::vector<std::pair<std::string, std::string>> measured;

    void merge(CheckOutput other) {
        verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
        ratios.insert(ratios.end(), other.ratios.begin(), other.ratios.end());
        measured.insert(measured.end(), other.measured.begin(), other.measured.end());
    }
};

// ---- window plumbing --------------------------------------------------------

struct WindowSplit {
    std::vector<LogRadius> in;
    long skipped = 0;
};

/// Points strictly above an exclusive bound (bottom bound admits everything).
inline WindowSplit split_by_bound(const std::vector<LogRadius>& pts, const LogValue& bound) {
    WindowSplit w;
    for (const auto& s : pts) {
        if (bound.is_bottom() || LogValue(s) > bound)
            w.in.push_back(s);
        else
            ++w.skipped;
    }
    return w;
}

inline WindowSplit split_by_ops_window(const Prime& p, const std::vector<OperatorSpec>& ops,
                                       const std::vector<LogRadius>& pts) {
    WindowSplit w;
    for (const auto& s : pts) {
        bool ok = true;
        for (const auto& op : ops) ok = ok && op.in_window(p, s);
        if (ok)
            w.in.push_back(s);
        else
            ++w.skipped;
    }
    return w;
}

namespace detail {

inline void require_window(bool ok, const LogRadius& s) {
    if (!ok)
        raise(errc::precondition_window, "radius s = " + rat_str(s) + " is outside the lemma window");
}

inline void require_ops_window(const Prime& p, const std::vector<OperatorSpec>& ops,
                               const LogRadius& s) {
    for (const auto& op : ops) require_window(op.in_window(p, s), s);
}

inline Rational m_or_zero(const RatFunc& h, const LogRadius& s) {
    return h.is_zero() ? Rational(0) : m_hat(h, s);
}

inline Rational N_or_zero(const RatFunc& h, const LogRadius& s) {
    return h.is_zero() ? Rational(0) : N_hat(h, s);
}

inline Rational T_or_zero(const RatFunc& h, const LogRadius& s) {
    return h.is_zero() ? Rational(0) : T_hat(h, s).T;
}

inline LogValue abs_diff(const Rational& a, const Rational& b) {
    Rational d = a - b;
    if (d < 0) d = -d;
    return LogValue(d);
}

} // namespace detail

// ---- difference analogue of the logarithmic derivative lemma ----------------

/// Entire case: |a| <= 1, window s > lambda(b) - lambda(a).  Emits the
/// composition bound, both mu-ratio bounds and the m = 0 corollary forms.
inline CheckOutput check_lld_entire(const ValuedPoly& f, const AffineMap& L, unsigned m,
                                    const std::vector<LogRadius>& ladder,
                                    const std::string& id = "lld-entire") {
    if (f.is_zero()) raise(errc::zero_function, "lld check needs f != 0");
    const Prime& p = f.prime();
    if (valuation(p, L.a) > LogValue(Rational(0)))
        raise(errc::hypothesis_violation, "entire lemma needs |a| <= 1");

    LogValue bound = valuation(p, L.b) - valuation(p, L.a);

    ValuedPoly fL = compose_affine(f, L);
    ValuedPoly dm = f;
    for (unsigned j = 0; j < m; ++j) dm = compose_affine(dm, L) - dm;

    CheckOutput out;
    for (const auto& s : ladder) {
        detail::require_window(bound.is_bottom() || LogValue(s) > bound, s);
        LogValue mu_f = mu_hat(f, s);
        LogValue mu_fL = mu_hat(fL, s);
        LogValue mu_dm = mu_hat(dm, s);

        out.verdicts.push_back(Verdict::le(id, "mu_compose_le", s, mu_fL, mu_f));
        out.verdicts.push_back(Verdict::le(id, "mu_shift_ratio_le0", s, mu_fL - mu_f,
                                           LogValue(Rational(0))));
        out.verdicts.push_back(Verdict::le(id, "mu_delta_ratio_le0", s, mu_dm - mu_f,
                                           LogValue(Rational(0))));
        Rational m_shift = log_max(LogValue(Rational(0)), mu_fL - mu_f).finite();
        Rational m_delta = log_max(LogValue(Rational(0)), mu_dm - mu_f).finite();
        out.verdicts.push_back(
            Verdict::le(id, "m_shift_ratio_eq0", s, LogValue(m_shift), LogValue(Rational(0))));
        out.verdicts.push_back(
            Verdict::le(id, "m_delta_ratio_eq0", s, LogValue(m_delta), LogValue(Rational(0))));
    }
    return out;
}

/// Meromorphic case: |a| = 1, window s > lambda(b).  The composition law is an
/// exact equality, emitted as a le/ge pair.
inline CheckOutput check_lld_mero(const RatFunc& f, const AffineMap& L, unsigned m,
                                  const std::vector<LogRadius>& ladder,
                                  const std::string& id = "lld-mero") {
    if (f.is_zero()) raise(errc::zero_function, "lld check needs f != 0");
    const Prime& p = f.prime();
    if (!unit_check(p, L.a)) raise(errc::hypothesis_violation, "meromorphic lemma needs |a| = 1");

    LogValue bound = valuation(p, L.b);

    RatFunc fL = compose_affine_rat(f, L);
    RatFunc dm = f;
    for (unsigned j = 0; j < m; ++j) dm = delta_once(dm, L);

    CheckOutput out;
    for (const auto& s : ladder) {
        detail::require_window(bound.is_bottom() || LogValue(s) > bound, s);
        LogValue mu_f = mu_hat_rat(f, s);
        LogValue mu_fL = mu_hat_rat(fL, s);
        LogValue mu_dm = dm.is_zero() ? LogValue::bottom() : mu_hat_rat(dm, s);

        out.verdicts.push_back(Verdict::le(id, "mu_compose_le", s, mu_fL, mu_f));
        out.verdicts.push_back(Verdict::le(id, "mu_compose_ge", s, mu_f, mu_fL));
        Rational m_shift = log_max(LogValue(Rational(0)), mu_fL - mu_f).finite();
        out.verdicts.push_back(
            Verdict::le(id, "m_shift_ratio_eq0", s, LogValue(m_shift), LogValue(Rational(0))));
        out.verdicts.push_back(Verdict::le(id, "mu_delta_ratio_le0", s, mu_dm - mu_f,
                                           LogValue(Rational(0))));
        Rational m_delta = log_max(LogValue(Rational(0)), mu_dm - mu_f).finite();
        out.verdicts.push_back(
            Verdict::le(id, "m_delta_ratio_eq0", s, LogValue(m_delta), LogValue(Rational(0))));
    }
    return out;
}

// ---- Clunie-type bounds -------------------------------------------------------

namespace detail {

inline void validate_clunie_hypotheses(const ClunieInstance& inst, const CheckOptions& opts) {
    if (inst.B.is_zero() || inst.Omega.is_zero() || inst.Phi.is_zero())
        raise(errc::hypothesis_violation, "B, Omega, Phi must all be nonzero");
    if (!inst.residual().is_zero())
        raise(errc::not_a_solution, "B(f)*Omega - Phi does not vanish for instance " + inst.id);
    long deg_phi = opts.x0_degree_reading ? x0_deg(inst.Phi) : total_deg(inst.Phi);
    if (inst.B.degree() < deg_phi)
        raise(errc::hypothesis_violation,
              "deg B = " + std::to_string(inst.B.degree()) + " < deg Phi = " + std::to_string(deg_phi));
}

} // namespace detail

/// Proximity bound m(r,Omega) <= sum m(r,c_i) + sum m(r,d_j) + l*m(r,1/b_q)
/// + l*sum m(r,b_j) with l = max(1, deg Omega), checked per radius.
inline CheckOutput check_clunie_m(const ClunieInstance& inst, const std::vector<LogRadius>& ladder,
                                  const CheckOptions& opts = {}) {
    detail::validate_clunie_hypotheses(inst, opts);
    RatFunc omega_eval = eval_diffpoly(inst.Omega, inst.f, inst.ops);
    long l = std::max(1L, total_deg(inst.Omega));
    RatFunc bq = inst.B.coeffs().back();

    CheckOutput out;
    for (const auto& s : ladder) {
        detail::require_ops_window(inst.prime, inst.ops, s);
        Rational lhs = detail::m_or_zero(omega_eval, s);
        Rational rhs(0);
        for (const auto& [e, c] : inst.Omega.terms()) rhs += m_hat(c, s);
        for (const auto& [e, d] : inst.Phi.terms()) rhs += m_hat(d, s);
        rhs += Rational(l) * m_hat(bq.inverse(), s);
        for (const auto& b : inst.B.coeffs())
            if (!b.is_zero()) rhs += Rational(l) * m_hat(b, s);
        out.verdicts.push_back(Verdict::le(inst.id, "clunie_m", s, LogValue(lhs), LogValue(rhs)));
    }
    return out;
}

/// Valence bound, only available when Phi is a polynomial of f alone.  With
/// all b_j constant the additive term vanishes and the inequality is asserted
/// outright; otherwise the minimal constant K* that would make it hold is
/// measured and reported without any assertion.
inline CheckOutput check_clunie_N(const ClunieInstance& inst, const std::vector<LogRadius>& ladder,
                                  const CheckOptions& opts = {}) {
    if (!depends_only_on_x0(inst.Phi))
        raise(errc::not_polynomial_in_f, "Phi must depend on X_0 only for the N bound");
    detail::validate_clunie_hypotheses(inst, opts);

    bool constant_b = true;
    for (const auto& b : inst.B.coeffs())
        if (!b.is_zero() && !b.is_constant()) constant_b = false;

    RatFunc omega_eval = eval_diffpoly(inst.Omega, inst.f, inst.ops);

    CheckOutput out;
    bool have_kstar = false;
    Rational kstar(0);
    for (const auto& s : ladder) {
        detail::require_ops_window(inst.prime, inst.ops, s);
        Rational lhs = detail::N_or_zero(omega_eval, s);
        Rational rhs(0);
        for (const auto& [e, c] : inst.Omega.terms()) rhs += N_hat(c, s);
        for (const auto& [e, d] : inst.Phi.terms()) rhs += N_hat(d, s);
        if (constant_b) {
            out.verdicts.push_back(Verdict::le(inst.id, "clunie_N", s, LogValue(lhs), LogValue(rhs)));
        } else {
            Rational denom(0);
            for (const auto& b : inst.B.coeffs())
                if (!b.is_zero() && !b.is_constant()) denom += N_hat(b.inverse(), s);
            if (denom > 0) {
                Rational ratio = (lhs - rhs) / denom;
                if (!have_kstar || ratio > kstar) kstar = ratio;
                have_kstar = true;
            }
        }
    }
    if (!constant_b)
        out.measured.emplace_back("Kstar:" + inst.id, have_kstar ? rat_str(kstar) : "none");
    return out;
}

// ---- degree identity ------------------------------------------------------------

namespace detail {

/// Smallest radius beyond which T_hat(s,h) is affine with slope equal to the
/// total degree: past every Newton-polygon slope of num and den, and past the
/// last crossing of their max terms.
inline Rational stable_radius(const RatFunc& h) {
    Rational s0(0);
    auto absorb = [&s0](const ValuedPoly& g) {
        if (g.is_constant()) return;
        for (const auto& [sw, mult] : zero_log_radii(g).radii)
            if (sw > s0) s0 = sw;
    };
    absorb(h.num());
    absorb(h.den());
    long dp = h.num().degree();
    long dq = h.den().degree();
    if (dp != dq) {
        Rational mup = mu_hat(h.num(), s0).finite();
        Rational muq = mu_hat(h.den(), s0).finite();
        Rational cross = s0 + (muq - mup) / Rational(dp - dq);
        if (cross > s0) s0 = cross;
    }
    return s0 + 1;
}

inline RatFunc eval_scalar_poly_at(const ValuedPoly& g, const RatFunc& x) {
    RatFunc acc = RatFunc::zero(x.prime());
    for (long k = g.degree(); k >= 0; --k)
        acc = acc * x + RatFunc::constant(x.prime(), g.coeff(static_cast<std::size_t>(k)));
    return acc;
}

} // namespace detail

/// Exact slope rendition of T(r, (Phi/B) o f) = max(deg Phi, deg B) * T(r, f):
/// measured between two radii beyond every zero, pole and max-term crossing.
inline CheckOutput check_degree_identity(const RatFunc& f, const UniPoly& Phi, const UniPoly& B,
                                         const std::string& id = "degree") {
    if (f.is_zero() || f.is_constant())
        raise(errc::hypothesis_violation, "degree identity needs nonconstant f");
    if (B.is_zero() || Phi.is_zero())
        raise(errc::degenerate_composition, "Phi/B must be a nonzero rational function of X");
    const Prime& p = f.prime();

    auto to_scalar_poly = [&p](const UniPoly& u, const char* which) {
        std::vector<Rational> coeffs;
        for (const auto& c : u.coeffs()) {
            if (!c.is_constant())
                raise(errc::hypothesis_violation,
                      std::string(which) + " must have constant scalar coefficients");
            coeffs.push_back(c.is_zero() ? Rational(0) : c.num().coeff(0));
        }
        return ValuedPoly(p, std::move(coeffs));
    };
    ValuedPoly phiX = to_scalar_poly(Phi, "Phi");
    ValuedPoly bX = to_scalar_poly(B, "B");

    // lowest terms as a function of X
    ValuedPoly g = poly_gcd(phiX, bX);
    if (!g.is_constant()) {
        phiX = divrem(phiX, g).first;
        bX = divrem(bX, g).first;
    }
    long d = std::max(phiX.degree(), bX.degree());

    RatFunc bf = detail::eval_scalar_poly_at(bX, f);
    if (bf.is_zero()) raise(errc::degenerate_composition, "B o f vanishes identically");
    RatFunc rf = detail::eval_scalar_poly_at(phiX, f) / bf;
    if (rf.is_zero()) raise(errc::degenerate_composition, "(Phi/B) o f vanishes identically");

    Rational s1 = std::max(detail::stable_radius(f), detail::stable_radius(rf));
    Rational s2 = s1 + 1;

    Rational slope_f = T_hat(f, s2).T - T_hat(f, s1).T;
    Rational slope_rf = T_hat(rf, s2).T - T_hat(rf, s1).T;

    CheckOutput out;
    out.verdicts.push_back(Verdict::le(id, "degree_base_slope_eq", s2,
                                       detail::abs_diff(slope_f, Rational(total_degree(f))),
                                       LogValue(Rational(0))));
    out.verdicts.push_back(Verdict::le(id, "degree_slope_eq", s2,
                                       detail::abs_diff(slope_rf, Rational(d) * slope_f),
                                       LogValue(Rational(0))));
    return out;
}

// ---- Mokhon'ko-type smallness ------------------------------------------------------

/// Per-radius form of the proof chain for m(r, 1/(f-a)): with g = f - a and
/// Psi + P = 0 after substitution,
///   m(r,1/g) <= sum_i [m(r,C_i) + sum_k i_k m(r,g_k/g)] + m(r,1/P).
/// Also emits the decay table of m(r,1/g) against T(r,f).
inline CheckOutput check_mokhonko(const MokhonkoInstance& inst, const std::vector<LogRadius>& ladder) {
    if (!eval_diffpoly(inst.P, inst.f, inst.ops).is_zero())
        raise(errc::not_a_solution, "f does not satisfy P = 0 for instance " + inst.id);
    auto [psi, pconst] = substitute_shift_target(inst.P, inst.a, inst.ops);
    if (pconst.is_zero())
        raise(errc::target_is_solution, "target a satisfies P = 0 for instance " + inst.id);
    RatFunc g = inst.f - inst.a;
    if (g.is_zero()) raise(errc::target_is_solution, "a = f leaves nothing to measure");

    std::vector<RatFunc> gk;
    gk.reserve(inst.ops.size());
    for (const auto& op : inst.ops) gk.push_back(apply_operator(g, op));
    RatFunc ginv = g.inverse();
    RatFunc pinv = pconst.inverse();

    CheckOutput out;
    for (const auto& s : ladder) {
        detail::require_ops_window(inst.prime, inst.ops, s);
        Rational lhs = m_hat(ginv, s);
        Rational rhs(0);
        for (const auto& [e, C] : psi.terms()) {
            rhs += m_hat(C, s);
            for (std::size_t k = 1; k < e.size(); ++k) {
                if (e[k] == 0) continue;
                RatFunc ratio_k = gk[k - 1].is_zero() ? RatFunc::zero(inst.prime) : gk[k - 1] / g;
                rhs += Rational(e[k]) * detail::m_or_zero(ratio_k, s);
            }
        }
        rhs += m_hat(pinv, s);
        out.verdicts.push_back(Verdict::le(inst.id, "mokhonko_m", s, LogValue(lhs), LogValue(rhs)));

        Rational tf = T_hat(inst.f, s).T;
        if (tf > 0) out.ratios.push_back({s, lhs, tf, lhs / tf});
    }
    return out;
}

// ---- Malmquist consequence ---------------------------------------------------------

/// The division-algorithm proof steps behind the degree restriction: rewrite
/// B(f)(Omega - Phi1) = Phi2(f), bound the rewritten equation Clunie-style,
/// and bound T(r,Omega) by deg(Omega) T(r,f) + sum T(r,c_i) + C with C
/// measured at the first ladder radius.  The asymptotic conclusions q = 0 and
/// p <= deg Omega are reported as advisory data, never asserted.
inline CheckOutput check_malmquist_consequence(const ClunieInstance& inst,
                                               const std::vector<LogRadius>& ladder,
                                               const CheckOptions& opts = {}) {
    if (!depends_only_on_x0(inst.Phi))
        raise(errc::not_polynomial_in_f, "Malmquist form needs Phi polynomial in f");
    detail::validate_clunie_hypotheses(inst, opts);
    if (ladder.empty()) return {};

    // Phi as a univariate polynomial, then Phi = Phi1 * B + Phi2
    std::vector<RatFunc> phi_coeffs(static_cast<std::size_t>(x0_deg(inst.Phi)) + 1,
                                    RatFunc::zero(inst.prime));
    for (const auto& [e, d] : inst.Phi.terms()) phi_coeffs[static_cast<std::size_t>(e[0])] = d;
    UniPoly phi_uni(inst.prime, std::move(phi_coeffs));
    auto [phi1, phi2] = divide_univariate(phi_uni, inst.B);

    DiffPoly omega_res = inst.Omega; // Omega - Phi1 as a difference polynomial
    for (std::size_t k = 0; k < phi1.coeffs().size(); ++k) {
        ExpVec e(inst.Omega.nvars(), 0);
        e[0] = static_cast<long>(k);
        omega_res.add_term(e, -phi1.coeffs()[k]);
    }

    RatFunc omega_eval = eval_diffpoly(inst.Omega, inst.f, inst.ops);
    RatFunc res_eval = eval_diffpoly(omega_res, inst.f, inst.ops);
    long l_res = omega_res.is_zero() ? 1 : std::max(1L, total_deg(omega_res));
    long deg_omega = total_deg(inst.Omega);
    RatFunc bq = inst.B.coeffs().back();

    bool constant_b = true;
    for (const auto& b : inst.B.coeffs())
        if (!b.is_zero() && !b.is_constant()) constant_b = false;

    CheckOutput out;
    bool first = true;
    Rational C(0);
    for (const auto& s : ladder) {
        detail::require_ops_window(inst.prime, inst.ops, s);

        // Clunie bound for the rewritten equation B(f)(Omega - Phi1) = Phi2(f)
        Rational rhs_m(0);
        if (!omega_res.is_zero())
            for (const auto& [e, c] : omega_res.terms()) rhs_m += m_hat(c, s);
        for (const auto& d : phi2.coeffs())
            if (!d.is_zero()) rhs_m += m_hat(d, s);
        rhs_m += Rational(l_res) * m_hat(bq.inverse(), s);
        for (const auto& b : inst.B.coeffs())
            if (!b.is_zero()) rhs_m += Rational(l_res) * m_hat(b, s);
        Rational lhs_m = detail::m_or_zero(res_eval, s);
        out.verdicts.push_back(
            Verdict::le(inst.id, "malmquist_m_rearranged", s, LogValue(lhs_m), LogValue(rhs_m)));

        if (constant_b) {
            Rational rhs_N(0);
            if (!omega_res.is_zero())
                for (const auto& [e, c] : omega_res.terms()) rhs_N += N_hat(c, s);
            for (const auto& d : phi2.coeffs())
                if (!d.is_zero()) rhs_N += N_hat(d, s);
            Rational lhs_T = detail::T_or_zero(res_eval, s);
            out.verdicts.push_back(Verdict::le(inst.id, "malmquist_T_rearranged", s, LogValue(lhs_T),
                                               LogValue(rhs_m + rhs_N)));
        }

        // growth bound T(r,Omega) <= deg(Omega) T(r,f) + sum T(r,c_i) + C
        Rational base = Rational(deg_omega) * T_hat(inst.f, s).T;
        for (const auto& [e, c] : inst.Omega.terms()) base += T_hat(c, s).T;
        Rational lhs_T = detail::T_or_zero(omega_eval, s);
        if (first) {
            Rational excess = lhs_T - base;
            Rational n_excess = detail::N_or_zero(omega_eval, s) -
                                Rational(deg_omega) * N_hat(inst.f, s);
            for (const auto& [e, c] : inst.Omega.terms()) n_excess -= N_hat(c, s);
            C = std::max(Rational(0), std::max(excess, n_excess));
            out.measured.emplace_back("C:" + inst.id, rat_str(C));
            first = false;
        }
        out.verdicts.push_back(
            Verdict::le(inst.id, "malmquist_T_growth", s, LogValue(lhs_T), LogValue(base + C)));

        // admissibility decay table (Definition of slowly moving coefficients)
        Rational coeff_T(0);
        for (const auto& [e, c] : inst.Omega.terms()) coeff_T += T_hat(c, s).T;
        for (const auto& [e, d] : inst.Phi.terms()) coeff_T += T_hat(d, s).T;
        for (const auto& b : inst.B.coeffs())
            if (!b.is_zero()) coeff_T += T_hat(b, s).T;
        Rational tf = T_hat(inst.f, s).T;
        if (tf > 0) out.ratios.push_back({s, coeff_T, tf, coeff_T / tf});
    }

    out.measured.emplace_back("q:" + inst.id, std::to_string(inst.B.degree()));
    out.measured.emplace_back("p:" + inst.id, std::to_string(x0_deg(inst.Phi)));
    out.measured.emplace_back("deg_omega:" + inst.id, std::to_string(deg_omega));
    return out;
}

} // namespace panev
