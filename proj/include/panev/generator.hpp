#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "panev/instances.hpp"
#include "panev/rng.hpp"

namespace panev {

/// Seeded instance generation: identical configs produce identical instances,
/// independent of how many trials run concurrently.
struct GeneratorConfig {
    std::uint64_t seed = 1;
    long trials = 1;
    unsigned long prime = 5;

    std::size_t n = 1; // operator count (variables X_1..X_n)
    OperatorSpec::Kind op_kind = OperatorSpec::Kind::shift;

    long val_lo = -3; // coefficient valuation range, log_p units
    long val_hi = 3;

    long f_num_deg = 3;
    long f_den_deg = 3;
    bool entire_f = false;

    long b_deg = 2;      // max degree q of B
    bool constant_b = true;
    long coeff_deg = 2;  // degree bound for meromorphic coefficients
    bool phi_x0_only = false;

    long omega_terms = 2;
    long omega_exp_max = 2;

    static constexpr int retry_budget = 32;
};

namespace gen {

/// +-u1/u2 with both parts coprime to p: a unit, lambda = 0.
inline Rational rand_unit(Rng& rng, const Prime& p) {
    auto coprime_digit = [&rng, &p]() {
        for (;;) {
            long u = rng.uniform(1, 9);
            if (mpz_class(u) % p.value() != 0 || p.value() > 9) return u;
        }
    };
    Rational q(coprime_digit(), coprime_digit());
    q.canonicalize();
    if (rng.chance(1, 2)) q = -q;
    return q;
}

/// Scalar with lambda drawn uniformly from [lo, hi].
inline Rational rand_scalar(Rng& rng, const Prime& p, long lo, long hi) {
    long lambda = rng.uniform(lo, hi);
    Rational u = rand_unit(rng, p);
    mpz_class pk;
    mpz_pow_ui(pk.get_mpz_t(), p.value().get_mpz_t(),
               static_cast<unsigned long>(lambda < 0 ? -lambda : lambda));
    // lambda = -v_p, so positive lambda puts the prime power in the denominator
    Rational factor = lambda >= 0 ? Rational(1, pk) : Rational(pk);
    factor.canonicalize();
    return u * factor;
}

inline ValuedPoly rand_poly(Rng& rng, const Prime& p, long deg_max, long lo, long hi,
                            bool nonconstant = false) {
    long d = nonconstant ? rng.uniform(1, std::max(1L, deg_max)) : rng.uniform(0, deg_max);
    std::vector<Rational> coeffs(static_cast<std::size_t>(d) + 1, Rational(0));
    for (long k = 0; k < d; ++k)
        if (!rng.chance(1, 4)) coeffs[static_cast<std::size_t>(k)] = rand_scalar(rng, p, lo, hi);
    coeffs[static_cast<std::size_t>(d)] = rand_scalar(rng, p, lo, hi);
    return ValuedPoly(p, std::move(coeffs));
}

inline RatFunc rand_ratfunc(Rng& rng, const Prime& p, long num_deg, long den_deg, long lo, long hi,
                            bool nonconstant = false) {
    for (int tries = 0; tries < GeneratorConfig::retry_budget; ++tries) {
        ValuedPoly num = rand_poly(rng, p, num_deg, lo, hi, nonconstant && rng.chance(1, 2));
        ValuedPoly den = rand_poly(rng, p, den_deg, lo, hi);
        if (num.is_zero() || den.is_zero()) continue; // resample identical vanishing
        RatFunc f(num, den);
        if (nonconstant && f.is_constant()) continue;
        return f;
    }
    raise(errc::generation_failure, "could not draw a usable rational function");
}

inline AffineMap rand_unit_map(Rng& rng, const Prime& p, long lo, long hi) {
    Rational a = rand_unit(rng, p);
    Rational b = rng.chance(1, 4) ? Rational(0) : rand_scalar(rng, p, lo, hi);
    return AffineMap(a, b);
}

inline std::vector<OperatorSpec> rand_ops(Rng& rng, const Prime& p, const GeneratorConfig& cfg) {
    std::vector<OperatorSpec> ops;
    if (cfg.op_kind == OperatorSpec::Kind::derivative) {
        for (std::size_t k = 1; k <= cfg.n; ++k)
            ops.push_back(OperatorSpec::derivative(static_cast<unsigned>(k)));
        return ops;
    }
    std::vector<std::pair<AffineMap, unsigned>> used;
    for (std::size_t k = 0; k < cfg.n; ++k) {
        for (int tries = 0;; ++tries) {
            if (tries >= GeneratorConfig::retry_budget)
                raise(errc::generation_failure, "could not draw distinct operator maps");
            AffineMap L = rand_unit_map(rng, p, cfg.val_lo, cfg.val_hi);
            if (L.is_identity()) continue; // L_i distinct from L_0 = id / L_i != z
            unsigned order =
                cfg.op_kind == OperatorSpec::Kind::delta ? static_cast<unsigned>(rng.uniform(1, 2)) : 1;
            bool dup = false;
            for (const auto& [M, o] : used) dup = dup || (M == L && o == order);
            if (dup) continue;
            used.emplace_back(L, order);
            ops.push_back(cfg.op_kind == OperatorSpec::Kind::delta ? OperatorSpec::delta(p, L, order)
                                                                   : OperatorSpec::shift(p, L));
            break;
        }
    }
    return ops;
}

inline ExpVec rand_exponent(Rng& rng, std::size_t nvars, long per_var_max, long total_max,
                            bool require_positive) {
    for (;;) {
        ExpVec e(nvars, 0);
        long total = 0;
        for (std::size_t k = 0; k < nvars; ++k) {
            e[k] = rng.uniform(0, per_var_max);
            total += e[k];
        }
        if (total > total_max) continue;
        if (require_positive && total == 0) continue;
        return e;
    }
}

} // namespace gen

/// Realize B(f) Omega(f,f_1,...) = Phi(f,f_1,...) by construction: draw
/// everything except Phi's constant term, then force that term to make the
/// residual vanish.  Every returned instance satisfies residual() = 0 and
/// deg B >= deg Phi.
inline ClunieInstance generate_clunie_instance(const GeneratorConfig& cfg, long trial) {
    Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(trial));
    Prime p(cfg.prime);

    for (int attempt = 0; attempt < GeneratorConfig::retry_budget; ++attempt) {
        std::vector<OperatorSpec> ops = gen::rand_ops(rng, p, cfg);
        RatFunc f = cfg.entire_f
                        ? RatFunc::from_poly(gen::rand_poly(rng, p, cfg.f_num_deg, cfg.val_lo,
                                                            cfg.val_hi, true))
                        : gen::rand_ratfunc(rng, p, cfg.f_num_deg, cfg.f_den_deg, cfg.val_lo,
                                            cfg.val_hi, true);

        long q = rng.uniform(1, cfg.b_deg);
        std::vector<RatFunc> bcoeffs(static_cast<std::size_t>(q) + 1, RatFunc::zero(p));
        for (long k = 0; k < q; ++k)
            if (!rng.chance(1, 3))
                bcoeffs[static_cast<std::size_t>(k)] =
                    cfg.constant_b
                        ? RatFunc::constant(p, gen::rand_scalar(rng, p, cfg.val_lo, cfg.val_hi))
                        : gen::rand_ratfunc(rng, p, cfg.coeff_deg, cfg.coeff_deg, cfg.val_lo,
                                            cfg.val_hi);
        bcoeffs[static_cast<std::size_t>(q)] =
            cfg.constant_b ? RatFunc::constant(p, gen::rand_scalar(rng, p, cfg.val_lo, cfg.val_hi))
                           : gen::rand_ratfunc(rng, p, cfg.coeff_deg, cfg.coeff_deg, cfg.val_lo,
                                               cfg.val_hi);
        if (!cfg.constant_b) {
            // guarantee a zero of some b_j at s = 0 so the measured-regime
            // denominator sum N(r, 1/b_j) is positive on ladders with s >= 1
            ValuedPoly zminus1(p, {Rational(-1), Rational(1)});
            bcoeffs[0] = bcoeffs[0].is_zero()
                             ? RatFunc::from_poly(zminus1)
                             : bcoeffs[0] * RatFunc::from_poly(zminus1);
        }
        UniPoly B(p, std::move(bcoeffs));

        DiffPoly Omega(p, cfg.n + 1);
        long nterms = rng.uniform(1, cfg.omega_terms);
        for (long t = 0; t < nterms; ++t)
            Omega.add_term(
                gen::rand_exponent(rng, cfg.n + 1, cfg.omega_exp_max, cfg.omega_exp_max + 1, false),
                gen::rand_ratfunc(rng, p, cfg.coeff_deg, cfg.coeff_deg, cfg.val_lo, cfg.val_hi));
        if (Omega.is_zero()) continue;

        DiffPoly Phi(p, cfg.n + 1);
        long extra = rng.uniform(0, 2);
        for (long t = 0; t < extra; ++t) {
            ExpVec e;
            if (cfg.phi_x0_only) {
                e.assign(cfg.n + 1, 0);
                e[0] = rng.uniform(1, q);
            } else {
                e = gen::rand_exponent(rng, cfg.n + 1, q, q, true);
            }
            Phi.add_term(e, gen::rand_ratfunc(rng, p, cfg.coeff_deg, cfg.coeff_deg, cfg.val_lo,
                                              cfg.val_hi));
        }

        RatFunc forced = B.eval(f) * eval_diffpoly(Omega, f, ops) - eval_diffpoly(Phi, f, ops);
        Phi.add_term(ExpVec(cfg.n + 1, 0), forced);
        if (Phi.is_zero()) continue;

        ClunieInstance inst{"clunie-" + std::to_string(cfg.seed) + "-" + std::to_string(trial),
                            p,
                            std::move(f),
                            std::move(ops),
                            std::move(B),
                            std::move(Omega),
                            std::move(Phi)};
        if (!inst.residual().is_zero())
            raise(errc::generation_failure, "constructed residual is nonzero (internal bug)");
        return inst;
    }
    raise(errc::generation_failure, "clunie generation exhausted its retry budget");
}

/// Draw Q and f, then cancel: P = Q - Q(f, f_1, ...) has f as a solution.
/// The target a is resampled until it is not a solution and differs from f.
inline MokhonkoInstance generate_mokhonko_instance(const GeneratorConfig& cfg, long trial) {
    Rng rng = Rng::for_trial(cfg.seed, static_cast<std::uint64_t>(trial) + 0x517cc1b727220a95ULL);
    Prime p(cfg.prime);

    for (int attempt = 0; attempt < GeneratorConfig::retry_budget; ++attempt) {
        std::vector<OperatorSpec> ops = gen::rand_ops(rng, p, cfg);
        RatFunc f =
            gen::rand_ratfunc(rng, p, cfg.f_num_deg, cfg.f_den_deg, cfg.val_lo, cfg.val_hi, true);

        DiffPoly P(p, cfg.n + 1);
        long nterms = rng.uniform(1, 3);
        for (long t = 0; t < nterms; ++t)
            P.add_term(gen::rand_exponent(rng, cfg.n + 1, 2, 3, true),
                       gen::rand_ratfunc(rng, p, cfg.coeff_deg, cfg.coeff_deg, cfg.val_lo,
                                         cfg.val_hi));
        if (P.is_zero()) continue;
        P.add_term(ExpVec(cfg.n + 1, 0), -eval_diffpoly(P, f, ops));

        bool found = false;
        RatFunc a = RatFunc::zero(p);
        for (int tries = 0; tries < GeneratorConfig::retry_budget; ++tries) {
            RatFunc cand =
                rng.chance(1, 3)
                    ? gen::rand_ratfunc(rng, p, 1, 1, cfg.val_lo, cfg.val_hi)
                    : (rng.chance(1, 4)
                           ? RatFunc::zero(p)
                           : RatFunc::constant(p, gen::rand_scalar(rng, p, cfg.val_lo, cfg.val_hi)));
            if ((f - cand).is_zero()) continue;
            if (eval_diffpoly(P, cand, ops).is_zero()) continue;
            a = cand;
            found = true;
            break;
        }
        if (!found) continue;

        return MokhonkoInstance{"mokhonko-" + std::to_string(cfg.seed) + "-" + std::to_string(trial),
                                p, std::move(f), std::move(ops), std::move(P), std::move(a)};
    }
    raise(errc::generation_failure, "mokhonko generation exhausted its retry budget");
}

} // namespace panev
