#pragma once

#include <optional>
#include <utility>

#include "panev/poly.hpp"

namespace panev {

/// Truncated power series with a certified tail: lambda(a_n) <= alpha + beta*n
/// for every n beyond the head's degree, with beta < 0.  Inside the window
/// s < s_max() the head determines the max term exactly; outside it every
/// query fails loudly instead of approximating.
class TruncatedSeries {
public:
    TruncatedSeries(ValuedPoly head, Rational alpha, Rational beta)
        : head_(std::move(head)), alpha_(std::move(alpha)), beta_(std::move(beta)) {
        if (beta_ >= 0) raise(errc::bad_input, "tail certificate needs beta < 0");
    }

    const ValuedPoly& head() const { return head_; }
    const Rational& alpha() const { return alpha_; }
    const Rational& beta() const { return beta_; }
    const Prime& prime() const { return head_.prime(); }

    /// Largest s at which some head term weakly dominates the tail bound
    /// alpha + (beta+s)*n for all n > D.  Empty when the head is zero (no
    /// term can dominate anything).
    std::optional<Rational> s_max() const {
        if (head_.is_zero()) return std::nullopt;
        long D = head_.degree();
        std::optional<Rational> best;
        for (std::size_t i = 0; i < head_.coeffs().size(); ++i) {
            LogValue lam = valuation(prime(), head_.coeffs()[i]);
            if (lam.is_bottom()) continue;
            // term i dominates for s <= (lambda_i - alpha - beta(D+1)) / (D+1-i)
            Rational cand = (lam.finite() - alpha_ - beta_ * (D + 1)) / Rational(D + 1 - static_cast<long>(i));
            if (!best || cand > *best) best = cand;
        }
        Rational cap = -beta_;
        if (!best || *best > cap) best = cap;
        return best;
    }

    TruncatedSeries derivative(unsigned k = 1) const {
        // Term n of f' is (n+1)a_{n+1}; |integer| <= 1 p-adically, so the
        // shifted bound alpha' = alpha + beta, beta' = beta stays valid.
        ValuedPoly h = head_;
        Rational a = alpha_;
        for (unsigned round = 0; round < k; ++round) {
            h = panev::derivative(h, 1);
            a += beta_;
        }
        return TruncatedSeries(std::move(h), std::move(a), beta_);
    }

private:
    ValuedPoly head_;
    Rational alpha_;
    Rational beta_;
};

inline LogValue mu_hat(const TruncatedSeries& f, const LogRadius& s) {
    auto cap = f.s_max();
    if (!cap || s >= *cap)
        raise(errc::radius_out_of_certificate,
              "s = " + rat_str(s) + " not strictly below certificate window" +
                  (cap ? " bound " + rat_str(*cap) : " (zero head)"));
    return mu_hat(f.head(), s);
}

} // namespace panev
