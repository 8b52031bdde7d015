#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "panev/poly.hpp"

namespace panev {

/// Lower convex hull of {(n, v_p(a_n)) : a_n != 0}.  Vertices have strictly
/// increasing degrees and strictly increasing slopes between consecutive
/// segments; collinear interior points are merged away.
struct NewtonPolygon {
    struct Vertex {
        long degree;
        Rational valuation;
    };
    std::vector<Vertex> vertices;
};

inline NewtonPolygon newton_polygon(const ValuedPoly& f) {
    if (f.is_zero()) raise(errc::zero_polynomial, "newton polygon of 0");

    std::vector<NewtonPolygon::Vertex> pts;
    mpz_class scratch;
    for (std::size_t n = 0; n < f.coeffs().size(); ++n) {
        const Rational& c = f.coeffs()[n];
        if (c == 0) continue;
        long v = static_cast<long>(
                     mpz_remove(scratch.get_mpz_t(), c.get_num_mpz_t(), f.prime().value().get_mpz_t())) -
                 static_cast<long>(
                     mpz_remove(scratch.get_mpz_t(), c.get_den_mpz_t(), f.prime().value().get_mpz_t()));
        pts.push_back({static_cast<long>(n), Rational(v)});
    }

    // Monotone chain, keeping only strictly increasing slopes.
    std::vector<NewtonPolygon::Vertex> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // pop b unless slope(a,b) < slope(b,pt)
            Rational lhs = (b.valuation - a.valuation) * (pt.degree - b.degree);
            Rational rhs = (pt.valuation - b.valuation) * (b.degree - a.degree);
            if (lhs < rhs) break;
            hull.pop_back();
        }
        hull.push_back(pt);
    }
    return NewtonPolygon{std::move(hull)};
}

/// Evaluate the max term using hull vertices only; must agree with mu_hat
/// computed over every coefficient (the polygon is the Legendre transform of
/// the coefficient valuations).
inline LogValue mu_hat_vertices(const Prime& p, const NewtonPolygon& np, const LogRadius& s) {
    (void)p;
    LogValue best = LogValue::bottom();
    for (const auto& v : np.vertices)
        best = log_max(best, LogValue(-v.valuation + v.degree * s));
    return best;
}

/// Zero log-radii with multiplicities, plus the multiplicity at the origin.
/// Each hull segment of slope sigma and horizontal length ell carries ell
/// zeros at s = sigma; radii come out in strictly increasing order.
struct ZeroRadii {
    long origin_multiplicity = 0;
    std::vector<std::pair<Rational, long>> radii; // (log-radius, multiplicity)

    long total() const {
        long t = origin_multiplicity;
        for (const auto& [s, m] : radii) t += m;
        return t;
    }
};

inline ZeroRadii zero_log_radii(const ValuedPoly& f) {
    if (f.is_zero()) raise(errc::zero_polynomial, "zero radii of 0");
    NewtonPolygon np = newton_polygon(f);
    ZeroRadii out;
    out.origin_multiplicity = np.vertices.front().degree;
    for (std::size_t k = 1; k < np.vertices.size(); ++k) {
        const auto& a = np.vertices[k - 1];
        const auto& b = np.vertices[k];
        Rational slope = (b.valuation - a.valuation) / Rational(b.degree - a.degree);
        out.radii.emplace_back(slope, b.degree - a.degree);
    }
    return out;
}

} // namespace panev
