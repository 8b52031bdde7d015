#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace pt;

TEST_CASE("mu_hat over coefficient terms", "[poly]") {
    ValuedPoly f = mkpoly(5, "z^3 + 5");
    CHECK(mu_hat(f, rq("0")) == LogValue(rq("0")));
    CHECK(mu_hat(f, rq("1")) == LogValue(rq("3")));
    CHECK(mu_hat(f, rq("-1")) == LogValue(rq("-1")));

    ValuedPoly z = mkpoly(5, "z");
    CHECK(mu_hat(z, rq("7/3")) == LogValue(rq("7/3")));
    CHECK(mu_hat(z, rq("-2")) == LogValue(rq("-2")));

    CHECK(mu_hat(ValuedPoly::zero(Prime(5ul)), rq("1")).is_bottom());
}

TEST_CASE("compose_affine expands exactly", "[poly]") {
    Prime p5(5ul);
    CHECK(compose_affine(mkpoly(5, "z^2"), AffineMap(rq("1"), rq("1"))) ==
          mkpoly(5, "z^2 + 2*z + 1"));
    ValuedPoly f = mkpoly(5, "z^3 - 5*z + 1/2");
    CHECK(compose_affine(f, AffineMap::identity()) == f);
    CHECK(compose_affine(mkpoly(5, "z^3 + 5"), AffineMap(rq("1"), rq("1"))) ==
          mkpoly(5, "z^3 + 3*z^2 + 3*z + 6"));
    // degree preserved for a != 0
    CHECK(compose_affine(f, AffineMap(rq("2"), rq("-7"))).degree() == f.degree());
}

TEST_CASE("formal derivative", "[poly]") {
    CHECK(derivative(mkpoly(5, "z^3"), 1) == mkpoly(5, "3*z^2"));
    CHECK(derivative(mkpoly(5, "z^3"), 4).is_zero());
    CHECK(derivative(mkpoly(5, "5*z^2 + z"), 1) == mkpoly(5, "10*z + 1"));
}

TEST_CASE("gcd and division", "[poly]") {
    ValuedPoly g = poly_gcd(mkpoly(5, "z^2 - 1"), mkpoly(5, "z - 1"));
    CHECK(g == mkpoly(5, "z - 1"));
    auto [q, r] = divrem(mkpoly(5, "z^3 + 1"), mkpoly(5, "z + 1"));
    CHECK(q == mkpoly(5, "z^2 - z + 1"));
    CHECK(r.is_zero());
}

TEST_CASE("max term is multiplicative (Gauss norm)", "[poly][property]") {
    Rng rng(7u);
    for (unsigned long pv : {2ul, 5ul, 7ul}) {
        Prime p(pv);
        for (int t = 0; t < 100; ++t) {
            ValuedPoly f = gen::rand_poly(rng, p, 4, -3, 3);
            ValuedPoly g = gen::rand_poly(rng, p, 4, -3, 3);
            if (f.is_zero() || g.is_zero()) continue;
            Rational s(rng.uniform(-6, 6), rng.uniform(1, 4));
            CHECK(mu_hat(f * g, s) == mu_hat(f, s) + mu_hat(g, s));
        }
    }
}

TEST_CASE("derivative lowers the max term by at least s", "[poly][property]") {
    Rng rng(8u);
    Prime p(5ul);
    for (int t = 0; t < 100; ++t) {
        ValuedPoly f = gen::rand_poly(rng, p, 5, -3, 3, true);
        ValuedPoly df = derivative(f, 1);
        if (df.is_zero()) continue;
        Rational s(rng.uniform(-6, 6), rng.uniform(1, 3));
        CHECK(mu_hat(df, s) <= mu_hat(f, s) - LogValue(s));
    }
}

TEST_CASE("unit-scale composition preserves the max term above lambda(b)", "[poly][property]") {
    Rng rng(9u);
    for (unsigned long pv : {2ul, 5ul, 7ul}) {
        Prime p(pv);
        for (int t = 0; t < 100; ++t) {
            ValuedPoly f = gen::rand_poly(rng, p, 5, -3, 3, true);
            AffineMap L = gen::rand_unit_map(rng, p, -3, 3);
            LogValue lb = valuation(p, L.b);
            Rational s = lb.is_bottom() ? Rational(rng.uniform(-3, 3)) : lb.finite() + rq("1/3");
            CHECK(mu_hat(compose_affine(f, L), s) == mu_hat(f, s));
        }
    }
}
