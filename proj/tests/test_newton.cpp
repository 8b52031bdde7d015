#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>

#include "helpers.hpp"

using namespace pt;

TEST_CASE("polygon vertices", "[newton]") {
    NewtonPolygon np = newton_polygon(mkpoly(5, "z^3 + 5"));
    REQUIRE(np.vertices.size() == 2);
    CHECK(np.vertices[0].degree == 0);
    CHECK(np.vertices[0].valuation == 1);
    CHECK(np.vertices[1].degree == 3);
    CHECK(np.vertices[1].valuation == 0);

    NewtonPolygon mono = newton_polygon(mkpoly(5, "z^4"));
    REQUIRE(mono.vertices.size() == 1);
    CHECK(mono.vertices[0].degree == 4);
    CHECK(mono.vertices[0].valuation == 0);

    NewtonPolygon np2 = newton_polygon(mkpoly(5, "z^2 - 5*z"));
    REQUIRE(np2.vertices.size() == 2);
    CHECK(np2.vertices[0].degree == 1);
    CHECK(np2.vertices[0].valuation == 1);
    CHECK(np2.vertices[1].degree == 2);
    CHECK(np2.vertices[1].valuation == 0);

    CHECK_THROWS_AS(newton_polygon(ValuedPoly::zero(Prime(5ul))), error);
}

TEST_CASE("zero log-radii from hull slopes", "[newton]") {
    ZeroRadii zr = zero_log_radii(mkpoly(5, "z^3 + 5"));
    CHECK(zr.origin_multiplicity == 0);
    REQUIRE(zr.radii.size() == 1);
    CHECK(zr.radii[0].first == rq("-1/3"));
    CHECK(zr.radii[0].second == 3);

    ZeroRadii zr2 = zero_log_radii(mkpoly(5, "z^2 - 5*z"));
    CHECK(zr2.origin_multiplicity == 1);
    REQUIRE(zr2.radii.size() == 1);
    CHECK(zr2.radii[0].first == rq("-1"));
    CHECK(zr2.radii[0].second == 1);

    ZeroRadii zr3 = zero_log_radii(mkpoly(7, "z - 1"));
    CHECK(zr3.origin_multiplicity == 0);
    REQUIRE(zr3.radii.size() == 1);
    CHECK(zr3.radii[0].first == rq("0"));
    CHECK(zr3.radii[0].second == 1);
}

TEST_CASE("factored oracle pins the slope convention", "[newton][property]") {
    Rng rng(11u);
    for (unsigned long pv : {2ul, 5ul, 7ul}) {
        Prime p(pv);
        for (int t = 0; t < 100; ++t) {
            // c * z^m0 * prod (z - w_k) with known root valuations
            long m0 = rng.uniform(0, 2);
            long nroots = rng.uniform(0, 4);
            ValuedPoly f = ValuedPoly::monomial(p, gen::rand_scalar(rng, p, -3, 3),
                                                static_cast<std::size_t>(m0));
            std::map<Rational, long> expected;
            for (long k = 0; k < nroots; ++k) {
                Rational w = gen::rand_scalar(rng, p, -3, 3);
                expected[valuation(p, w).finite()] += 1;
                f = f * ValuedPoly(p, {-w, Rational(1)});
            }
            ZeroRadii zr = zero_log_radii(f);
            CHECK(zr.origin_multiplicity == m0);
            std::map<Rational, long> got(zr.radii.begin(), zr.radii.end());
            CHECK(got == expected);
            CHECK(zr.total() == f.degree());
        }
    }
}

TEST_CASE("hull vertices reproduce the naive max term", "[newton][property]") {
    Rng rng(12u);
    for (unsigned long pv : {2ul, 7ul}) {
        Prime p(pv);
        for (int t = 0; t < 150; ++t) {
            ValuedPoly f = gen::rand_poly(rng, p, 6, -3, 3);
            if (f.is_zero()) continue;
            NewtonPolygon np = newton_polygon(f);
            Rational s(rng.uniform(-9, 9), rng.uniform(1, 5));
            CHECK(mu_hat_vertices(p, np, s) == mu_hat(f, s));
        }
    }
}
