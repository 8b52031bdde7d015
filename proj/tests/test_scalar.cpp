#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace pt;

TEST_CASE("valuation of rationals", "[scalar]") {
    Prime p5(5ul);
    CHECK(valuation(p5, rq("1/25")) == LogValue(rq("2")));
    CHECK(valuation(p5, rq("10/3")) == LogValue(rq("-1")));
    CHECK(valuation(p5, Rational(0)).is_bottom());
    CHECK(valuation(p5, Rational(1)) == LogValue(rq("0")));
    Prime p2(2ul);
    CHECK(valuation(p2, rq("-8")) == LogValue(rq("-3")));
    CHECK(valuation(p2, rq("3/4")) == LogValue(rq("2")));
}

TEST_CASE("log_add_bound is the ultrametric bound", "[scalar]") {
    Prime p5(5ul);
    LogValue a = valuation(p5, Rational(5));    // -1
    LogValue b = valuation(p5, rq("1/5"));      // 1
    CHECK(log_add_bound(a, b) == LogValue(rq("1")));
    // distinct valuations force equality: lambda(5 + 1/5) = 1 exactly
    CHECK(valuation(p5, Rational(5) + rq("1/5")) == LogValue(rq("1")));
    // bottom is the identity
    CHECK(log_add_bound(LogValue::bottom(), b) == b);
    // cancellation stays below the bound
    LogValue one = valuation(p5, Rational(1));
    LogValue mone = valuation(p5, Rational(-1));
    CHECK(log_add_bound(one, mone) == LogValue(rq("0")));
    CHECK(valuation(p5, Rational(0)) <= LogValue(rq("0")));
}

TEST_CASE("unit check", "[scalar]") {
    Prime p5(5ul);
    CHECK(unit_check(p5, Rational(3)));
    CHECK_FALSE(unit_check(p5, Rational(5)));
    CHECK(unit_check(p5, rq("7/3")));
    CHECK_FALSE(unit_check(p5, Rational(0)));
}

TEST_CASE("prime construction rejects composites", "[scalar]") {
    CHECK_THROWS_AS(Prime(4ul), error);
    CHECK_THROWS_AS(Prime(1ul), error);
    CHECK_NOTHROW(Prime(2ul));
    CHECK_NOTHROW(Prime(7919ul));
}

TEST_CASE("valuation algebra on random scalars", "[scalar][property]") {
    Rng rng(0xABCDEFu);
    for (unsigned long pv : {2ul, 5ul, 7ul}) {
        Prime p(pv);
        for (int t = 0; t < 200; ++t) {
            Rational x = gen::rand_scalar(rng, p, -3, 3);
            Rational y = gen::rand_scalar(rng, p, -3, 3);
            // multiplicativity, exact
            CHECK(valuation(p, x * y) == valuation(p, x) + valuation(p, y));
            // inverse flips sign
            CHECK(valuation(p, Rational(1) / x) == LogValue(-valuation(p, x).finite()));
            // distinct valuations make the triangle bound exact
            if (valuation(p, x) != valuation(p, y))
                CHECK(valuation(p, x + y) == log_add_bound(valuation(p, x), valuation(p, y)));
            else
                CHECK(valuation(p, x + y) <= log_add_bound(valuation(p, x), valuation(p, y)));
        }
    }
}
