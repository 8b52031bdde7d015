#pragma once

#include <utility>

#include "panev/error.hpp"
#include "panev/rational.hpp"

namespace panev {

/// L(z) = a*z + b with a != 0.
struct AffineMap {
    Rational a;
    Rational b;

    AffineMap(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {
        if (a == 0) raise(errc::degenerate_map, "affine map needs a != 0");
    }

    static AffineMap identity() { return AffineMap(Rational(1), Rational(0)); }

    bool is_identity() const { return a == 1 && b == 0; }

    friend bool operator==(const AffineMap& x, const AffineMap& y) {
        return x.a == y.a && x.b == y.b;
    }
};

} // namespace panev
