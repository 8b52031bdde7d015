#pragma once

#include <string>
#include <utility>
#include <vector>

#include "panev/diffpoly.hpp"
#include "panev/operators.hpp"

namespace panev {

/// B(f) * Omega(f, f_1, ..., f_n) = Phi(f, f_1, ..., f_n)
struct ClunieInstance {
    std::string id;
    Prime prime;
    RatFunc f;
    std::vector<OperatorSpec> ops;
    UniPoly B;
    DiffPoly Omega;
    DiffPoly Phi;

    RatFunc residual() const { return clunie_split_eval(f, B, Omega, Phi, ops); }
};

/// P(f, f_1, ..., f_n) = 0 with a candidate slowly-moving target a.
struct MokhonkoInstance {
    std::string id;
    Prime prime;
    RatFunc f;
    std::vector<OperatorSpec> ops;
    DiffPoly P;
    RatFunc a;
};

} // namespace panev
