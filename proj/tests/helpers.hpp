#pragma once

#include <panev/panev.hpp>

#include <string>
#include <vector>

namespace pt {

using namespace panev;

inline Rational rq(const std::string& s) { return rat_parse(s); }

inline ValuedPoly mkpoly(unsigned long p, const std::string& expr) {
    return elaborate_poly(parse(expr), Prime(p));
}

inline RatFunc mkrf(unsigned long p, const std::string& expr) {
    return elaborate_ratfunc(parse(expr), Prime(p));
}

inline DiffPoly mkdp(unsigned long p, const std::string& expr, std::size_t nvars = 0) {
    return elaborate_diffpoly(parse(expr), Prime(p), nvars);
}

inline std::vector<LogRadius> ladder_pts(const std::string& spec) {
    return Ladder::parse(spec).points();
}

} // namespace pt
