#pragma once

#include <gmpxx.h>

#include <string>

#include "panev/error.hpp"

namespace panev {

using Rational = mpq_class;

/// Canonical wire form: "num/den" in lowest terms, denominator always present
/// and positive, "0/1" for zero.
inline std::string rat_str(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Accepts "num/den" or a bare (optionally signed) integer.
inline Rational rat_parse(const std::string& text) {
    if (text.empty()) raise(errc::bad_input, "empty rational literal");
    std::size_t i = text[0] == '-' || text[0] == '+' ? 1 : 0;
    if (i == text.size()) raise(errc::bad_input, "sign without digits in rational literal");
    for (std::size_t k = i; k < text.size(); ++k) {
        char c = text[k];
        if (c == '/' || (c >= '0' && c <= '9')) continue;
        raise(errc::bad_input, "bad character in rational literal '" + text + "'");
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0) raise(errc::bad_input, "unparsable rational '" + text + "'");
    if (q.get_den() == 0) raise(errc::bad_input, "zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

inline Rational rat_pow(const Rational& q, unsigned long e) {
    mpq_class r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

} // namespace panev
