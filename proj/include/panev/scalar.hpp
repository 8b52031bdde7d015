#pragma once

#include <compare>
#include <string>
#include <utility>

#include "panev/error.hpp"
#include "panev/rational.hpp"

namespace panev {

/// The residue characteristic fixing the absolute value |x| = p^{-v_p(x)}.
/// Primality is checked once at construction; a Prime is immutable afterwards.
class Prime {
public:
    explicit Prime(const mpz_class& p) : p_(p) {
        if (p < 2 || mpz_probab_prime_p(p.get_mpz_t(), 40) == 0)
            raise(errc::bad_input, p.get_str() + " is not prime");
    }
    explicit Prime(unsigned long p) : Prime(mpz_class(p)) {}

    const mpz_class& value() const { return p_; }
    std::string str() const { return p_.get_str(); }

    friend bool operator==(const Prime& a, const Prime& b) { return a.p_ == b.p_; }
    friend bool operator!=(const Prime& a, const Prime& b) { return a.p_ != b.p_; }

private:
    mpz_class p_;
};

inline void require_same_prime(const Prime& a, const Prime& b) {
    if (a != b) raise(errc::prime_mismatch, a.str() + " vs " + b.str());
}

/// log_p of an absolute value: either a finite exact rational lambda, meaning
/// |x| = p^lambda, or bottom for |0| = 0.  Bottom absorbs under + and is the
/// identity of max, so the ultrametric bookkeeping never special-cases zero.
class LogValue {
public:
    LogValue() : bottom_(true) {}
    LogValue(Rational v) : bottom_(false), v_(std::move(v)) {}
    LogValue(long v) : bottom_(false), v_(v) {}

    static LogValue bottom() { return LogValue(); }

    bool is_bottom() const { return bottom_; }

    const Rational& finite() const {
        if (bottom_) raise(errc::bad_input, "LogValue is bottom");
        return v_;
    }

    friend LogValue operator+(const LogValue& a, const LogValue& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        return LogValue(a.v_ + b.v_);
    }
    friend LogValue operator-(const LogValue& a, const LogValue& b) {
        if (a.bottom_ || b.bottom_) return bottom();
        return LogValue(a.v_ - b.v_);
    }
    friend LogValue operator*(long k, const LogValue& a) {
        if (a.bottom_) return bottom();
        return LogValue(k * a.v_);
    }

    // Bottom compares below every finite value.
    friend bool operator==(const LogValue& a, const LogValue& b) {
        if (a.bottom_ || b.bottom_) return a.bottom_ && b.bottom_;
        return a.v_ == b.v_;
    }
    friend bool operator<(const LogValue& a, const LogValue& b) {
        if (a.bottom_) return !b.bottom_;
        if (b.bottom_) return false;
        return a.v_ < b.v_;
    }
    friend bool operator<=(const LogValue& a, const LogValue& b) { return a < b || a == b; }
    friend bool operator>(const LogValue& a, const LogValue& b) { return b < a; }
    friend bool operator>=(const LogValue& a, const LogValue& b) { return b <= a; }
    friend bool operator!=(const LogValue& a, const LogValue& b) { return !(a == b); }

    std::string str() const { return bottom_ ? "-inf" : rat_str(v_); }

private:
    bool bottom_;
    Rational v_;
};

inline LogValue log_max(const LogValue& a, const LogValue& b) { return a < b ? b : a; }

/// lambda(x) = -v_p(x), the log_p of |x|_p; bottom iff x = 0.
inline LogValue valuation(const Prime& p, const Rational& x) {
    if (x == 0) return LogValue::bottom();
    mpz_class scratch;
    long vnum = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.get_num_mpz_t(), p.value().get_mpz_t()));
    long vden = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), x.get_den_mpz_t(), p.value().get_mpz_t()));
    return LogValue(Rational(vden - vnum));
}

/// Certified upper bound for lambda(a+b); exact whenever the operands differ.
inline LogValue log_add_bound(const LogValue& x, const LogValue& y) { return log_max(x, y); }

/// |x| = 1, the weight condition on the linear parts of shift maps.
inline bool unit_check(const Prime& p, const Rational& x) {
    return valuation(p, x) == LogValue(Rational(0));
}

} // namespace panev
