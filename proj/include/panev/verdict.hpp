#pragma once

#include <string>
#include <utility>
#include <vector>

#include "panev/scalar.hpp"

namespace panev {

/// One audited inequality lhs <= rhs at one radius.  holds iff slack >= 0
/// where slack = rhs - lhs; equalities are emitted as a le/ge pair so the
/// invariant is uniform across every check.
struct Verdict {
    std::string instance;
    std::string check;
    LogRadius s;
    LogValue lhs;
    LogValue rhs;
    bool holds = false;

    static Verdict le(std::string instance, std::string check, LogRadius s, LogValue lhs,
                      LogValue rhs) {
        Verdict v;
        v.instance = std::move(instance);
        v.check = std::move(check);
        v.s = std::move(s);
        v.holds = lhs <= rhs;
        v.lhs = std::move(lhs);
        v.rhs = std::move(rhs);
        return v;
    }

    std::string slack_str() const {
        if (lhs.is_bottom()) return rhs.is_bottom() ? "0/1" : "inf";
        if (rhs.is_bottom()) return "-inf";
        return rat_str(rhs.finite() - lhs.finite());
    }
};

struct CheckSummary {
    long checked = 0;
    long held = 0;
    long window_skipped = 0;
    std::vector<std::pair<std::string, std::string>> measured; // constant name -> exact value

    void absorb(const std::vector<Verdict>& vs) {
        for (const auto& v : vs) {
            ++checked;
            if (v.holds) ++held;
        }
    }

    bool all_held() const { return checked == held; }
};

} // namespace panev
