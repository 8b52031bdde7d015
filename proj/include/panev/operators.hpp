#pragma once

#include <optional>
#include <string>
#include <utility>

#include "panev/affine.hpp"
#include "panev/ratfunc.hpp"

namespace panev {

/// One slot of the operator family binding X_1..X_n: a shift f o L, an
/// iterated difference (f o L - f)^{[j]}, or a derivative f^{(k)}.
class OperatorSpec {
public:
    enum class Kind { shift, delta, derivative };

    static OperatorSpec shift(const Prime& p, const AffineMap& L) {
        if (!unit_check(p, L.a))
            raise(errc::bad_input, "shift needs |a| = 1, got a = " + rat_str(L.a));
        return OperatorSpec(Kind::shift, L, 1);
    }

    static OperatorSpec delta(const Prime& p, const AffineMap& L, unsigned order) {
        if (!unit_check(p, L.a))
            raise(errc::bad_input, "delta needs |a| = 1, got a = " + rat_str(L.a));
        if (L.is_identity()) raise(errc::identity_map_for_delta, "delta needs L != id");
        if (order < 1) raise(errc::bad_input, "delta order must be >= 1");
        return OperatorSpec(Kind::delta, L, order);
    }

    static OperatorSpec derivative(unsigned order) {
        if (order < 1) raise(errc::bad_input, "derivative order must be >= 1");
        return OperatorSpec(Kind::derivative, std::nullopt, order);
    }

    Kind kind() const { return kind_; }
    const AffineMap& map() const { return *map_; }
    unsigned order() const { return order_; }

    std::string kind_name() const {
        switch (kind_) {
        case Kind::shift: return "shift";
        case Kind::delta: return "delta";
        case Kind::derivative: return "derivative";
        }
        return "?";
    }

    /// Radius window on which the difference analogues of the logarithmic
    /// derivative lemma apply to this operator: s > lambda(b) for shifts and
    /// deltas (vacuous when b = 0), s >= 0 for derivatives.
    bool in_window(const Prime& p, const LogRadius& s) const {
        if (kind_ == Kind::derivative) return s >= 0;
        LogValue lb = valuation(p, map_->b);
        return lb.is_bottom() || LogValue(s) > lb;
    }

private:
    OperatorSpec(Kind k, std::optional<AffineMap> m, unsigned order)
        : kind_(k), map_(std::move(m)), order_(order) {}

    Kind kind_;
    std::optional<AffineMap> map_;
    unsigned order_;
};

inline RatFunc delta_once(const RatFunc& f, const AffineMap& L) {
    return compose_affine_rat(f, L) - f;
}

inline RatFunc apply_operator(const RatFunc& f, const OperatorSpec& op) {
    switch (op.kind()) {
    case OperatorSpec::Kind::shift:
        return compose_affine_rat(f, op.map());
    case OperatorSpec::Kind::delta: {
        RatFunc g = f;
        for (unsigned j = 0; j < op.order(); ++j) g = delta_once(g, op.map());
        return g;
    }
    case OperatorSpec::Kind::derivative:
        return derivative(f, op.order());
    }
    raise(errc::bad_input, "unreachable operator kind");
}

} // namespace panev
