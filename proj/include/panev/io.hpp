#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "panev/instances.hpp"
#include "panev/nevanlinna.hpp"
#include "panev/series.hpp"
#include "panev/verdict.hpp"

namespace panev {

using Json = nlohmann::ordered_json;

// ---- rationals ------------------------------------------------------------

inline Rational rat_from_json(const Json& j) {
    if (j.is_string()) return rat_parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    raise(errc::bad_input, "expected rational string, got " + j.dump());
}

// ---- polynomials and series -------------------------------------------------

inline Json poly_to_json(const ValuedPoly& f) {
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(rat_str(c));
    return Json{{"coeffs", coeffs}};
}

inline ValuedPoly poly_from_json(const Prime& p, const Json& j) {
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        raise(errc::bad_input, "polynomial needs a \"coeffs\" array");
    std::vector<Rational> coeffs;
    for (const auto& c : j["coeffs"]) coeffs.push_back(rat_from_json(c));
    return ValuedPoly(p, std::move(coeffs));
}

inline Json series_to_json(const TruncatedSeries& f) {
    Json j = poly_to_json(f.head());
    j["tail"] = Json{{"alpha", rat_str(f.alpha())}, {"beta", rat_str(f.beta())}};
    return j;
}

inline TruncatedSeries series_from_json(const Prime& p, const Json& j) {
    if (!j.contains("tail")) raise(errc::bad_input, "series needs a \"tail\" certificate");
    return TruncatedSeries(poly_from_json(p, j), rat_from_json(j["tail"]["alpha"]),
                           rat_from_json(j["tail"]["beta"]));
}

inline Json ratfunc_to_json(const RatFunc& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline RatFunc ratfunc_from_json(const Prime& p, const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        raise(errc::bad_input, "rational function needs \"num\" and \"den\"");
    return RatFunc(poly_from_json(p, j["num"]), poly_from_json(p, j["den"]));
}

// ---- operators --------------------------------------------------------------

inline Json op_to_json(const OperatorSpec& op) {
    Json j;
    j["kind"] = op.kind_name();
    if (op.kind() != OperatorSpec::Kind::derivative) {
        j["a"] = rat_str(op.map().a);
        j["b"] = rat_str(op.map().b);
    }
    if (op.kind() != OperatorSpec::Kind::shift) j["order"] = op.order();
    return j;
}

inline OperatorSpec op_from_json(const Prime& p, const Json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "derivative") return OperatorSpec::derivative(j.at("order").get<unsigned>());
    AffineMap L(rat_from_json(j.at("a")), rat_from_json(j.at("b")));
    if (kind == "shift") return OperatorSpec::shift(p, L);
    if (kind == "delta") return OperatorSpec::delta(p, L, j.value("order", 1u));
    raise(errc::bad_input, "unknown operator kind '" + kind + "'");
}

// ---- difference polynomials -------------------------------------------------

inline Json diffpoly_to_json(const DiffPoly& P) {
    Json arr = Json::array();
    for (const auto& [e, c] : P.terms()) {
        Json t;
        t["coeff"] = ratfunc_to_json(c);
        t["exp"] = e;
        arr.push_back(t);
    }
    return arr;
}

inline DiffPoly diffpoly_from_json(const Prime& p, std::size_t nvars, const Json& j) {
    if (!j.is_array()) raise(errc::bad_input, "difference polynomial must be a monomial array");
    DiffPoly P(p, nvars);
    for (const auto& t : j) {
        ExpVec e = t.at("exp").get<ExpVec>();
        for (long x : e)
            if (x < 0) raise(errc::bad_input, "negative exponent in difference polynomial");
        P.add_term(e, ratfunc_from_json(p, t.at("coeff")));
    }
    return P;
}

inline Json unipoly_to_json(const UniPoly& B) {
    Json arr = Json::array();
    for (const auto& c : B.coeffs()) arr.push_back(ratfunc_to_json(c));
    return arr;
}

inline UniPoly unipoly_from_json(const Prime& p, const Json& j) {
    if (!j.is_array()) raise(errc::bad_input, "univariate polynomial must be a coefficient array");
    std::vector<RatFunc> coeffs;
    for (const auto& c : j) coeffs.push_back(ratfunc_from_json(p, c));
    return UniPoly(p, std::move(coeffs));
}

// ---- instances ----------------------------------------------------------------

inline Json clunie_to_json(const ClunieInstance& inst) {
    Json j;
    j["id"] = inst.id;
    j["prime"] = inst.prime.str();
    j["f"] = ratfunc_to_json(inst.f);
    Json ops = Json::array();
    for (const auto& op : inst.ops) ops.push_back(op_to_json(op));
    j["ops"] = ops;
    j["B"] = unipoly_to_json(inst.B);
    j["Omega"] = diffpoly_to_json(inst.Omega);
    j["Phi"] = diffpoly_to_json(inst.Phi);
    return j;
}

inline ClunieInstance clunie_from_json(const Json& j) {
    Prime p(mpz_class(j.at("prime").is_string() ? j.at("prime").get<std::string>()
                                                : std::to_string(j.at("prime").get<long>())));
    std::vector<OperatorSpec> ops;
    for (const auto& o : j.at("ops")) ops.push_back(op_from_json(p, o));
    std::size_t nvars = ops.size() + 1;
    return ClunieInstance{j.value("id", std::string("clunie")),
                          p,
                          ratfunc_from_json(p, j.at("f")),
                          ops,
                          unipoly_from_json(p, j.at("B")),
                          diffpoly_from_json(p, nvars, j.at("Omega")),
                          diffpoly_from_json(p, nvars, j.at("Phi"))};
}

inline Json mokhonko_to_json(const MokhonkoInstance& inst) {
    Json j;
    j["id"] = inst.id;
    j["prime"] = inst.prime.str();
    j["f"] = ratfunc_to_json(inst.f);
    Json ops = Json::array();
    for (const auto& op : inst.ops) ops.push_back(op_to_json(op));
    j["ops"] = ops;
    j["P"] = diffpoly_to_json(inst.P);
    j["a"] = ratfunc_to_json(inst.a);
    return j;
}

inline MokhonkoInstance mokhonko_from_json(const Json& j) {
    Prime p(mpz_class(j.at("prime").is_string() ? j.at("prime").get<std::string>()
                                                : std::to_string(j.at("prime").get<long>())));
    std::vector<OperatorSpec> ops;
    for (const auto& o : j.at("ops")) ops.push_back(op_from_json(p, o));
    std::size_t nvars = ops.size() + 1;
    return MokhonkoInstance{j.value("id", std::string("mokhonko")),
                            p,
                            ratfunc_from_json(p, j.at("f")),
                            ops,
                            diffpoly_from_json(p, nvars, j.at("P")),
                            ratfunc_from_json(p, j.at("a"))};
}

// ---- verdicts and tables -------------------------------------------------------

inline Json verdict_to_json(const Verdict& v) {
    Json j;
    j["instance"] = v.instance;
    j["check"] = v.check;
    j["s"] = rat_str(v.s);
    j["lhs"] = v.lhs.str();
    j["rhs"] = v.rhs.str();
    j["holds"] = v.holds;
    j["slack"] = v.slack_str();
    return j;
}

inline Json row_to_json(const CharacteristicRow& r) {
    return Json{{"s", rat_str(r.s)}, {"m", rat_str(r.m)}, {"N", rat_str(r.N)}, {"T", rat_str(r.T)}};
}

inline Json ratio_row_to_json(const RatioRow& r) {
    return Json{{"s", rat_str(r.s)},
                {"numerator", rat_str(r.numerator)},
                {"denominator", rat_str(r.denominator)},
                {"ratio", rat_str(r.ratio)}};
}

} // namespace panev
