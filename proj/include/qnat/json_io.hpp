#pragma once

#include "qnat/ode.hpp"
#include "qnat/oracle.hpp"
#include "qnat/qcalculus.hpp"
#include "qnat/series.hpp"
#include "qnat/time_expr.hpp"
#include "qnat/transform.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace qnat {

using json = nlohmann::json;

/// Scalars serialize as "p/q" strings in exact mode and as plain JSON
/// numbers in float mode. Input is lenient: integral JSON numbers are
/// accepted in exact mode.
inline json scalar_to_json(const Scalar& s) {
    if (s.is_exact()) return json(s.str());
    return json(s.value());
}

inline Scalar scalar_from_json(const json& j, Mode mode) {
    if (j.is_string()) return parse_scalar(j.get<std::string>(), mode);
    if (j.is_number_integer()) return Scalar::integer(j.get<long long>(), mode);
    if (j.is_number()) {
        if (mode == Mode::exact)
            throw parse_error("exact mode cannot read non-integer JSON number " + j.dump());
        return Scalar::floating(j.get<double>());
    }
    throw parse_error("expected a number or \"p/q\" string, got " + j.dump());
}

inline json scalar_list_to_json(const std::vector<Scalar>& v) {
    json arr = json::array();
    for (const auto& s : v) arr.push_back(scalar_to_json(s));
    return arr;
}

inline std::vector<Scalar> scalar_list_from_json(const json& j, Mode mode) {
    if (!j.is_array()) throw parse_error("expected an array of scalars, got " + j.dump());
    std::vector<Scalar> out;
    out.reserve(j.size());
    for (const auto& e : j) out.push_back(scalar_from_json(e, mode));
    return out;
}

inline json params_to_json(const QParams& p) {
    json j;
    j["mode"] = mode_name(p.mode());
    if (p.mode() == Mode::exact) {
        j["q"] = p.q().str();
        j["Q"] = p.big_q().str();
        j["alpha"] = Scalar::exact(p.alpha_rat()).str();
    } else {
        j["q"] = p.q().value();
        j["alpha"] = p.alpha_value();
    }
    return j;
}

inline QParams params_from_json(const json& j) {
    if (!j.is_object()) throw parse_error("params: expected an object");
    Mode mode = Mode::exact;
    if (j.contains("mode")) {
        std::string m = j.at("mode").get<std::string>();
        if (m == "exact") mode = Mode::exact;
        else if (m == "float") mode = Mode::floating;
        else throw parse_error("params: unknown mode '" + m + "'");
    }
    if (mode == Mode::exact) {
        if (!j.contains("q") || !j.contains("Q") || !j.contains("alpha"))
            throw parse_error("params: exact mode needs q, Q, and alpha");
        return QParams::exact(scalar_from_json(j.at("q"), Mode::exact).rat(),
                              scalar_from_json(j.at("Q"), Mode::exact).rat(),
                              scalar_from_json(j.at("alpha"), Mode::exact).rat());
    }
    if (!j.contains("q") || !j.contains("alpha"))
        throw parse_error("params: float mode needs q and alpha");
    return QParams::floating(scalar_from_json(j.at("q"), Mode::floating).value(),
                             scalar_from_json(j.at("alpha"), Mode::floating).value());
}

inline json alpha_series_to_json(const AlphaSeries& f) {
    json inner;
    inner["coeffs"] = scalar_list_to_json(f.coeffs());
    inner["order"] = f.order();
    return json{{"alpha_series", inner}};
}

inline AlphaSeries alpha_series_from_json(const json& j, const QParams& p) {
    const json& inner = j.contains("alpha_series") ? j.at("alpha_series") : j;
    if (!inner.is_object() || !inner.contains("coeffs"))
        throw parse_error("alpha_series: expected {\"coeffs\": [...]}");
    auto coeffs = scalar_list_from_json(inner.at("coeffs"), p.mode());
    if (inner.contains("order")) {
        long long order = inner.at("order").get<long long>();
        if (order + 1 != static_cast<long long>(coeffs.size()))
            throw parse_error("alpha_series: order does not match coefficient count");
    }
    return AlphaSeries(p, std::move(coeffs));
}

inline json atom_to_json(const TimeAtom& a) {
    json j;
    j["kind"] = atom_kind_name(a.kind);
    if (a.kind == AtomKind::power) j["n"] = a.n;
    else j["beta"] = scalar_to_json(a.beta);
    return j;
}

inline TimeAtom atom_from_json(const json& j, Mode mode) {
    if (!j.is_object() || !j.contains("kind")) throw parse_error("atom: expected {\"kind\": ...}");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "power") {
        if (!j.contains("n")) throw parse_error("power atom: missing n");
        return TimeAtom::power(j.at("n").get<int>());
    }
    if (!j.contains("beta")) throw parse_error(kind + " atom: missing beta");
    Scalar beta = scalar_from_json(j.at("beta"), mode);
    if (kind == "exp") return TimeAtom::exp(beta);
    if (kind == "cap_exp") return TimeAtom::cap_exp(beta);
    if (kind == "cos") return TimeAtom::cos(beta);
    if (kind == "sin") return TimeAtom::sin(beta);
    throw parse_error("atom: unknown kind '" + kind + "'");
}

inline json time_expr_to_json(const TimeExpr& e) {
    json arr = json::array();
    for (const auto& t : e.terms())
        arr.push_back(json{{"coef", scalar_to_json(t.coef)}, {"atom", atom_to_json(t.atom)}});
    json j{{"time_expr", arr}};
    if (e.inexact()) j["inexact"] = true;
    return j;
}

inline TimeExpr time_expr_from_json(const json& j, Mode mode) {
    const json& arr = j.contains("time_expr") ? j.at("time_expr") : j;
    if (!arr.is_array()) throw parse_error("time_expr: expected an array of terms");
    TimeExpr e;
    for (const auto& term : arr) {
        if (!term.is_object() || !term.contains("coef") || !term.contains("atom"))
            throw parse_error("time_expr term: expected {\"coef\": ..., \"atom\": ...}");
        TimeAtom atom = atom_from_json(term.at("atom"), mode);
        // float betas may accompany exact coefficients (inexact inversions)
        Mode coef_mode = mode;
        e.add_term(scalar_from_json(term.at("coef"), coef_mode), atom);
    }
    if (j.is_object() && j.contains("inexact") && j.at("inexact").get<bool>()) e.mark_inexact();
    return e;
}

inline json transform_to_json(const TransformExpr& r) {
    json j;
    j["m"] = r.homogeneity();
    json num = json::array(), den = json::array();
    for (const auto& c : r.phi().num().coeffs()) num.push_back(scalar_to_json(c));
    for (const auto& c : r.phi().den().coeffs()) den.push_back(scalar_to_json(c));
    j["num"] = num;
    j["den"] = den;
    if (r.has_tail()) j["tail"] = scalar_list_to_json(r.tail());
    return j;
}

inline TransformExpr transform_from_json(const json& j, Mode mode) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw parse_error("transform: expected {\"m\": ..., \"num\": [...], \"den\": [...]}");
    int m = j.contains("m") ? j.at("m").get<int>() : 1;
    Polynomial num(scalar_list_from_json(j.at("num"), mode));
    Polynomial den(scalar_list_from_json(j.at("den"), mode));
    if (den.is_zero()) throw parse_error("transform: zero denominator");
    std::vector<Scalar> tail;
    if (j.contains("tail")) tail = scalar_list_from_json(j.at("tail"), mode);
    return TransformExpr(m, RationalFn(std::move(num), std::move(den)), std::move(tail));
}

inline json expansion_to_json(const ShiftedBasisExpansion& e) {
    return json{{"center", scalar_to_json(e.center)}, {"terms", scalar_list_to_json(e.terms)}};
}

inline ShiftedBasisExpansion expansion_from_json(const json& j, Mode mode) {
    if (!j.is_object() || !j.contains("center") || !j.contains("terms"))
        throw parse_error("expansion: expected {\"center\": ..., \"terms\": [...]}");
    ShiftedBasisExpansion e;
    e.center = scalar_from_json(j.at("center"), mode);
    e.terms = scalar_list_from_json(j.at("terms"), mode);
    return e;
}

inline json problem_to_json(const OdeProblem& prob, const QParams& p) {
    json j;
    j["coeffs"] = scalar_list_to_json(prob.coeffs);
    j["rhs"] = time_expr_to_json(prob.rhs);
    j["init"] = scalar_list_to_json(prob.init);
    j["params"] = params_to_json(p);
    return j;
}

/// Reads a problem file; when it carries a "params" object that takes
/// precedence over the fallback parameters.
inline OdeProblem problem_from_json(const json& j, QParams& params) {
    if (!j.is_object() || !j.contains("coeffs") || !j.contains("init"))
        throw parse_error("problem: expected {\"coeffs\": [...], \"rhs\": ..., \"init\": [...]}");
    if (j.contains("params")) params = params_from_json(j.at("params"));
    OdeProblem prob;
    prob.coeffs = scalar_list_from_json(j.at("coeffs"), params.mode());
    prob.init = scalar_list_from_json(j.at("init"), params.mode());
    if (j.contains("rhs") && !j.at("rhs").is_null())
        prob.rhs = time_expr_from_json(j.at("rhs"), params.mode());
    return prob;
}

inline json quadrature_to_json(const QuadratureReport& r) {
    return json{{"value", r.value},
                {"terms_used", r.terms_used},
                {"tail_bound", r.tail_bound},
                {"converged", r.converged}};
}

} // namespace qnat
