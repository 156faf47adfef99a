#pragma once

#include "qnat/inverse.hpp"
#include "qnat/qcalculus.hpp"
#include "qnat/transform.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace qnat {

/// Linear constant-coefficient initial-value problem
///   sum_{j=0..k} coeffs[j] (D)^(k-j) f = rhs,   (D)^j f(0) = init[j],
/// with k = coeffs.size() - 1 and coeffs[0] the leading coefficient.
struct OdeProblem {
    std::vector<Scalar> coeffs;
    TimeExpr rhs;
    std::vector<Scalar> init;

    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

inline void validate(const OdeProblem& prob) {
    int k = prob.order();
    if (k < 1) throw domain_error("OdeProblem: order must be at least 1");
    if (prob.coeffs[0].is_zero())
        throw domain_error("OdeProblem: leading coefficient must be nonzero");
    if (static_cast<int>(prob.init.size()) != k)
        throw domain_error("OdeProblem: need exactly " + std::to_string(k) + " initial values");
}

/// Characteristic polynomial sum_j coeffs[j] w^(k-j).
inline Polynomial char_poly(const OdeProblem& prob, const QParams& p) {
    validate(prob);
    int k = prob.order();
    std::vector<Scalar> c(static_cast<std::size_t>(k) + 1, p.scalar(0));
    for (int j = 0; j <= k; ++j) c[static_cast<std::size_t>(k - j)] = prob.coeffs[static_cast<std::size_t>(j)];
    return Polynomial(std::move(c));
}

namespace detail {

/// Initial-condition polynomial collected from the derivative theorem:
/// sum_j coeffs[j] sum_{i<k-j} w^(k-j-1-i) init[i].
inline Polynomial init_polynomial(const OdeProblem& prob, const QParams& p) {
    int k = prob.order();
    std::vector<Scalar> c(static_cast<std::size_t>(k), p.scalar(0));
    for (int j = 0; j < k; ++j)
        for (int i = 0; i < k - j; ++i)
            c[static_cast<std::size_t>(k - j - 1 - i)] +=
                prob.coeffs[static_cast<std::size_t>(j)] * prob.init[static_cast<std::size_t>(i)];
    return Polynomial(std::move(c));
}

inline void verify_solution_exact(const OdeProblem& prob, const TimeExpr& sol,
                                  const QParams& p) {
    int k = prob.order();
    TransformExpr T = natural_time_expr(sol, p);
    TransformExpr lhs = TransformExpr::zero();
    for (int j = 0; j <= k; ++j) {
        int order = k - j;
        TransformExpr part =
            order == 0 ? T
                       : transform_of_derivative(
                             T, order,
                             {prob.init.begin(), prob.init.begin() + order}, p);
        lhs = lhs + prob.coeffs[static_cast<std::size_t>(j)] * part;
    }
    if (lhs != natural_time_expr(prob.rhs, p))
        throw error("solve_ivp: transformed-equation substitution check failed");
    AlphaSeries f = expand(sol, k, p);
    for (int j = 0; j < k; ++j)
        if (f.coeff(j) * q_alpha_factorial(j, p) != prob.init[static_cast<std::size_t>(j)])
            throw error("solve_ivp: initial condition check failed at derivative " + std::to_string(j));
}

inline void verify_solution_numeric(const OdeProblem& prob, const TimeExpr& sol,
                                    const QParams& p, int order) {
    int k = prob.order();
    AlphaSeries f = expand(sol, order, p);
    const QParams& pf = f.params();
    AlphaSeries residual = AlphaSeries::zero(pf, order - k);
    AlphaSeries d = f;
    std::vector<AlphaSeries> derivs{f};
    for (int j = 1; j <= k; ++j) {
        d = dqa_series(d);
        derivs.push_back(d);
    }
    for (int j = 0; j <= k; ++j) {
        Scalar a = prob.coeffs[static_cast<std::size_t>(j)].to_mode(pf.mode());
        residual = series_add(residual, series_scale(a, derivs[static_cast<std::size_t>(k - j)]));
    }
    residual = series_sub(residual, expand(prob.rhs, order, pf));
    for (int n = 0; n <= residual.order(); ++n)
        if (std::fabs(residual.coeff(n).value()) > 1e-9)
            throw error("solve_ivp: residual check failed at series index " + std::to_string(n));
    for (int j = 0; j < k; ++j) {
        double got = f.coeff(j).value() * q_alpha_factorial(j, pf).value();
        if (std::fabs(got - prob.init[static_cast<std::size_t>(j)].value()) > 1e-9)
            throw error("solve_ivp: initial condition check failed at derivative " + std::to_string(j));
    }
}

} // namespace detail

/// Solves the problem by transforming, dividing by the characteristic
/// polynomial, and inverting. The result is verified before return:
/// its transform satisfies the transformed equation and its series
/// matches the initial values.
///
/// A right-hand-side pole coinciding with a characteristic root would
/// need a repeated-pole original that the atom table does not provide,
/// so it is rejected with a diagnostic rather than approximated.
inline TimeExpr solve_ivp(const OdeProblem& prob, const QParams& p,
                          int check_order = kDefaultOrder) {
    validate(prob);
    TransformExpr B = natural_time_expr(prob.rhs, p);
    if (B.has_tail())
        throw unsupported_error("solve_ivp: right-hand side transforms to a formal tail, which is not invertible");
    Polynomial C = char_poly(prob, p);

    Polynomial shared = poly_gcd(C, B.phi().den());
    if (shared.degree() > 0) {
        std::string where;
        for (const auto& r : detail::rational_roots(shared)) {
            if (!where.empty()) where += ", ";
            where += Scalar::exact(r).str();
        }
        if (where.empty()) where = "a non-rational point";
        throw unsupported_error("solve_ivp: resonance, right-hand side pole meets characteristic root at w = " + where);
    }

    RationalFn phi_f =
        (B.phi() + RationalFn::from_poly(detail::init_polynomial(prob, p))) /
        RationalFn::from_poly(C);
    TimeExpr sol = invert(TransformExpr(1, std::move(phi_f)), p);

    if (p.mode() == Mode::exact && !sol.inexact())
        detail::verify_solution_exact(prob, sol, p);
    else
        detail::verify_solution_numeric(prob, sol, p, check_order);
    return sol;
}

} // namespace qnat
