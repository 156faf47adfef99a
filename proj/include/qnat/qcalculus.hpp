#pragma once

#include "qnat/qcore.hpp"
#include "qnat/series.hpp"

#include <cmath>
#include <functional>
#include <vector>

namespace qnat {

/// Derivative on coefficients: t^(alpha*n) -> [n*alpha] t^(alpha*(n-1)).
/// Constants map to the zero series.
inline AlphaSeries dqa_series(const AlphaSeries& f) {
    const auto& p = f.params();
    int out_order = std::max(f.order() - 1, 0);
    auto out = AlphaSeries::zero(p, out_order);
    for (int n = 1; n <= f.order(); ++n)
        out.set_coeff(n - 1, q_number_mult(n, p) * f.coeff(n));
    return out;
}

/// Antiderivative with integration constant 0:
/// t^(alpha*n) -> t^(alpha*(n+1)) / [(n+1)*alpha].
inline AlphaSeries iqa_series(const AlphaSeries& f) {
    const auto& p = f.params();
    auto out = AlphaSeries::zero(p, f.order() + 1);
    for (int n = 0; n <= f.order(); ++n)
        out.set_coeff(n + 1, f.coeff(n) / q_number_mult(n + 1, p));
    return out;
}

/// Finite q-difference derivative of a black-box evaluator:
/// [alpha] (f(x) - f(qx)) / (x^alpha (1 - Q)). Undefined at x = 0.
inline double dqa_pointwise(const std::function<double(double)>& f, double x, const QParams& p) {
    if (x <= 0.0) throw domain_error("dqa_pointwise: x = 0 is a singular point of the difference quotient");
    double alpha_num = q_number_mult(1, p).value();
    double q = p.q().value(), Q = p.big_q().value();
    return alpha_num * (f(x) - f(q * x)) / (std::pow(x, p.alpha_value()) * (1.0 - Q));
}

/// n-fold q-difference derivative, evaluated from the geometric grid
/// {q^k x, k = 0..n}. Depth capped at 16 to bound evaluator calls.
inline double dqa_pointwise_n(const std::function<double(double)>& f, double x, int n,
                              const QParams& p) {
    if (n < 0) throw domain_error("dqa_pointwise_n: negative order");
    if (n > 16) throw domain_error("dqa_pointwise_n: depth limited to 16");
    if (x <= 0.0) throw domain_error("dqa_pointwise_n: x = 0 is a singular point");
    double alpha_num = q_number_mult(1, p).value();
    double q = p.q().value(), Q = p.big_q().value(), alpha = p.alpha_value();
    std::vector<double> grid(static_cast<std::size_t>(n) + 1);
    std::vector<double> v(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        grid[static_cast<std::size_t>(k)] = std::pow(q, k) * x;
        v[static_cast<std::size_t>(k)] = f(grid[static_cast<std::size_t>(k)]);
    }
    for (int level = 0; level < n; ++level)
        for (int k = 0; k + level < n; ++k)
            v[static_cast<std::size_t>(k)] =
                alpha_num * (v[static_cast<std::size_t>(k)] - v[static_cast<std::size_t>(k) + 1]) /
                (std::pow(grid[static_cast<std::size_t>(k)], alpha) * (1.0 - Q));
    return v[0];
}

/// Exact q-difference of a series at the point with t^alpha = X:
/// [alpha] (f[X] - f[QX]) / (X (1 - Q)). Agrees with dqa_series
/// evaluated at X for every polynomial order.
inline Scalar dqa_at_xalpha(const AlphaSeries& f, const Scalar& X) {
    const auto& p = f.params();
    if (X.is_zero()) throw domain_error("dqa_at_xalpha: X = 0 is a singular point");
    Scalar fx = series_eval_at_xalpha(f, X);
    Scalar fqx = series_eval_at_xalpha(f, p.big_q() * X);
    return q_number_mult(1, p) * (fx - fqx) / (X * (p.scalar(1) - p.big_q()));
}

/// Monomial expansion of the shifted power prod_{j=0}^{n-1} (x^alpha - Q^j a).
inline AlphaSeries shifted_basis_expand(const Scalar& a, int n, const QParams& p) {
    if (n < 0) throw domain_error("shifted_basis_expand: negative exponent");
    std::vector<Scalar> c{p.scalar(1)};
    Scalar qj = p.scalar(1);
    for (int j = 0; j < n; ++j) {
        std::vector<Scalar> next(c.size() + 1, p.scalar(0));
        Scalar shift = qj * a;
        for (std::size_t i = 0; i < c.size(); ++i) {
            next[i + 1] += c[i];
            next[i] -= shift * c[i];
        }
        c = std::move(next);
        qj *= p.big_q();
    }
    return AlphaSeries(p, std::move(c));
}

/// Expansion of f about the point with x^alpha = center: term n carries
/// the n-th derivative of f there, so that
/// f = sum_n terms[n] (x^alpha - center)^n_shifted / [n*alpha]!.
struct ShiftedBasisExpansion {
    Scalar center;
    std::vector<Scalar> terms;
};

inline ShiftedBasisExpansion taylor_qa(const AlphaSeries& f, const Scalar& a) {
    ShiftedBasisExpansion e;
    e.center = a;
    e.terms.reserve(static_cast<std::size_t>(f.order()) + 1);
    AlphaSeries g = f;
    for (int n = 0; n <= f.order(); ++n) {
        e.terms.push_back(series_eval_at_xalpha(g, a));
        g = dqa_series(g);
    }
    return e;
}

/// Rebuilds the monomial series from a shifted-basis expansion.
inline AlphaSeries taylor_reconstruct(const ShiftedBasisExpansion& e, const QParams& p) {
    int order = static_cast<int>(e.terms.size()) - 1;
    auto acc = AlphaSeries::zero(p, std::max(order, 0));
    for (int n = 0; n <= order; ++n) {
        auto basis = shifted_basis_expand(e.center, n, p);
        // pad to the target order so the capped sum keeps every term
        auto padded = AlphaSeries::zero(p, std::max(order, 0));
        for (int i = 0; i <= basis.order(); ++i) padded.set_coeff(i, basis.coeff(i));
        acc = series_add(acc, series_scale(e.terms[static_cast<std::size_t>(n)] /
                                               q_alpha_factorial(n, p),
                                           padded));
    }
    return acc;
}

} // namespace qnat
