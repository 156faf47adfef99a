#pragma once

#include "qnat/params.hpp"
#include "qnat/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace qnat {

struct QuadratureReport {
    double value = 0.0;
    int terms_used = 0;
    double tail_bound = 0.0;
    bool converged = false;
};

/// Anchor of the improper geometric grid: the smallest positive zero
/// of the reciprocal exponential, x0 with (1-q) x0^alpha = 1.
///
/// An improper geometric sum needs a grid offset, and this is the one
/// the calculus itself singles out: every evaluation boundary at
/// infinity carries a reciprocal-exponential factor, which vanishes
/// identically on {q^(-j) x0}. Anchoring there makes the fundamental-
/// theorem telescoping exact and the improper sums finite.
inline double jackson_anchor(const QParams& p) {
    return std::pow(1.0 - p.q().value(), -1.0 / p.alpha_value());
}

namespace detail {

inline QuadratureReport sum_report(std::vector<double> terms, double pos_tail,
                                   double neg_tail, double tol) {
    QuadratureReport r;
    r.terms_used = static_cast<int>(terms.size());
    // fixed smallest-magnitude-first order for reproducibility
    std::sort(terms.begin(), terms.end(),
              [](double a, double b) { return std::fabs(a) < std::fabs(b); });
    double sum = 0.0;
    bool finite = true;
    for (double t : terms) {
        if (!std::isfinite(t)) finite = false;
        sum += t;
    }
    r.value = sum;
    r.tail_bound = pos_tail + neg_tail;
    r.converged = finite && std::isfinite(sum) &&
                  r.tail_bound <= tol * std::max(1.0, std::fabs(sum));
    return r;
}

} // namespace detail

/// Improper integral over [0, infinity) as the bilateral geometric sum
///   (1-q) sum_{j=-J..J} (q^j b)^alpha f(q^j b),   b = anchor.
///
/// The grid is anchored at jackson_anchor(p) unless overridden. For
/// integrands damped by the reciprocal-exponential kernel the large-x
/// half vanishes identically there; without such damping the report
/// simply comes back non-converged.
inline QuadratureReport jackson_integral_0_inf(const std::function<double(double)>& f,
                                               const QParams& p, int half_range = 200,
                                               double tol = 1e-10, double anchor = 0.0) {
    if (half_range < 1) throw domain_error("jackson_integral_0_inf: half range must be positive");
    double q = p.q().value(), alpha = p.alpha_value();
    double b = anchor > 0.0 ? anchor : jackson_anchor(p);
    double scale = (1.0 - q) * std::pow(b, alpha);
    double Q = p.big_q().value();
    std::vector<double> terms;
    terms.reserve(2 * static_cast<std::size_t>(half_range) + 1);
    double pos_tail = 0.0, neg_tail = 0.0;
    for (int j = -half_range; j <= half_range; ++j) {
        double x = std::pow(q, j) * b;
        double t = scale * std::pow(Q, j) * f(x);
        terms.push_back(t);
        if (j == half_range) pos_tail = std::fabs(t);
        if (j == -half_range) neg_tail = std::fabs(t);
    }
    return detail::sum_report(std::move(terms), pos_tail, neg_tail, tol);
}

/// Definite integral over [0, 1]: (1-q) sum_{j=0..J} q^(alpha j) f(q^j).
inline QuadratureReport jackson_integral_0_1(const std::function<double(double)>& f,
                                             const QParams& p, int terms_count = 200,
                                             double tol = 1e-10) {
    if (terms_count < 1) throw domain_error("jackson_integral_0_1: term count must be positive");
    double q = p.q().value();
    double Q = p.big_q().value();
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(terms_count) + 1);
    double tail = 0.0;
    for (int j = 0; j <= terms_count; ++j) {
        double t = (1.0 - q) * std::pow(Q, j) * f(std::pow(q, j));
        terms.push_back(t);
        if (j == terms_count) tail = std::fabs(t);
    }
    return detail::sum_report(std::move(terms), tail, 0.0, tol);
}

/// Numeric transform: integral of f(u t) / e(q s t) over t in [0, inf),
/// on the grid anchored so the kernel zeros cancel the large-t half.
inline QuadratureReport natural_numeric(const std::function<double(double)>& f, double u,
                                        double s, const QParams& p, int half_range = 200,
                                        double tol = 1e-10) {
    if (!(s > 0.0)) throw domain_error("natural_numeric: s must be positive");
    if (!(u > 0.0)) throw domain_error("natural_numeric: u must be positive");
    double q = p.q().value();
    // kernel first: at its exact zeros f need not be evaluable at all
    auto integrand = [&](double t) {
        double kernel = inv_e_kernel(q * s * t, p);
        return kernel == 0.0 ? 0.0 : f(u * t) * kernel;
    };
    return jackson_integral_0_inf(integrand, p, half_range, tol, jackson_anchor(p) / s);
}

/// Numeric deformed Gamma at integer n >= 1 (defining integral).
inline QuadratureReport gamma_numeric(int n, const QParams& p, int half_range = 200,
                                      double tol = 1e-10) {
    if (n < 1) throw domain_error("gamma_numeric: argument must be a positive integer");
    double q = p.q().value(), alpha = p.alpha_value();
    auto integrand = [&](double x) {
        double kernel = inv_e_kernel(q * x, p);
        return kernel == 0.0 ? 0.0 : std::pow(x, alpha * (n - 1)) * kernel;
    };
    return jackson_integral_0_inf(integrand, p, half_range, tol);
}

/// Numeric deformed Beta at integers m, n >= 1 (defining integral).
inline QuadratureReport beta_numeric(int m, int n, const QParams& p, int terms_count = 200,
                                     double tol = 1e-10) {
    if (m < 1 || n < 1) throw domain_error("beta_numeric: arguments must be positive integers");
    double alpha = p.alpha_value();
    double Q = p.big_q().value();
    auto integrand = [&](double x) {
        double xa = std::pow(x, alpha);
        double prod = 1.0;
        for (int j = 1; j <= n - 1; ++j) prod *= 1.0 - std::pow(Q, j) * xa;
        return std::pow(x, alpha * (m - 1)) * prod;
    };
    return jackson_integral_0_1(integrand, p, terms_count, tol);
}

} // namespace qnat
