#pragma once

#include "qnat/params.hpp"
#include "qnat/qcore.hpp"
#include "qnat/scalar.hpp"

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

namespace qnat {

/// Default truncation order for series constructors.
inline constexpr int kDefaultOrder = 32;

/// Truncated formal series sum_{n=0..N} c_n t^(alpha*n).
///
/// Index n always refers to the monomial t^(alpha*n). Arithmetic caps
/// the result at the smaller operand order (the order field records the
/// cap); operands must share parameters.
class AlphaSeries {
public:
    AlphaSeries(QParams params, std::vector<Scalar> coeffs)
        : params_(std::move(params)), c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(params_.scalar(0));
    }

    static AlphaSeries zero(const QParams& p, int order) {
        return AlphaSeries(p, std::vector<Scalar>(static_cast<std::size_t>(order) + 1, p.scalar(0)));
    }

    static AlphaSeries constant(const QParams& p, const Scalar& c0, int order = 0) {
        auto s = zero(p, order);
        s.c_[0] = c0;
        return s;
    }

    /// Builds t^(alpha*n) as a series of order n.
    static AlphaSeries monomial(const QParams& p, int n) {
        auto s = zero(p, n);
        s.c_[static_cast<std::size_t>(n)] = p.scalar(1);
        return s;
    }

    const QParams& params() const { return params_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }

    /// Coefficient of t^(alpha*n); zero outside the stored range.
    const Scalar& coeff(int n) const {
        static const Scalar zero_exact = Scalar::exact(Rational(0));
        static const Scalar zero_float = Scalar::floating(0.0);
        if (n < 0 || n > order())
            return params_.mode() == Mode::exact ? zero_exact : zero_float;
        return c_[static_cast<std::size_t>(n)];
    }

    void set_coeff(int n, const Scalar& v) {
        if (n < 0 || n > order()) throw domain_error("AlphaSeries: coefficient index out of range");
        c_[static_cast<std::size_t>(n)] = v;
    }

    const std::vector<Scalar>& coeffs() const { return c_; }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Scalar& v) { return v.is_zero(); });
    }

    friend bool operator==(const AlphaSeries& a, const AlphaSeries& b) {
        if (a.params_ != b.params_) return false;
        int n = std::max(a.order(), b.order());
        for (int i = 0; i <= n; ++i)
            if (a.coeff(i) != b.coeff(i)) return false;
        return true;
    }

private:
    QParams params_;
    std::vector<Scalar> c_;
};

namespace detail {
inline void require_same_params(const AlphaSeries& f, const AlphaSeries& g) {
    if (f.params() != g.params())
        throw domain_error("AlphaSeries: operands built from different parameters");
}
} // namespace detail

inline AlphaSeries series_add(const AlphaSeries& f, const AlphaSeries& g) {
    detail::require_same_params(f, g);
    int n = std::min(f.order(), g.order());
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f.coeff(i) + g.coeff(i);
    return AlphaSeries(f.params(), std::move(c));
}

inline AlphaSeries series_sub(const AlphaSeries& f, const AlphaSeries& g) {
    detail::require_same_params(f, g);
    int n = std::min(f.order(), g.order());
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[static_cast<std::size_t>(i)] = f.coeff(i) - g.coeff(i);
    return AlphaSeries(f.params(), std::move(c));
}

inline AlphaSeries series_scale(const Scalar& a, const AlphaSeries& f) {
    std::vector<Scalar> c = f.coeffs();
    for (auto& v : c) v = a * v;
    return AlphaSeries(f.params(), std::move(c));
}

/// Cauchy product truncated to the smaller operand order.
inline AlphaSeries series_mul(const AlphaSeries& f, const AlphaSeries& g) {
    detail::require_same_params(f, g);
    int n = std::min(f.order(), g.order());
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1, f.params().scalar(0));
    for (int i = 0; i <= n; ++i)
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<std::size_t>(i + j)] += f.coeff(i) * g.coeff(j);
    return AlphaSeries(f.params(), std::move(c));
}

/// t^(alpha*k) * f: shifts every coefficient up by k (order grows by k).
inline AlphaSeries series_mul_monomial(const AlphaSeries& f, int k) {
    if (k < 0) throw domain_error("series_mul_monomial: negative shift");
    const auto& p = f.params();
    auto out = AlphaSeries::zero(p, f.order() + k);
    for (int n = 0; n <= f.order(); ++n) out.set_coeff(n + k, f.coeff(n));
    return out;
}

/// f(t) -> f(qt): multiplies c_n by Q^n.
inline AlphaSeries shift_q(const AlphaSeries& f) {
    const auto& p = f.params();
    std::vector<Scalar> c = f.coeffs();
    Scalar qn = p.scalar(1);
    for (auto& v : c) {
        v = qn * v;
        qn *= p.big_q();
    }
    return AlphaSeries(p, std::move(c));
}

/// Exact evaluation with X substituted for t^alpha (plain polynomial
/// in X, so negative X is legal).
inline Scalar series_eval_at_xalpha(const AlphaSeries& f, const Scalar& X) {
    Scalar acc = f.coeff(f.order());
    for (int n = f.order() - 1; n >= 0; --n) acc = acc * X + f.coeff(n);
    return acc;
}

struct EvalReport {
    double value = 0.0;
    double tail = 0.0;    // magnitude of the last included term
    bool converged = true;
    int terms = 0;
};

/// Numeric evaluation at t >= 0, summed to the truncation order.
/// Reports non-convergence when the last term is not negligible
/// against the partial sum.
inline EvalReport series_eval(const AlphaSeries& f, double t, double tol = 1e-12) {
    if (t < 0) throw domain_error("series_eval: t must be nonnegative");
    EvalReport r;
    double xa = std::pow(t, f.params().alpha_value());
    double term = 1.0, sum = 0.0, last = 0.0;
    for (int n = 0; n <= f.order(); ++n) {
        last = f.coeff(n).value() * term;
        sum += last;
        term *= xa;
        ++r.terms;
    }
    r.value = sum;
    r.tail = std::fabs(last);
    r.converged = r.tail <= tol * std::max(1.0, std::fabs(sum));
    return r;
}

/// Coefficients of the deformed exponential: c_n = beta^n / [n*alpha]!.
inline AlphaSeries make_exp_series(const Scalar& beta, int order, const QParams& p) {
    auto s = AlphaSeries::zero(p, order);
    Scalar bn = p.scalar(1), fact = p.scalar(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            bn *= beta;
            fact *= q_number_mult(n, p);
        }
        s.set_coeff(n, bn / fact);
    }
    return s;
}

/// Second deformed exponential: c_n = Q^(n(n-1)/2) beta^n / [n*alpha]!.
inline AlphaSeries make_cap_exp_series(const Scalar& beta, int order, const QParams& p) {
    auto s = AlphaSeries::zero(p, order);
    Scalar bn = p.scalar(1), fact = p.scalar(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            bn *= beta;
            fact *= q_number_mult(n, p);
        }
        s.set_coeff(n, p.big_q_pow(static_cast<long long>(n) * (n - 1) / 2) * bn / fact);
    }
    return s;
}

/// Deformed cosine: (-1)^k beta^(2k) / [2k*alpha]! at even indices.
inline AlphaSeries make_cos_series(const Scalar& beta, int order, const QParams& p) {
    auto s = AlphaSeries::zero(p, order);
    for (int n = 0; n <= order; n += 2) {
        int k = n / 2;
        Scalar c = pow_int(beta, n) / q_alpha_factorial(n, p);
        s.set_coeff(n, (k % 2 == 0) ? c : -c);
    }
    return s;
}

/// Deformed sine: (-1)^k beta^(2k+1) / [(2k+1)*alpha]! at odd indices.
inline AlphaSeries make_sin_series(const Scalar& beta, int order, const QParams& p) {
    auto s = AlphaSeries::zero(p, order);
    for (int n = 1; n <= order; n += 2) {
        int k = (n - 1) / 2;
        Scalar c = pow_int(beta, n) / q_alpha_factorial(n, p);
        s.set_coeff(n, (k % 2 == 0) ? c : -c);
    }
    return s;
}

/// Number of product factors needed before (1-q) Q^J x^alpha drops
/// below the cutoff.
inline int kernel_factors_needed(double x, const QParams& p, double cutoff = 1e-14) {
    double z = (1.0 - p.q().value()) * std::pow(x, p.alpha_value());
    if (z <= cutoff) return 1;
    double lq = std::log(p.big_q().value());
    return static_cast<int>(std::ceil(std::log(cutoff / z) / lq)) + 1;
}

/// Reciprocal deformed exponential 1/e(x) as the convergent product
/// prod_{j>=0} (1 - (1-q) Q^j x^alpha).
///
/// Valid for all x >= 0, unlike the series. The product vanishes exactly
/// where some factor does; factors within 1e-13 of zero are treated as
/// zeros so grid points that land on them do not amplify rounding noise.
inline double inv_e_kernel(double x, const QParams& p, int factors = 0) {
    if (x < 0) throw domain_error("inv_e_kernel: x must be nonnegative");
    double z = (1.0 - p.q().value()) * std::pow(x, p.alpha_value());
    double Q = p.big_q().value();
    int J = kernel_factors_needed(x, p);
    if (factors > 0) {
        if (factors < J)
            throw convergence_error("inv_e_kernel: factor count too small for this argument");
        J = factors;
    }
    for (int j = 0; j < J; ++j)
        if (std::fabs(1.0 - z * std::pow(Q, j)) < 1e-13) return 0.0;
    double prod = 1.0, zj = z;
    for (int j = 0; j < J; ++j) {
        prod *= 1.0 - zj;
        zj *= Q;
    }
    return prod;
}

} // namespace qnat
