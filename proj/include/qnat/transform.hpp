#pragma once

#include "qnat/qcore.hpp"
#include "qnat/rational_fn.hpp"
#include "qnat/time_expr.hpp"

#include <utility>
#include <vector>

namespace qnat {

/// Transform-domain value in the variable w = s^alpha / u^alpha.
///
/// With X = s^alpha and Y = u^alpha, the value represented is
///
///   Y^(-m) * [ phi(w) + sum_k tail[k] * w^(-(k+1)) ]
///
/// Every transform of a time expression is homogeneous of degree -1
/// in (X, Y), i.e. m = 1; higher m arises only from the s/u derivative
/// operators. The tail carries truncated formal parts (the second
/// exponential) that have no rational closed form in w.
class TransformExpr {
public:
    TransformExpr() : m_(1) {}

    TransformExpr(int m, RationalFn phi, std::vector<Scalar> tail = {})
        : m_(m), phi_(std::move(phi)), tail_(std::move(tail)) {
        trim_tail();
    }

    static TransformExpr zero() { return TransformExpr(); }

    int homogeneity() const { return m_; }
    const RationalFn& phi() const { return phi_; }
    const std::vector<Scalar>& tail() const { return tail_; }
    bool has_tail() const { return !tail_.empty(); }

    bool is_zero() const { return phi_.is_zero() && tail_.empty(); }

    friend bool operator==(const TransformExpr& a, const TransformExpr& b) {
        if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
        if (a.m_ != b.m_ || a.phi_ != b.phi_) return false;
        std::size_t n = std::max(a.tail_.size(), b.tail_.size());
        for (std::size_t i = 0; i < n; ++i)
            if (a.tail_at(i) != b.tail_at(i)) return false;
        return true;
    }
    friend bool operator!=(const TransformExpr& a, const TransformExpr& b) { return !(a == b); }

    friend TransformExpr operator+(const TransformExpr& a, const TransformExpr& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.m_ != b.m_)
            throw unsupported_error("TransformExpr: sum of incompatible homogeneities");
        std::vector<Scalar> tail(std::max(a.tail_.size(), b.tail_.size()));
        for (std::size_t i = 0; i < tail.size(); ++i) tail[i] = a.tail_at(i) + b.tail_at(i);
        return TransformExpr(a.m_, a.phi_ + b.phi_, std::move(tail));
    }

    friend TransformExpr operator*(const Scalar& c, const TransformExpr& a) {
        std::vector<Scalar> tail = a.tail_;
        for (auto& g : tail) g = c * g;
        return TransformExpr(a.m_, c * a.phi_, std::move(tail));
    }

    friend TransformExpr operator-(const TransformExpr& a, const TransformExpr& b) {
        if (b.is_zero()) return a;
        return a + Scalar::integer(-1, b.mode()) * b;
    }

    Mode mode() const {
        if (!phi_.is_zero()) return phi_.num().leading().mode();
        return tail_.empty() ? Mode::exact : tail_[0].mode();
    }

    /// Substitution w -> c*w (an s-rescaling leaves Y alone).
    TransformExpr substitute_w_scale(const Scalar& c) const {
        std::vector<Scalar> tail = tail_;
        Scalar ci = Scalar::integer(1, c.mode()) / c;
        Scalar f = ci;
        for (auto& g : tail) {
            g = f * g;
            f = f * ci;
        }
        return TransformExpr(m_, phi_.scale_argument(c), std::move(tail));
    }

    /// Multiplication by w^k; negative k shifts tail terms deeper,
    /// positive k spills low tail terms into the rational part.
    TransformExpr mul_w_power(int k) const {
        RationalFn phi = phi_.mul_w_power(k);
        std::vector<Scalar> tail;
        if (k <= 0) {
            tail.assign(tail_.size() + static_cast<std::size_t>(-k),
                        Scalar::integer(0, mode()));
            for (std::size_t i = 0; i < tail_.size(); ++i) tail[i + static_cast<std::size_t>(-k)] = tail_[i];
        } else {
            // tail[j] w^(-(j+1)) * w^k is polynomial for j < k, tail index j-k after
            for (std::size_t i = 0; i < tail_.size(); ++i) {
                int j = static_cast<int>(i);
                if (j < k)
                    phi = phi + RationalFn::from_poly(Polynomial::monomial(tail_[i], k - 1 - j));
                else
                    tail.push_back(tail_[i]);
            }
        }
        return TransformExpr(m_, std::move(phi), std::move(tail));
    }

    /// Multiplication by Y^j = u^(alpha*j): lowers the homogeneity.
    TransformExpr mul_y_power(int j) const {
        return TransformExpr(m_ - j, phi_, tail_);
    }

private:
    Scalar tail_at(std::size_t i) const {
        return i < tail_.size() ? tail_[i] : Scalar::integer(0, mode());
    }

    void trim_tail() {
        while (!tail_.empty() && tail_.back().is_zero()) tail_.pop_back();
    }

    int m_;
    RationalFn phi_;
    std::vector<Scalar> tail_;
};

/// Transform of a truncated series, term by term:
/// sum_n c_n [n*alpha]! w^(-(n+1)) at homogeneity 1.
inline TransformExpr natural_series(const AlphaSeries& f) {
    const auto& p = f.params();
    int N = f.order();
    std::vector<Scalar> num(static_cast<std::size_t>(N) + 1, p.scalar(0));
    Scalar fact = p.scalar(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= q_number_mult(n, p);
        num[static_cast<std::size_t>(N - n)] = f.coeff(n) * fact;
    }
    Polynomial den = Polynomial::monomial(p.scalar(1), N + 1);
    return TransformExpr(1, RationalFn(Polynomial(std::move(num)), std::move(den)));
}

/// Closed-form transform of a single atom. The second exponential has
/// no rational closed form and is returned as a truncated tail.
inline TransformExpr natural_atom(const TimeAtom& atom, const QParams& p,
                                  int tail_order = kDefaultOrder) {
    Scalar one = p.scalar(1);
    switch (atom.kind) {
        case AtomKind::power: {
            // [n*alpha]! / w^(n+1)
            return TransformExpr(
                1, RationalFn(Polynomial::constant(q_alpha_factorial(atom.n, p)),
                              Polynomial::monomial(one, atom.n + 1)));
        }
        case AtomKind::exp: {
            // 1 / (w - beta)
            Polynomial den({-atom.beta, Scalar::integer(1, atom.beta.mode())});
            return TransformExpr(1, RationalFn(Polynomial::constant(Scalar::integer(1, atom.beta.mode())),
                                               std::move(den)));
        }
        case AtomKind::cos: {
            // w / (w^2 + beta^2)
            Scalar b2 = atom.beta * atom.beta;
            Mode m = atom.beta.mode();
            Polynomial den({b2, Scalar::integer(0, m), Scalar::integer(1, m)});
            return TransformExpr(1, RationalFn(Polynomial::monomial(Scalar::integer(1, m), 1),
                                               std::move(den)));
        }
        case AtomKind::sin: {
            // beta / (w^2 + beta^2)
            Scalar b2 = atom.beta * atom.beta;
            Mode m = atom.beta.mode();
            Polynomial den({b2, Scalar::integer(0, m), Scalar::integer(1, m)});
            return TransformExpr(1, RationalFn(Polynomial::constant(atom.beta), std::move(den)));
        }
        case AtomKind::cap_exp: {
            // tail g_k = Q^(k(k-1)/2) beta^k
            std::vector<Scalar> tail(static_cast<std::size_t>(tail_order) + 1);
            Scalar bk = Scalar::integer(1, atom.beta.mode());
            for (int k = 0; k <= tail_order; ++k) {
                if (k > 0) bk *= atom.beta;
                Scalar qf = p.big_q_pow(static_cast<long long>(k) * (k - 1) / 2)
                                .to_mode(atom.beta.mode());
                tail[static_cast<std::size_t>(k)] = qf * bk;
            }
            return TransformExpr(1, RationalFn::zero(), std::move(tail));
        }
    }
    throw domain_error("natural_atom: unknown atom kind");
}

inline TransformExpr natural_time_expr(const TimeExpr& e, const QParams& p,
                                       int tail_order = kDefaultOrder) {
    TransformExpr acc = TransformExpr::zero();
    for (const auto& term : e.terms())
        acc = acc + term.coef * natural_atom(term.atom, p, tail_order);
    return acc;
}

/// Transform of the n-th derivative given the transform of f and the
/// derivative values at zero:
///   w^n R - sum_{j<n} w^(n-1-j) init[j]   (in the Y^(-1) convention).
inline TransformExpr transform_of_derivative(const TransformExpr& R, int n,
                                             const std::vector<Scalar>& init,
                                             const QParams& p) {
    if (n < 1) throw domain_error("transform_of_derivative: order must be positive");
    if (R.homogeneity() != 1)
        throw unsupported_error("transform_of_derivative: input is not the transform of a function (m != 1)");
    if (static_cast<int>(init.size()) != n)
        throw domain_error("transform_of_derivative: need exactly n initial derivative values");
    TransformExpr shifted = R.mul_w_power(n);
    std::vector<Scalar> ic(static_cast<std::size_t>(n), p.scalar(0));
    for (int j = 0; j < n; ++j) ic[static_cast<std::size_t>(n - 1 - j)] = init[static_cast<std::size_t>(j)];
    TransformExpr correction(1, RationalFn::from_poly(Polynomial(std::move(ic))));
    return shifted - correction;
}

/// q-difference in s. Since s -> qs acts as w -> Qw at fixed Y,
///   D_s [Y^(-m) phi(w)] = Y^(-(m+1)) (phi(w) - phi(Qw)) / ((1-q) w),
/// and a tail term w^(-(k+1)) picks up the factor [-(k+1)*alpha]
/// while moving to index k+1.
inline TransformExpr dqa_in_s(const TransformExpr& R, const QParams& p) {
    RationalFn diff = R.phi() - R.phi().scale_argument(p.big_q());
    RationalFn phi = (p.scalar(1) / p.one_minus_q()) * diff.mul_w_power(-1);
    std::vector<Scalar> tail;
    if (R.has_tail()) {
        tail.assign(R.tail().size() + 1, p.scalar(0));
        for (std::size_t k = 0; k < R.tail().size(); ++k)
            tail[k + 1] = q_number_mult(-static_cast<long long>(k) - 1, p) * R.tail()[k];
    }
    return TransformExpr(R.homogeneity() + 1, std::move(phi), std::move(tail));
}

/// q-difference in u. u -> qu rescales Y by Q and w by 1/Q:
///   D_u [Y^(-m) phi(w)] = Y^(-(m+1)) (phi(w) - Q^(-m) phi(w/Q)) / (1-q);
/// a tail term at index k carries Y^(k+1-m) and gains [(k+1-m)*alpha].
inline TransformExpr dqa_in_u(const TransformExpr& R, const QParams& p) {
    int m = R.homogeneity();
    Scalar qmm = p.big_q_pow(-m);
    Scalar qinv = p.big_q_pow(-1);
    RationalFn diff = R.phi() - qmm * R.phi().scale_argument(qinv);
    RationalFn phi = (p.scalar(1) / p.one_minus_q()) * diff;
    std::vector<Scalar> tail(R.tail().size(), p.scalar(0));
    for (std::size_t k = 0; k < R.tail().size(); ++k)
        tail[k] = q_number_mult(static_cast<long long>(k) + 1 - m, p) * R.tail()[k];
    return TransformExpr(m + 1, std::move(phi), std::move(tail));
}

/// Transform of t^(alpha*n) f from the transform of f, via s-derivatives:
///   (-1)^n Q^(n(n-1)/2) u^(alpha n) (D_s)^n R(u, q^(-n) s).
inline TransformExpr tpower_transform_via_s(const TransformExpr& R, int n, const QParams& p) {
    if (n < 0) throw domain_error("tpower_transform_via_s: negative power");
    if (n == 0) return R;
    TransformExpr out = R.substitute_w_scale(p.big_q_pow(-n));
    for (int i = 0; i < n; ++i) out = dqa_in_s(out, p);
    out = out.mul_y_power(n);
    Scalar factor = p.big_q_pow(static_cast<long long>(n) * (n - 1) / 2);
    if (n % 2 == 1) factor = -factor;
    return factor * out;
}

/// Same via u-derivatives: (u^alpha/s^alpha)^n (D_u)^n [u^(alpha n) R].
inline TransformExpr tpower_transform_via_u(const TransformExpr& R, int n, const QParams& p) {
    if (n < 0) throw domain_error("tpower_transform_via_u: negative power");
    if (n == 0) return R;
    TransformExpr out = R.mul_y_power(n);
    for (int i = 0; i < n; ++i) out = dqa_in_u(out, p);
    return out.mul_w_power(-n);
}

/// Same through the triangular coefficient table:
///   (u^alpha/s^alpha)^n sum_k b(n,k) u^(alpha k) (D_u)^k R.
inline TransformExpr bnk_form(const TransformExpr& R, int n, const QParams& p) {
    if (n < 0) throw domain_error("bnk_form: negative power");
    if (n == 0) return R;
    BnkTable table(n, p);
    TransformExpr acc = TransformExpr::zero();
    TransformExpr deriv = R;
    for (int k = 0; k <= n; ++k) {
        if (k > 0) deriv = dqa_in_u(deriv, p);
        acc = acc + table.at(n, k) * deriv.mul_y_power(k);
    }
    return acc.mul_w_power(-n);
}

/// First `count` coefficients h_n of the large-w expansion
/// phi(w) + tail = sum_n h_n w^(-(n+1)). Requires a proper rational part.
inline std::vector<Scalar> w_inverse_expansion(const TransformExpr& R, int count,
                                               const QParams& p) {
    std::vector<Scalar> h(static_cast<std::size_t>(count), p.scalar(0));
    const RationalFn& phi = R.phi();
    if (!phi.is_zero()) {
        int dn = phi.num().degree(), dd = phi.den().degree();
        if (dn >= dd)
            throw unsupported_error("w_inverse_expansion: improper rational part");
        // phi(1/v) = v^(dd-dn) * rev(num)(v) / rev(den)(v); expand in v.
        std::vector<Scalar> a(static_cast<std::size_t>(count) + 1, p.scalar(0));
        for (int i = 0; i <= dn; ++i) {
            int idx = dd - dn + i;
            if (idx <= count) a[static_cast<std::size_t>(idx)] = phi.num().coeff(dn - i);
        }
        std::vector<Scalar> b(static_cast<std::size_t>(count) + 1, p.scalar(0));
        for (int i = 0; i <= dd && i <= count; ++i)
            b[static_cast<std::size_t>(i)] = phi.den().coeff(dd - i);
        std::vector<Scalar> c(static_cast<std::size_t>(count) + 1, p.scalar(0));
        for (int i = 0; i <= count; ++i) {
            Scalar acc = a[static_cast<std::size_t>(i)];
            for (int j = 1; j <= i; ++j)
                acc -= b[static_cast<std::size_t>(j)] * c[static_cast<std::size_t>(i - j)];
            c[static_cast<std::size_t>(i)] = acc / b[0];
        }
        for (int n = 0; n < count; ++n) h[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n) + 1];
    }
    for (std::size_t k = 0; k < R.tail().size() && k < h.size(); ++k)
        h[k] += R.tail()[k];
    return h;
}

} // namespace qnat
