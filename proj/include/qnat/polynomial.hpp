#pragma once

#include "qnat/scalar.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace qnat {

/// Dense univariate polynomial over Scalar, coefficients ascending.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static Polynomial zero() { return Polynomial(); }

    static Polynomial constant(const Scalar& v) { return Polynomial({v}); }

    static Polynomial monomial(const Scalar& v, int degree) {
        std::vector<Scalar> c(static_cast<std::size_t>(degree) + 1,
                              Scalar::integer(0, v.mode()));
        c.back() = v;
        return Polynomial(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    const Scalar& coeff(int i) const {
        static const Scalar zero_exact = Scalar::exact(Rational(0));
        if (i < 0 || i > degree()) return zero_exact;
        return c_[static_cast<std::size_t>(i)];
    }

    const Scalar& leading() const {
        if (is_zero()) throw domain_error("Polynomial: leading coefficient of zero");
        return c_.back();
    }

    const std::vector<Scalar>& coeffs() const { return c_; }

    Scalar eval(const Scalar& x) const {
        if (is_zero()) return Scalar::integer(0, x.mode());
        Scalar acc = c_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
        return acc;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Scalar> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.c_.size() && i < b.c_.size()) c[i] = a.c_[i] + b.c_[i];
            else if (i < a.c_.size()) c[i] = a.c_[i];
            else c[i] = b.c_[i];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

    Polynomial operator-() const {
        std::vector<Scalar> c = c_;
        for (auto& v : c) v = -v;
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero();
        std::vector<Scalar> c(a.c_.size() + b.c_.size() - 1,
                              Scalar::integer(0, a.c_[0].mode()));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                c[i + j] += a.c_[i] * b.c_[j];
        return Polynomial(std::move(c));
    }

    friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
        std::vector<Scalar> c = a.c_;
        for (auto& v : c) v = s * v;
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Euclidean division; returns {quotient, remainder}.
    friend std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
        if (b.is_zero()) throw domain_error("Polynomial: division by zero polynomial");
        Polynomial r = a, q;
        std::vector<Scalar> qc;
        if (a.degree() >= b.degree())
            qc.assign(static_cast<std::size_t>(a.degree() - b.degree()) + 1,
                      Scalar::integer(0, b.leading().mode()));
        while (!r.is_zero() && r.degree() >= b.degree()) {
            int d = r.degree() - b.degree();
            Scalar f = r.leading() / b.leading();
            qc[static_cast<std::size_t>(d)] = f;
            r = r - (f * shift(b, d));
        }
        return {Polynomial(std::move(qc)), r};
    }

    /// p(x) -> p(c*x).
    Polynomial scale_argument(const Scalar& c) const {
        std::vector<Scalar> out = c_;
        Scalar ck = Scalar::integer(1, c.mode());
        for (std::size_t i = 0; i < out.size(); ++i) {
            out[i] = out[i] * ck;
            ck = ck * c;
        }
        return Polynomial(std::move(out));
    }

    /// p(x) -> p(x) * x^k.
    Polynomial mul_x_power(int k) const {
        if (is_zero() || k == 0) return *this;
        std::vector<Scalar> out(c_.size() + static_cast<std::size_t>(k),
                                Scalar::integer(0, c_[0].mode()));
        std::copy(c_.begin(), c_.end(), out.begin() + k);
        return Polynomial(std::move(out));
    }

    Polynomial monic() const {
        if (is_zero()) return *this;
        return (Scalar::integer(1, leading().mode()) / leading()) * (*this);
    }

    Polynomial derivative() const {
        if (degree() < 1) return zero();
        std::vector<Scalar> out(c_.size() - 1);
        for (int i = 1; i <= degree(); ++i)
            out[static_cast<std::size_t>(i - 1)] =
                Scalar::integer(i, c_[0].mode()) * c_[static_cast<std::size_t>(i)];
        return Polynomial(std::move(out));
    }

    /// Multiplicity of the root at x = 0 (index of lowest nonzero coefficient).
    int zero_root_multiplicity() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<int>(i);
        return 0;
    }

private:
    static Polynomial shift(const Polynomial& p, int k) { return p.mul_x_power(k); }

    void normalize() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Scalar> c_;
};

/// Monic gcd by the Euclidean algorithm. Exact mode only: float
/// remainders have no reliable zero test, so float inputs yield the
/// trivial gcd.
inline Polynomial poly_gcd(Polynomial a, Polynomial b) {
    if ((!a.is_zero() && !a.leading().is_exact()) || (!b.is_zero() && !b.leading().is_exact()))
        return Polynomial::constant(Scalar::floating(1.0));
    while (!b.is_zero()) {
        auto [q, r] = divmod(a, b);
        (void)q;
        a = std::move(b);
        b = r.is_zero() ? Polynomial::zero() : r.monic();
    }
    return a.is_zero() ? a : a.monic();
}

} // namespace qnat
