#pragma once

#include "qnat/polynomial.hpp"

#include <utility>

namespace qnat {

/// Univariate rational function in canonical form: numerator and
/// denominator coprime, denominator monic. Zero is 0/1. Equality on
/// canonical forms is plain coefficient comparison.
class RationalFn {
public:
    RationalFn()
        : num_(Polynomial::zero()), den_(Polynomial::constant(Scalar::exact(Rational(1)))) {}

    RationalFn(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw domain_error("RationalFn: zero denominator");
        canonicalize();
    }

    static RationalFn zero() { return RationalFn(); }

    static RationalFn constant(const Scalar& v) {
        return RationalFn(Polynomial::constant(v),
                          Polynomial::constant(Scalar::integer(1, v.mode())));
    }

    static RationalFn from_poly(Polynomial p) {
        Mode m = p.is_zero() ? Mode::exact : p.leading().mode();
        return RationalFn(std::move(p), Polynomial::constant(Scalar::integer(1, m)));
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
        return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
        if (b.is_zero()) throw domain_error("RationalFn: division by zero");
        return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend RationalFn operator*(const Scalar& s, const RationalFn& a) {
        return RationalFn(s * a.num_, a.den_);
    }

    RationalFn operator-() const {
        RationalFn r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const RationalFn& a, const RationalFn& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFn& a, const RationalFn& b) { return !(a == b); }

    /// phi(w) -> phi(c*w).
    RationalFn scale_argument(const Scalar& c) const {
        return RationalFn(num_.scale_argument(c), den_.scale_argument(c));
    }

    /// phi(w) -> w^k phi(w); k may be negative.
    RationalFn mul_w_power(int k) const {
        if (k >= 0) return RationalFn(num_.mul_x_power(k), den_);
        return RationalFn(num_, den_.mul_x_power(-k));
    }

    Scalar eval(const Scalar& w) const {
        Scalar d = den_.eval(w);
        if (d.is_zero()) throw domain_error("RationalFn: evaluation at a pole");
        return num_.eval(w) / d;
    }

private:
    void canonicalize() {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(Scalar::integer(1, den_.leading().mode()));
            return;
        }
        Polynomial g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        Scalar lead = den_.leading();
        Scalar inv = Scalar::integer(1, lead.mode()) / lead;
        num_ = inv * num_;
        den_ = inv * den_;
    }

    Polynomial num_;
    Polynomial den_;
};

} // namespace qnat
