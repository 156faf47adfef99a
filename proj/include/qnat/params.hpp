#pragma once

#include "qnat/scalar.hpp"

#include <cmath>

namespace qnat {

/// Deformation parameters: base q in (0,1), order alpha > 0, and the
/// derived Q = q^alpha.
///
/// Exact mode requires q and Q rational with Q consistent with q^alpha
/// (every formula downstream uses only q, 1-q, and integer powers of Q,
/// so a rational Q makes the whole calculus exact). Float mode computes
/// Q = q^alpha directly and accepts any positive alpha.
class QParams {
public:
    static QParams exact(const Rational& q, const Rational& Q, const Rational& alpha) {
        validate_ranges(q.convert_to<double>(), alpha.convert_to<double>());
        double qd = q.convert_to<double>();
        double ad = alpha.convert_to<double>();
        double expected = std::pow(qd, ad);
        if (std::fabs(Q.convert_to<double>() - expected) > 1e-12)
            throw domain_error("QParams: Q is not consistent with q^alpha");
        QParams p;
        p.mode_ = Mode::exact;
        p.q_ = Scalar::exact(q);
        p.big_q_ = Scalar::exact(Q);
        p.alpha_ = alpha;
        p.alpha_d_ = ad;
        p.one_minus_q_ = Scalar::exact(Rational(1) - q);
        return p;
    }

    static QParams floating(double q, double alpha) {
        validate_ranges(q, alpha);
        QParams p;
        p.mode_ = Mode::floating;
        p.q_ = Scalar::floating(q);
        p.big_q_ = Scalar::floating(std::pow(q, alpha));
        p.alpha_d_ = alpha;
        p.one_minus_q_ = Scalar::floating(1.0 - q);
        return p;
    }

    Mode mode() const { return mode_; }
    const Scalar& q() const { return q_; }
    const Scalar& big_q() const { return big_q_; }
    const Scalar& one_minus_q() const { return one_minus_q_; }

    double alpha_value() const { return alpha_d_; }

    const Rational& alpha_rat() const {
        if (mode_ != Mode::exact) throw mode_error("QParams: rational alpha in float mode");
        return alpha_;
    }

    /// Mode-correct integer constant.
    Scalar scalar(long long v) const { return Scalar::integer(v, mode_); }

    Scalar q_pow(long long k) const { return pow_int(q_, k); }
    Scalar big_q_pow(long long k) const { return pow_int(big_q_, k); }

    friend bool operator==(const QParams& a, const QParams& b) {
        return a.mode_ == b.mode_ && a.q_ == b.q_ && a.big_q_ == b.big_q_ &&
               a.alpha_d_ == b.alpha_d_;
    }
    friend bool operator!=(const QParams& a, const QParams& b) { return !(a == b); }

private:
    QParams() = default;

    static void validate_ranges(double q, double alpha) {
        if (!(q > 0.0 && q < 1.0)) throw domain_error("QParams: q must lie in (0,1)");
        if (!(alpha > 0.0)) throw domain_error("QParams: alpha must be positive");
    }

    Mode mode_ = Mode::exact;
    Scalar q_;
    Scalar big_q_;
    Scalar one_minus_q_;
    Rational alpha_ = Rational(1);
    double alpha_d_ = 1.0;
};

} // namespace qnat
