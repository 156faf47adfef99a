#pragma once

#include "qnat/params.hpp"
#include "qnat/scalar.hpp"

#include <vector>

namespace qnat {

/// [k*alpha] = (1 - Q^k)/(1 - q). Defined for any integer k.
inline Scalar q_number_mult(long long k, const QParams& p) {
    return (p.scalar(1) - p.big_q_pow(k)) / p.one_minus_q();
}

/// The q-number [x] = (1 - q^x)/(1 - q).
///
/// Exact mode resolves q^x through integer powers of Q (x = k*alpha) or
/// of q (integer x); anything else is inexpressible and throws.
inline Scalar q_number(const Rational& x, const QParams& p) {
    if (p.mode() == Mode::floating) {
        double qd = p.q().value();
        return Scalar::floating((1.0 - std::pow(qd, x.convert_to<double>())) /
                                (1.0 - qd));
    }
    Rational ratio = x / p.alpha_rat();
    if (denominator(ratio) == 1)
        return q_number_mult(ratio.convert_to<long long>(), p);
    if (denominator(x) == 1) {
        Scalar qx = pow_int(p.q(), x.convert_to<long long>());
        return (p.scalar(1) - qx) / p.one_minus_q();
    }
    throw mode_error("q_number: q^x not expressible in exact mode for x = " + Scalar::exact(x).str());
}

/// [n*alpha]! = [alpha][2*alpha]...[n*alpha], with [0]! = 1.
inline Scalar q_alpha_factorial(long long n, const QParams& p) {
    if (n < 0) throw domain_error("q_alpha_factorial: negative index");
    Scalar acc = p.scalar(1);
    for (long long k = 1; k <= n; ++k) acc *= q_number_mult(k, p);
    return acc;
}

/// The Q-shifted power (a+b)^n = prod_{j=0}^{n-1} (a + Q^j b); 1 for n = 0.
inline Scalar shifted_power(const Scalar& a, const Scalar& b, long long n, const QParams& p) {
    if (n < 0) throw domain_error("shifted_power: negative exponent");
    Scalar acc = p.scalar(1);
    Scalar qj = p.scalar(1);
    for (long long j = 0; j < n; ++j) {
        acc *= a + qj * b;
        qj *= p.big_q();
    }
    return acc;
}

/// Deformed Gamma at positive integers: gamma_qa(n) = [(n-1)*alpha]!.
inline Scalar gamma_qa(long long n, const QParams& p) {
    if (n < 1) throw domain_error("gamma_qa: argument must be a positive integer");
    return q_alpha_factorial(n - 1, p);
}

/// Deformed Beta: gamma_qa(m) gamma_qa(n) / gamma_qa(m+n).
inline Scalar beta_qa(long long m, long long n, const QParams& p) {
    if (m < 1 || n < 1) throw domain_error("beta_qa: arguments must be positive integers");
    return gamma_qa(m, p) * gamma_qa(n, p) / gamma_qa(m + n, p);
}

/// Triangular coefficient table linking t^(alpha*n) multiplication to
/// iterated u-derivatives of a transform.
///
/// Recurrence: b(0,0) = 1; b(n,0) = [n*alpha] b(n-1,0);
/// b(n,k) = [(n+k)*alpha] b(n-1,k) + Q^(n-1+k) b(n-1,k-1) for 0 < k < n;
/// b(n,n) = Q^(2n-1) b(n-1,n-1).
///
/// The corner case follows the general-k line continued to k = n, which
/// gives b(n,n) = Q^(n^2); monomial brute-force expansion confirms it
/// (see the transform agreement tests).
class BnkTable {
public:
    BnkTable(long long n_max, const QParams& p) {
        if (n_max < 0) throw domain_error("BnkTable: negative size");
        rows_.reserve(static_cast<std::size_t>(n_max) + 1);
        rows_.push_back({p.scalar(1)});
        for (long long n = 1; n <= n_max; ++n) {
            const auto& prev = rows_.back();
            std::vector<Scalar> row(static_cast<std::size_t>(n) + 1, p.scalar(0));
            row[0] = q_number_mult(n, p) * prev[0];
            for (long long k = 1; k < n; ++k)
                row[static_cast<std::size_t>(k)] =
                    q_number_mult(n + k, p) * prev[static_cast<std::size_t>(k)] +
                    p.big_q_pow(n - 1 + k) * prev[static_cast<std::size_t>(k) - 1];
            row[static_cast<std::size_t>(n)] = p.big_q_pow(2 * n - 1) * prev.back();
            rows_.push_back(std::move(row));
        }
    }

    long long n_max() const { return static_cast<long long>(rows_.size()) - 1; }

    const Scalar& at(long long n, long long k) const {
        if (n < 0 || n > n_max() || k < 0 || k > n)
            throw domain_error("BnkTable: index out of range");
        return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
    }

    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

private:
    std::vector<std::vector<Scalar>> rows_;
};

inline BnkTable bnk_table(long long n_max, const QParams& p) { return BnkTable(n_max, p); }

} // namespace qnat
