#pragma once

#include "qnat/qcore.hpp"
#include "qnat/rational_fn.hpp"
#include "qnat/time_expr.hpp"
#include "qnat/transform.hpp"

#include <algorithm>
#include <set>
#include <utility>
#include <vector>

namespace qnat {

/// One summand of a decomposition over w:
///   pole_at_zero: c / w^multiplicity
///   simple_pole:  c / (w - root)
///   quadratic:    (b w + c) / (w^2 + d), d > 0
struct PartialFractionTerm {
    enum class Kind { pole_at_zero, simple_pole, quadratic };
    Kind kind = Kind::pole_at_zero;
    int multiplicity = 1; // pole_at_zero
    Scalar c;             // constant numerator part
    Scalar root;          // simple_pole
    Scalar b;             // quadratic: coefficient of w
    Scalar d;             // quadratic: constant of the denominator
};

namespace detail {

/// Positive divisors found by trial division, capped so pathological
/// inputs fail cleanly instead of stalling.
inline std::vector<BigInt> positive_divisors(BigInt v, bool& complete) {
    if (v < 0) v = -v;
    std::vector<BigInt> out;
    complete = true;
    if (v.is_zero()) return out;
    const BigInt cap = 1000000;
    BigInt d = 1;
    while (d * d <= v) {
        if (v % d == 0) {
            out.push_back(d);
            if (d * d != v) out.push_back(v / d);
        }
        ++d;
        if (d > cap && d * d <= v) {
            complete = false;
            break;
        }
    }
    return out;
}

/// All rational roots of an exact-coefficient polynomial.
inline std::vector<Rational> rational_roots(const Polynomial& poly) {
    if (poly.degree() < 1) return {};
    // scale to integer coefficients
    BigInt lcm = 1;
    for (const auto& c : poly.coeffs())
        lcm = boost::multiprecision::lcm(lcm, denominator(c.rat()));
    std::vector<BigInt> a;
    a.reserve(poly.coeffs().size());
    for (const auto& c : poly.coeffs())
        a.push_back(numerator(c.rat() * Rational(lcm)));
    bool c0_complete = true, cl_complete = true;
    auto ps = positive_divisors(a.front(), c0_complete);
    auto qs = positive_divisors(a.back(), cl_complete);
    if (!c0_complete || !cl_complete)
        throw unsupported_error("rational root search: coefficients too large to factor");
    std::set<Rational> found;
    for (const auto& p : ps)
        for (const auto& q : qs) {
            Rational r(p, q);
            for (int sign = 0; sign < 2; ++sign) {
                Rational cand = sign ? -r : r;
                if (poly.eval(Scalar::exact(cand)).is_zero()) found.insert(cand);
            }
        }
    return {found.begin(), found.end()};
}

/// Gaussian elimination over Scalar; throws on a singular matrix.
inline std::vector<Scalar> solve_linear(std::vector<std::vector<Scalar>> M,
                                        std::vector<Scalar> rhs) {
    const std::size_t n = M.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && M[pivot][col].is_zero()) ++pivot;
        if (pivot == n) throw unsupported_error("partial fractions: singular coefficient system");
        std::swap(M[pivot], M[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || M[row][col].is_zero()) continue;
            Scalar f = M[row][col] / M[col][col];
            for (std::size_t j = col; j < n; ++j) M[row][j] -= f * M[col][j];
            rhs[row] -= f * rhs[col];
        }
    }
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / M[i][i];
    return x;
}

} // namespace detail

/// Exact decomposition of a proper rational function whose denominator
/// factors over the rationals into w^k, distinct linear factors, and
/// irreducible quadratics w^2 + d. Anything else is a hard error: the
/// atom table has no original for other shapes, so no inverse is made up.
inline std::vector<PartialFractionTerm> partial_fractions(const RationalFn& phi) {
    if (phi.is_zero()) return {};
    if (phi.num().degree() >= phi.den().degree())
        throw unsupported_error("partial fractions: improper fraction (numerator degree too high)");
    for (const auto& c : phi.num().coeffs())
        if (!c.is_exact()) throw unsupported_error("partial fractions: exact coefficients required");
    for (const auto& c : phi.den().coeffs())
        if (!c.is_exact()) throw unsupported_error("partial fractions: exact coefficients required");

    const Scalar one = Scalar::exact(Rational(1));
    const Polynomial& D = phi.den();
    int k = D.zero_root_multiplicity();
    Polynomial E = k > 0 ? divmod(D, Polynomial::monomial(one, k)).first : D;

    std::vector<Rational> roots = detail::rational_roots(E);
    Polynomial G = E;
    for (const auto& r : roots) {
        Polynomial lin({Scalar::exact(-r), one});
        auto [quot, rem] = divmod(G, lin);
        if (!rem.is_zero()) throw unsupported_error("partial fractions: internal deflation failure");
        G = quot;
        if (G.eval(Scalar::exact(r)).is_zero())
            throw unsupported_error("partial fractions: repeated pole at w = " + Scalar::exact(r).str());
    }

    // remaining factor must split into distinct quadratics w^2 + d
    std::vector<Rational> dvals;
    if (G.degree() > 0) {
        for (int i = 1; i <= G.degree(); i += 2)
            if (!G.coeff(i).is_zero())
                throw unsupported_error("partial fractions: unsupported denominator factor of degree " +
                                        std::to_string(G.degree()));
        std::vector<Scalar> hc;
        for (int i = 0; i <= G.degree(); i += 2) hc.push_back(G.coeff(i));
        Polynomial H{std::vector<Scalar>(hc)};
        std::vector<Rational> zroots = detail::rational_roots(H);
        for (const auto& z : zroots) {
            if (z >= 0)
                throw unsupported_error("partial fractions: factor w^2 - " + Scalar::exact(z).str() +
                                        " is outside the supported quadratic form");
            Polynomial lin({Scalar::exact(-z), one});
            auto [quot, rem] = divmod(H, lin);
            if (!rem.is_zero()) throw unsupported_error("partial fractions: internal deflation failure");
            H = quot;
            if (H.eval(Scalar::exact(z)).is_zero())
                throw unsupported_error("partial fractions: repeated quadratic factor w^2 + " +
                                        Scalar::exact(-z).str());
            dvals.push_back(-z);
        }
        if (H.degree() > 0)
            throw unsupported_error("partial fractions: denominator does not factor into the supported forms");
    }

    // unknowns: k pole-at-zero coefficients, one per simple pole, two per quadratic
    std::size_t unknowns = static_cast<std::size_t>(k) + roots.size() + 2 * dvals.size();
    int deg = D.degree();
    std::vector<Polynomial> basis;
    basis.reserve(unknowns);
    for (int j = 1; j <= k; ++j)
        basis.push_back(divmod(D, Polynomial::monomial(one, j)).first);
    for (const auto& r : roots)
        basis.push_back(divmod(D, Polynomial({Scalar::exact(-r), one})).first);
    for (const auto& d : dvals) {
        Polynomial quad({Scalar::exact(d), Scalar::exact(Rational(0)), one});
        Polynomial base = divmod(D, quad).first;
        basis.push_back(base.mul_x_power(1)); // b w
        basis.push_back(base);                // c
    }

    std::vector<std::vector<Scalar>> M(static_cast<std::size_t>(deg),
                                       std::vector<Scalar>(unknowns, Scalar::exact(Rational(0))));
    std::vector<Scalar> rhs(static_cast<std::size_t>(deg), Scalar::exact(Rational(0)));
    for (int i = 0; i < deg; ++i) rhs[static_cast<std::size_t>(i)] = phi.num().coeff(i);
    for (std::size_t col = 0; col < unknowns; ++col)
        for (int i = 0; i <= basis[col].degree(); ++i)
            M[static_cast<std::size_t>(i)][col] = basis[col].coeff(i);
    std::vector<Scalar> x = detail::solve_linear(std::move(M), std::move(rhs));

    std::vector<PartialFractionTerm> terms;
    std::size_t idx = 0;
    for (int j = 1; j <= k; ++j, ++idx) {
        if (x[idx].is_zero()) continue;
        PartialFractionTerm t;
        t.kind = PartialFractionTerm::Kind::pole_at_zero;
        t.multiplicity = j;
        t.c = x[idx];
        terms.push_back(std::move(t));
    }
    for (const auto& r : roots) {
        PartialFractionTerm t;
        t.kind = PartialFractionTerm::Kind::simple_pole;
        t.root = Scalar::exact(r);
        t.c = x[idx++];
        if (!t.c.is_zero()) terms.push_back(std::move(t));
    }
    for (const auto& d : dvals) {
        PartialFractionTerm t;
        t.kind = PartialFractionTerm::Kind::quadratic;
        t.d = Scalar::exact(d);
        t.b = x[idx++];
        t.c = x[idx++];
        if (!t.b.is_zero() || !t.c.is_zero()) terms.push_back(std::move(t));
    }

    // recombination must reproduce the input identically
    RationalFn sum = RationalFn::zero();
    for (const auto& t : terms) {
        switch (t.kind) {
            case PartialFractionTerm::Kind::pole_at_zero:
                sum = sum + RationalFn(Polynomial::constant(t.c),
                                       Polynomial::monomial(one, t.multiplicity));
                break;
            case PartialFractionTerm::Kind::simple_pole:
                sum = sum + RationalFn(Polynomial::constant(t.c), Polynomial({-t.root, one}));
                break;
            case PartialFractionTerm::Kind::quadratic:
                sum = sum + RationalFn(Polynomial({t.c, t.b}),
                                       Polynomial({t.d, Scalar::exact(Rational(0)), one}));
                break;
        }
    }
    if (sum != phi) throw unsupported_error("partial fractions: recombination check failed");
    return terms;
}

/// Inverse transform through the atom table:
///   c/w^k        -> c t^(alpha(k-1)) / [(k-1)alpha]!
///   c/(w-r)      -> c * exp atom with beta = r
///   (bw+c)/(w^2+d) -> b * cos + (c/sqrt(d)) * sin with beta = sqrt(d)
/// sqrt(d) stays exact for perfect rational squares; otherwise the
/// affected coefficients drop to float mode and the result is flagged.
inline TimeExpr invert(const TransformExpr& R, const QParams& p) {
    if (R.is_zero()) return TimeExpr::zero();
    if (R.homogeneity() != 1)
        throw unsupported_error("invert: not the transform of a function (m != 1)");
    if (R.has_tail())
        throw unsupported_error("invert: formal tail part has no closed-form inverse");

    TimeExpr out;
    bool inexact = false;
    for (const auto& t : partial_fractions(R.phi())) {
        switch (t.kind) {
            case PartialFractionTerm::Kind::pole_at_zero:
                out.add_term(t.c / q_alpha_factorial(t.multiplicity - 1, p),
                             TimeAtom::power(t.multiplicity - 1));
                break;
            case PartialFractionTerm::Kind::simple_pole:
                out.add_term(t.c, TimeAtom::exp(t.root));
                break;
            case PartialFractionTerm::Kind::quadratic: {
                Rational root;
                if (t.d.is_exact() && exact_sqrt(t.d.rat(), root)) {
                    Scalar beta = Scalar::exact(root);
                    out.add_term(t.b, TimeAtom::cos(beta));
                    out.add_term(t.c / beta, TimeAtom::sin(beta));
                } else {
                    Scalar beta = Scalar::floating(std::sqrt(t.d.value()));
                    out.add_term(t.b.to_mode(Mode::floating), TimeAtom::cos(beta));
                    out.add_term(Scalar::floating(t.c.value() / beta.value()), TimeAtom::sin(beta));
                    inexact = true;
                }
                break;
            }
        }
    }
    if (inexact) out.mark_inexact();
    return out;
}

} // namespace qnat
