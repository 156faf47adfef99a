#pragma once

#include "qnat/inverse.hpp"
#include "qnat/ode.hpp"
#include "qnat/oracle.hpp"
#include "qnat/qcalculus.hpp"
#include "qnat/transform.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace qnat {

/// Outcome of one named self-check.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

namespace detail {

inline void record(std::vector<CheckResult>& out, std::string name, bool pass,
                   std::string detail = "") {
    out.push_back({std::move(name), pass, std::move(detail)});
}

inline Scalar random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Scalar::exact(Rational(num(rng), den(rng)));
}

inline AlphaSeries random_poly(int order, const QParams& p, std::mt19937& rng) {
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = random_rational(rng);
    return AlphaSeries(p, std::move(c));
}

inline bool series_equal_upto(const AlphaSeries& f, const AlphaSeries& g, int upto) {
    for (int n = 0; n <= upto; ++n)
        if (f.coeff(n) != g.coeff(n)) return false;
    return true;
}

inline bool rel_close(double got, double want, double tol) {
    return std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want));
}

inline std::string mismatch(double got, double want) {
    std::ostringstream os;
    os << "got " << got << ", want " << want;
    return os.str();
}

} // namespace detail

/// Gamma/Beta closed forms against their defining integrals.
inline std::vector<CheckResult> checks_gamma(const QParams& p, int quad_terms = 200) {
    using detail::record;
    std::vector<CheckResult> out;

    bool rec = true, fact = true;
    for (int n = 1; n <= 10; ++n) {
        rec = rec && gamma_qa(n + 1, p) == q_number_mult(n, p) * gamma_qa(n, p);
        fact = fact && gamma_qa(n + 1, p) == q_alpha_factorial(n, p);
    }
    record(out, "gamma.recurrence", rec);
    record(out, "gamma.factorial", fact);
    record(out, "gamma.initial", gamma_qa(1, p) == p.scalar(1));

    bool oracle_ok = true;
    std::string oracle_detail;
    for (int n = 1; n <= 5; ++n) {
        auto r = gamma_numeric(n, p, quad_terms);
        double want = gamma_qa(n, p).value();
        if (!r.converged || std::fabs(r.value - want) > 1e-6 * std::fabs(want)) {
            oracle_ok = false;
            oracle_detail = "n=" + std::to_string(n) + ": " + detail::mismatch(r.value, want);
        }
    }
    record(out, "gamma.oracle", oracle_ok, oracle_detail);

    bool sym = true;
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) sym = sym && beta_qa(m, n, p) == beta_qa(n, m, p);
    record(out, "beta.symmetry", sym);

    bool beta_ok = true;
    std::string beta_detail;
    for (int m = 1; m <= 5 && beta_ok; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto r = beta_numeric(m, n, p, quad_terms);
            double want = beta_qa(m, n, p).value();
            if (!r.converged || std::fabs(r.value - want) > 1e-8 * std::fabs(want)) {
                beta_ok = false;
                beta_detail = "m=" + std::to_string(m) + " n=" + std::to_string(n) + ": " +
                              detail::mismatch(r.value, want);
                break;
            }
        }
    record(out, "beta.oracle", beta_ok, beta_detail);

    bool positive = true;
    for (int k = 1; k <= 12; ++k) positive = positive && q_number_mult(k, p).sign() > 0;
    record(out, "qnumber.positive", positive);

    {
        QParams pc = QParams::floating(0.99, 1.0);
        bool limit = true;
        for (int n = 1; n <= 6; ++n) {
            double got = q_number(Rational(n), pc).value();
            limit = limit && std::fabs(got - n) <= 0.05 * n;
        }
        record(out, "qnumber.classical_limit", limit);
    }

    {
        BnkTable t(2, p);
        bool init = t.at(0, 0) == p.scalar(1) && t.at(1, 0) == q_number_mult(1, p) &&
                    t.at(1, 1) == p.big_q();
        record(out, "bnk.initial", init);
    }
    return out;
}

/// Special-function series, the product kernel, and coefficient identities.
inline std::vector<CheckResult> checks_series(const QParams& p) {
    using detail::record;
    std::vector<CheckResult> out;
    const int N = 20;
    Scalar beta = Scalar::exact(Rational(3, 2)).to_mode(p.mode());

    {
        auto e = make_exp_series(beta, N, p);
        auto ee = make_cap_exp_series(beta, N, p);
        auto c = make_cos_series(beta, N, p);
        auto s = make_sin_series(beta, N, p);
        record(out, "series.constant_terms",
               e.coeff(0) == p.scalar(1) && ee.coeff(0) == p.scalar(1) &&
                   c.coeff(0) == p.scalar(1) && s.coeff(0) == p.scalar(0));

        record(out, "series.exp_derivative",
               detail::series_equal_upto(dqa_series(e), series_scale(beta, e), N - 1));

        bool cap_ok = true;
        auto de = dqa_series(ee);
        for (int n = 0; n < N; ++n)
            cap_ok = cap_ok && de.coeff(n) == beta * p.big_q_pow(n).to_mode(beta.mode()) * ee.coeff(n);
        record(out, "series.cap_exp_derivative", cap_ok);

        record(out, "series.trig_derivatives",
               detail::series_equal_upto(dqa_series(c), series_scale(-beta, s), N - 1) &&
                   detail::series_equal_upto(dqa_series(s), series_scale(beta, c), N - 1));
    }

    {
        auto one_plus = AlphaSeries(p, {p.scalar(1), p.scalar(1), p.scalar(0)});
        auto one_minus = AlphaSeries(p, {p.scalar(1), p.scalar(-1), p.scalar(0)});
        auto want = AlphaSeries(p, {p.scalar(1), p.scalar(0), p.scalar(-1)});
        record(out, "series.algebra", series_mul(one_plus, one_minus) == want);
    }

    {
        Scalar half = Scalar::exact(Rational(1, 2)).to_mode(p.mode());
        auto f = make_exp_series(half, N, p);
        auto g = make_cos_series(half, N, p);
        double t = 0.3;
        auto prod = series_eval(series_mul(f, g), t);
        double sep = series_eval(f, t).value * series_eval(g, t).value;
        record(out, "series.mul_eval_commute", std::fabs(prod.value - sep) <= 1e-10,
               detail::mismatch(prod.value, sep));
    }

    {
        std::mt19937 rng(12345);
        bool ok = true;
        for (int rep = 0; rep < 10 && ok; ++rep) {
            auto f = detail::random_poly(8, p, rng);
            auto g = detail::random_poly(8, p, rng);
            auto lhs = dqa_series(series_mul(f, g));
            auto rhs = series_add(series_mul(shift_q(f), dqa_series(g)),
                                  series_mul(dqa_series(f), g));
            ok = detail::series_equal_upto(lhs, rhs, 7);
        }
        record(out, "series.leibniz", ok);
    }

    {
        double q = p.q().value(), alpha = p.alpha_value();
        auto e48 = make_exp_series(p.scalar(1), 48, p);
        bool ok = true;
        std::string why;
        for (int i = 1; i <= 20; ++i) {
            double z = 0.5 * i / 20.0;
            double x = std::pow(z / (1.0 - q), 1.0 / alpha);
            double prod = inv_e_kernel(x, p) * series_eval(e48, x).value;
            if (std::fabs(prod - 1.0) > 1e-8) {
                ok = false;
                why = detail::mismatch(prod, 1.0);
            }
        }
        record(out, "kernel.mutual_inverse", ok, why);
    }

    {
        double q = p.q().value(), alpha = p.alpha_value();
        double a = 0.9, beta_f = std::pow(a, alpha);
        bool ok = true;
        for (double x : {0.3, 0.7, 1.1}) {
            double got = dqa_pointwise([&](double y) { return inv_e_kernel(a * y, p); }, x, p);
            double want = -beta_f * inv_e_kernel(q * a * x, p);
            ok = ok && std::fabs(got - want) <= 1e-8 * std::max(1.0, std::fabs(want));
        }
        record(out, "kernel.derivative", ok);
    }

    {
        double q = p.q().value(), alpha = p.alpha_value();
        double x0 = std::pow(1.0 / (1.0 - q), 1.0 / alpha);
        bool ok = true;
        for (int i = 0; i < 10; ++i) {
            double x = x0 * i / 10.0;
            double v = inv_e_kernel(x, p);
            ok = ok && v > 0.0 && v <= 1.0;
        }
        record(out, "kernel.range", ok);
    }

    {
        double q = p.q().value(), alpha = p.alpha_value();
        double t = std::pow(1.2 / (1.0 - q), 1.0 / alpha);
        auto r = series_eval(make_exp_series(p.scalar(1), 32, p), t);
        record(out, "series.eval_divergence", !r.converged);
    }

    {
        TimeExpr e;
        e.add_term(p.scalar(2), TimeAtom::exp(Scalar::exact(Rational(1, 2)).to_mode(p.mode())));
        e.add_term(p.scalar(-3), TimeAtom::sin(p.scalar(2)));
        e.add_term(p.scalar(1), TimeAtom::power(2));
        double t = 0.4;
        double via_series = series_eval(expand(e, 32, p), t).value;
        double via_atoms = eval_time_expr(e, t, p).value;
        record(out, "timeexpr.expand_eval", std::fabs(via_series - via_atoms) <= 1e-10,
               detail::mismatch(via_series, via_atoms));
    }
    return out;
}

/// Shifted-basis expansion, the generalized Taylor form, and the
/// derivative/antiderivative identities around them.
inline std::vector<CheckResult> checks_taylor(const QParams& p) {
    using detail::record;
    std::vector<CheckResult> out;
    std::mt19937 rng(777);
    std::vector<Scalar> centers{p.scalar(0), p.scalar(1), p.scalar(-1),
                                Scalar::exact(Rational(1, 2)).to_mode(p.mode())};

    {
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            auto f = detail::random_poly(6, p, rng);
            for (const auto& a : centers) {
                auto e = taylor_qa(f, a);
                if (!(taylor_reconstruct(e, p) == f)) {
                    ok = false;
                    break;
                }
            }
        }
        record(out, "taylor.roundtrip", ok);
    }

    {
        auto f = AlphaSeries::monomial(p, 2);
        auto e = taylor_qa(f, p.scalar(1));
        bool ok = e.terms.size() == 3 && e.terms[0] == p.scalar(1) &&
                  e.terms[1] == q_number_mult(2, p) &&
                  e.terms[2] == q_number_mult(2, p) * q_number_mult(1, p);
        record(out, "taylor.monomial_example", ok);
    }

    {
        auto f = detail::random_poly(6, p, rng);
        auto e = taylor_qa(f, p.scalar(0));
        bool ok = true;
        for (int n = 0; n <= 6; ++n)
            ok = ok && e.terms[static_cast<std::size_t>(n)] == f.coeff(n) * q_alpha_factorial(n, p);
        record(out, "taylor.at_zero", ok);
    }

    {
        bool ok = true;
        for (const auto& a : centers) {
            for (int n = 1; n <= 6; ++n) {
                auto lhs = dqa_series(shifted_basis_expand(a, n, p));
                auto rhs = series_scale(q_number_mult(n, p), shifted_basis_expand(a, n - 1, p));
                ok = ok && detail::series_equal_upto(lhs, rhs, n - 1);
            }
        }
        record(out, "basis.forward_derivative", ok);
    }

    {
        // prod_{j<n} (a - Q^(j+shift) x^alpha), built by plain convolution
        auto neg_expand = [&](const Scalar& a, int n, int shift) {
            std::vector<Scalar> c{p.scalar(1)};
            for (int j = 0; j < n; ++j) {
                Scalar qfac = p.big_q_pow(j + shift);
                std::vector<Scalar> next(c.size() + 1, p.scalar(0));
                for (std::size_t i = 0; i < c.size(); ++i) {
                    next[i] += a * c[i];
                    next[i + 1] -= qfac * c[i];
                }
                c = std::move(next);
            }
            return AlphaSeries(p, std::move(c));
        };
        bool ok = true;
        for (const auto& a : centers)
            for (int n = 1; n <= 6; ++n) {
                auto lhs = dqa_series(neg_expand(a, n, 0));
                auto rhs = series_scale(-q_number_mult(n, p), neg_expand(a, n - 1, 1));
                ok = ok && detail::series_equal_upto(lhs, rhs, n - 1);
            }
        record(out, "basis.reflected_derivative", ok);
    }

    {
        bool ok = true;
        for (const auto& a : centers)
            for (int n = 1; n <= 6; ++n)
                ok = ok && series_eval_at_xalpha(shifted_basis_expand(a, n, p), a).is_zero();
        record(out, "basis.root_at_center", ok);
    }

    {
        bool ok = true;
        for (int rep = 0; rep < 10 && ok; ++rep) {
            auto f = detail::random_poly(6, p, rng);
            auto g = detail::random_poly(6, p, rng);
            auto lhs = iqa_series(series_mul(dqa_series(f), g));
            auto rhs = series_sub(series_mul(f, g),
                                  iqa_series(series_mul(shift_q(f), dqa_series(g))));
            // antiderivatives agree up to the integration constant
            for (int n = 1; n <= 6; ++n) ok = ok && lhs.coeff(n) == rhs.coeff(n);
        }
        record(out, "calculus.integration_by_parts", ok);
    }

    {
        bool ok = true;
        std::vector<Scalar> points{p.scalar(2), Scalar::exact(Rational(1, 2)).to_mode(p.mode()),
                                   Scalar::exact(Rational(-3, 4)).to_mode(p.mode())};
        for (int rep = 0; rep < 5 && ok; ++rep) {
            auto f = detail::random_poly(6, p, rng);
            for (const auto& X : points)
                ok = ok && dqa_at_xalpha(f, X) == series_eval_at_xalpha(dqa_series(f), X);
        }
        record(out, "calculus.pointwise_matches_series", ok);
    }

    {
        bool ok = true;
        for (int rep = 0; rep < 5 && ok; ++rep) {
            auto f = detail::random_poly(6, p, rng);
            ok = dqa_series(iqa_series(f)) == f;
        }
        record(out, "calculus.derivative_of_antiderivative", ok);
    }
    return out;
}

/// Forward transform closed forms, the derivative theorem, and the
/// three equivalent t-power multiplication routes.
inline std::vector<CheckResult> checks_transforms(const QParams& p, int quad_terms = 200) {
    using detail::record;
    std::vector<CheckResult> out;
    std::mt19937 rng(424242);
    const Scalar one = p.scalar(1);

    {
        auto R = natural_series(AlphaSeries::constant(p, one, 0));
        RationalFn want(Polynomial::constant(one), Polynomial::monomial(one, 1));
        record(out, "transform.constant", R.homogeneity() == 1 && R.phi() == want);
    }

    {
        bool ok = true;
        for (int n = 0; n <= 4; ++n) {
            auto closed = natural_atom(TimeAtom::power(n), p);
            auto direct = natural_series(AlphaSeries::monomial(p, n));
            ok = ok && closed == direct;
        }
        record(out, "transform.monomials", ok);
    }

    {
        bool ok = true;
        Scalar half = Scalar::exact(Rational(1, 2)).to_mode(p.mode());
        std::vector<TimeAtom> atoms{TimeAtom::exp(half), TimeAtom::cos(p.scalar(2)),
                                    TimeAtom::sin(p.scalar(2)),
                                    TimeAtom::cap_exp(Scalar::exact(Rational(1, 3)).to_mode(p.mode()))};
        const int K = 16;
        for (const auto& atom : atoms) {
            auto closed = w_inverse_expansion(natural_atom(atom, p, K + 2), K, p);
            auto series = w_inverse_expansion(natural_series(expand_atom(atom, K + 1, p)), K, p);
            for (int n = 0; n < K; ++n)
                ok = ok && closed[static_cast<std::size_t>(n)] == series[static_cast<std::size_t>(n)];
        }
        record(out, "transform.atom_consistency", ok);
    }

    {
        bool ok = true;
        for (int rep = 0; rep < 10 && ok; ++rep) {
            auto f = detail::random_poly(8, p, rng);
            auto g = detail::random_poly(8, p, rng);
            Scalar c1 = detail::random_rational(rng).to_mode(p.mode());
            Scalar c2 = detail::random_rational(rng).to_mode(p.mode());
            auto lhs = natural_series(series_add(series_scale(c1, f), series_scale(c2, g)));
            auto rhs = c1 * natural_series(f) + c2 * natural_series(g);
            ok = lhs == rhs;
        }
        record(out, "transform.linearity", ok);
    }

    {
        bool ok = true;
        for (int rep = 0; rep < 20 && ok; ++rep) {
            auto f = detail::random_poly(6, p, rng);
            auto R = natural_series(f);
            AlphaSeries d = f;
            std::vector<Scalar> init;
            for (int n = 1; n <= 3 && ok; ++n) {
                init.push_back(series_eval_at_xalpha(d, p.scalar(0)));
                d = dqa_series(d);
                ok = transform_of_derivative(R, n, init, p) == natural_series(d);
            }
        }
        record(out, "transform.derivative_theorem", ok);
    }

    {
        auto R = natural_series(AlphaSeries::constant(p, one, 0));
        auto D1 = dqa_in_s(R, p);
        RationalFn want1 = (-q_number_mult(1, p) * p.big_q_pow(-1)) *
                           RationalFn(Polynomial::constant(one), Polynomial::monomial(one, 2));
        auto D2 = dqa_in_s(D1, p);
        RationalFn want2 = (q_number_mult(-1, p) * q_number_mult(-2, p)) *
                           RationalFn(Polynomial::constant(one), Polynomial::monomial(one, 3));
        bool const_zero = dqa_in_s(TransformExpr(1, RationalFn::constant(one)), p).phi().is_zero();
        record(out, "transform.s_derivative",
               D1.homogeneity() == 2 && D1.phi() == want1 && D2.homogeneity() == 3 &&
                   D2.phi() == want2 && const_zero);
    }

    {
        bool ok = true;
        std::string why;
        std::vector<AlphaSeries> polys{AlphaSeries::constant(p, one, 0),
                                       AlphaSeries::monomial(p, 1),
                                       AlphaSeries::monomial(p, 2)};
        for (const auto& f : polys)
            for (int n = 0; n <= 3 && ok; ++n) {
                auto R = natural_series(f);
                auto direct = natural_series(series_mul_monomial(f, n));
                auto via_s = tpower_transform_via_s(R, n, p);
                auto via_u = tpower_transform_via_u(R, n, p);
                auto via_b = bnk_form(R, n, p);
                ok = direct == via_s && direct == via_u && direct == via_b;
                if (!ok) why = "polynomial case n=" + std::to_string(n);
            }
        Scalar half = Scalar::exact(Rational(1, 2)).to_mode(p.mode());
        const int K = 12;
        for (int n = 0; n <= 3 && ok; ++n) {
            auto R = natural_atom(TimeAtom::exp(half), p);
            auto via_s = tpower_transform_via_s(R, n, p);
            auto via_u = tpower_transform_via_u(R, n, p);
            auto via_b = bnk_form(R, n, p);
            ok = via_s == via_u && via_s == via_b;
            if (ok) {
                auto closed = w_inverse_expansion(via_s, K, p);
                auto series = w_inverse_expansion(
                    natural_series(series_mul_monomial(expand_atom(TimeAtom::exp(half), K + 1, p), n)),
                    K, p);
                for (int i = 0; i < K; ++i)
                    ok = ok && closed[static_cast<std::size_t>(i)] == series[static_cast<std::size_t>(i)];
            }
            if (!ok) why = "exponential case n=" + std::to_string(n);
        }
        record(out, "transform.tpower_three_way", ok, why);
    }

    {
        bool ok = true;
        for (int m = 0; m <= 4 && ok; ++m)
            for (int n = 0; n <= 4 && ok; ++n) {
                auto R = natural_series(AlphaSeries::monomial(p, m));
                ok = bnk_form(R, n, p) == natural_series(AlphaSeries::monomial(p, m + n));
            }
        record(out, "transform.bnk_on_monomials", ok);
    }

    {
        bool ok = true;
        std::string why;
        double alpha = p.alpha_value();
        struct Point { double u, s; };
        std::vector<Point> points{{1, 2}, {1, 3}, {2, 5}};
        for (const auto& pt : points) {
            double ua = std::pow(pt.u, alpha), sa = std::pow(pt.s, alpha);
            std::vector<std::pair<std::function<double(double)>, double>> cases;
            cases.emplace_back([](double) { return 1.0; }, 1.0 / sa);
            cases.emplace_back([&](double t) { return std::pow(t, alpha); },
                               q_number_mult(1, p).value() * ua / (sa * sa));
            cases.emplace_back([&](double t) { return std::pow(t, 2 * alpha); },
                               q_alpha_factorial(2, p).value() * ua * ua / (sa * sa * sa));
            for (auto& [f, want] : cases) {
                auto r = natural_numeric(f, pt.u, pt.s, p, quad_terms);
                if (!r.converged || !detail::rel_close(r.value, want, 1e-5)) {
                    ok = false;
                    why = detail::mismatch(r.value, want);
                }
            }
        }
        // exponential input inside the convergence region beta u^alpha / s^alpha <= 1/2
        struct ExpCase { double beta, u, s; };
        for (const auto& ec : {ExpCase{0.25, 1, 2}, ExpCase{0.5, 2, 5}}) {
            double ua = std::pow(ec.u, alpha), sa = std::pow(ec.s, alpha);
            auto e64 = make_exp_series(Scalar::floating(ec.beta), 64,
                                       QParams::floating(p.q().value(), alpha));
            auto f = [&](double t) { return series_eval(e64, t).value; };
            double want = 1.0 / (sa - ec.beta * ua);
            auto r = natural_numeric(f, ec.u, ec.s, p, quad_terms);
            if (!r.converged || !detail::rel_close(r.value, want, 1e-4)) {
                ok = false;
                why = detail::mismatch(r.value, want);
            }
        }
        record(out, "transform.numeric_table", ok, why);
    }
    return out;
}

namespace detail {

inline OdeProblem example_one(const QParams& p) {
    OdeProblem prob;
    prob.coeffs = {p.scalar(1), p.scalar(1), p.scalar(-6), p.scalar(0)};
    prob.rhs = TimeExpr::zero();
    prob.init = {p.scalar(1), p.scalar(0), p.scalar(5)};
    return prob;
}

inline OdeProblem example_two(const QParams& p) {
    OdeProblem prob;
    prob.coeffs = {p.scalar(1), p.scalar(3)};
    prob.rhs = TimeExpr::single(p.scalar(13), TimeAtom::sin(p.scalar(2)));
    prob.init = {p.scalar(6)};
    return prob;
}

inline bool has_term(const TimeExpr& e, const TimeAtom& atom, const Scalar& coef) {
    for (const auto& t : e.terms())
        if (t.atom == atom && t.coef == coef) return true;
    return false;
}

} // namespace detail

/// End-to-end solver checks on the two worked problems plus the
/// classical limit of the first one.
inline std::vector<CheckResult> checks_examples(const QParams& p) {
    using detail::record;
    std::vector<CheckResult> out;

    {
        auto sol = solve_ivp(detail::example_one(p), p);
        bool ok = sol.terms().size() == 3 &&
                  detail::has_term(sol, TimeAtom::power(0),
                                   Scalar::exact(Rational(1, 6)).to_mode(p.mode())) &&
                  detail::has_term(sol, TimeAtom::exp(p.scalar(-3)),
                                   Scalar::exact(Rational(1, 3)).to_mode(p.mode())) &&
                  detail::has_term(sol, TimeAtom::exp(p.scalar(2)),
                                   Scalar::exact(Rational(1, 2)).to_mode(p.mode()));
        record(out, "examples.third_order", ok);
        record(out, "examples.third_order_roundtrip",
               invert(natural_time_expr(sol, p), p) == sol);
    }

    {
        auto sol = solve_ivp(detail::example_two(p), p);
        bool ok = sol.terms().size() == 3 &&
                  detail::has_term(sol, TimeAtom::exp(p.scalar(-3)), p.scalar(8)) &&
                  detail::has_term(sol, TimeAtom::cos(p.scalar(2)), p.scalar(-2)) &&
                  detail::has_term(sol, TimeAtom::sin(p.scalar(2)), p.scalar(3));
        record(out, "examples.first_order", ok);
    }

    {
        QParams pc = QParams::exact(Rational(999, 1000), Rational(999, 1000), Rational(1));
        auto sol = solve_ivp(detail::example_one(pc), pc);
        auto f = expand(sol, 6, pc);
        bool ok = true;
        std::string why;
        double factorial = 1.0;
        for (int n = 0; n <= 6; ++n) {
            if (n > 0) factorial *= n;
            double got = f.coeff(n).value() * factorial;
            double classical = n == 0 ? 1.0
                                      : (std::pow(-3.0, n) / 3.0 + std::pow(2.0, n) / 2.0);
            if (std::fabs(classical) < 1e-12) {
                if (std::fabs(got) > 1e-12) ok = false;
            } else if (std::fabs(got - classical) > 0.02 * std::fabs(classical)) {
                ok = false;
                why = "n=" + std::to_string(n) + ": " + detail::mismatch(got, classical);
            }
        }
        record(out, "examples.classical_limit", ok, why);
    }
    return out;
}

inline std::vector<std::string> check_suite_names() {
    return {"gamma", "series", "taylor", "transforms", "examples"};
}

inline std::vector<CheckResult> run_suite(const std::string& name, const QParams& p,
                                          int quad_terms = 200) {
    std::vector<CheckResult> out;
    if (name == "gamma") out = checks_gamma(p, quad_terms);
    else if (name == "series") out = checks_series(p);
    else if (name == "taylor") out = checks_taylor(p);
    else if (name == "transforms") out = checks_transforms(p, quad_terms);
    else if (name == "examples") out = checks_examples(p);
    else throw domain_error("unknown verification suite '" + name + "'");
    std::sort(out.begin(), out.end(),
              [](const CheckResult& a, const CheckResult& b) { return a.name < b.name; });
    return out;
}

} // namespace qnat
