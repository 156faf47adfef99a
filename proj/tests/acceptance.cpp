// Acceptance suite: every criterion prints one PASS/FAIL line and the
// binary fails if any criterion does. Tolerances are pinned in code.

#include <catch2/catch_amalgamated.hpp>

#include <qnat/qnat.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

using namespace qnat;

namespace {

QParams desk() { return QParams::exact(Rational(1, 4), Rational(1, 2), Rational(1, 2)); }

Scalar rat(long long n, long long d = 1) { return Scalar::exact(Rational(n, d)); }

bool report(int number, const char* description, bool ok) {
    std::printf("[%s] criterion %2d: %s\n", ok ? "PASS" : "FAIL", number, description);
    std::fflush(stdout);
    return ok;
}

AlphaSeries random_poly(int order, const QParams& p, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = Scalar::exact(Rational(num(rng), den(rng)));
    return AlphaSeries(p, std::move(c));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool has_term(const TimeExpr& e, const TimeAtom& atom, const Scalar& coef) {
    for (const auto& t : e.terms())
        if (t.atom == atom && t.coef == coef) return true;
    return false;
}

} // namespace

TEST_CASE("criterion 1: third-order problem end to end") {
    auto p = desk();
    auto t0 = std::chrono::steady_clock::now();
    OdeProblem prob;
    prob.coeffs = {rat(1), rat(1), rat(-6), rat(0)};
    prob.rhs = TimeExpr::zero();
    prob.init = {rat(1), rat(0), rat(5)};
    auto sol = solve_ivp(prob, p);
    double elapsed = seconds_since(t0);
    bool ok = sol.terms().size() == 3 && has_term(sol, TimeAtom::power(0), rat(1, 6)) &&
              has_term(sol, TimeAtom::exp(rat(-3)), rat(1, 3)) &&
              has_term(sol, TimeAtom::exp(rat(2)), rat(1, 2)) && elapsed < 1.0;
    REQUIRE(report(1, "exact coefficients (1/6, 1/3, 1/2) on (1, exp(-3), exp(2)), < 1 s", ok));
}

TEST_CASE("criterion 2: first-order forced problem end to end") {
    auto p = desk();
    OdeProblem prob;
    prob.coeffs = {rat(1), rat(3)};
    prob.rhs = TimeExpr::single(rat(13), TimeAtom::sin(rat(2)));
    prob.init = {rat(6)};
    auto sol = solve_ivp(prob, p);
    bool ok = sol.terms().size() == 3 && has_term(sol, TimeAtom::exp(rat(-3)), rat(8)) &&
              has_term(sol, TimeAtom::cos(rat(2)), rat(-2)) &&
              has_term(sol, TimeAtom::sin(rat(2)), rat(3));
    REQUIRE(report(2, "exact coefficients (8, -2, 3) on (exp(-3), cos(2), sin(2))", ok));
}

TEST_CASE("criterion 3: Gamma identity and integral oracle") {
    auto p = desk();
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int n = 1; n <= 10; ++n)
        ok = ok && gamma_qa(n + 1, p) == q_alpha_factorial(n, p);
    for (int n = 1; n <= 5; ++n) {
        auto r = gamma_numeric(n, p, 200);
        double want = gamma_qa(n, p).value();
        ok = ok && r.converged && std::fabs(r.value - want) <= 1e-6 * std::fabs(want);
    }
    ok = ok && seconds_since(t0) < 1.0;
    REQUIRE(report(3, "Gamma(n+1) = [n alpha]! exactly (n <= 10), oracle within 1e-6 (n <= 5), < 1 s", ok));
}

TEST_CASE("criterion 4: Beta/Gamma relation against the integral") {
    auto p = desk();
    bool ok = true;
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n) {
            auto r = beta_numeric(m, n, p, 200);
            double want = beta_qa(m, n, p).value();
            ok = ok && r.converged && std::fabs(r.value - want) <= 1e-8 * std::fabs(want);
        }
    REQUIRE(report(4, "beta closed form matches the defining integral within 1e-8 (m, n <= 5)", ok));
}

TEST_CASE("criterion 5: numeric transform table") {
    auto p = desk();
    double alpha = 0.5;
    bool ok = true;
    struct Point { double u, s; };
    for (const auto& pt : {Point{1, 2}, Point{1, 3}, Point{2, 5}}) {
        double ua = std::pow(pt.u, alpha), sa = std::pow(pt.s, alpha);
        struct Case { std::function<double(double)> f; double want; };
        std::vector<Case> cases;
        cases.push_back({[](double) { return 1.0; }, 1.0 / sa});
        cases.push_back({[&](double t) { return std::pow(t, alpha); },
                         q_number_mult(1, p).value() * ua / (sa * sa)});
        cases.push_back({[&](double t) { return std::pow(t, 2 * alpha); },
                         q_alpha_factorial(2, p).value() * ua * ua / (sa * sa * sa)});
        for (const auto& c : cases) {
            auto r = natural_numeric(c.f, pt.u, pt.s, p, 200);
            ok = ok && r.converged && std::fabs(r.value - c.want) <= 1e-5 * std::fabs(c.want);
        }
    }
    struct ExpCase { double beta, u, s; };
    for (const auto& ec : {ExpCase{0.25, 1, 2}, ExpCase{0.5, 1, 3}, ExpCase{0.5, 2, 5}}) {
        double ua = std::pow(ec.u, alpha), sa = std::pow(ec.s, alpha);
        REQUIRE(ec.beta * ua / sa <= 0.5); // stay inside the convergence region
        auto e64 = make_exp_series(Scalar::floating(ec.beta), 64,
                                   QParams::floating(0.25, alpha));
        auto f = [&](double t) { return series_eval(e64, t).value; };
        double want = 1.0 / (sa - ec.beta * ua);
        auto r = natural_numeric(f, ec.u, ec.s, p, 200);
        ok = ok && r.converged && std::fabs(r.value - want) <= 1e-4 * std::fabs(want);
    }
    REQUIRE(report(5, "oracle matches closed transforms: powers within 1e-5, exponential within 1e-4", ok));
}

TEST_CASE("criterion 6: derivative theorem on random polynomials") {
    auto p = desk();
    std::mt19937 rng(20240601);
    bool ok = true;
    for (int rep = 0; rep < 20 && ok; ++rep) {
        auto f = random_poly(6, p, rng);
        auto R = natural_series(f);
        AlphaSeries d = f;
        std::vector<Scalar> init;
        for (int n = 1; n <= 3 && ok; ++n) {
            init.push_back(series_eval_at_xalpha(d, rat(0)));
            d = dqa_series(d);
            ok = transform_of_derivative(R, n, init, p) == natural_series(d);
        }
    }
    REQUIRE(report(6, "transform of the n-th derivative is exact for 20 random inputs, n <= 3", ok));
}

TEST_CASE("criterion 7: three-way t-power agreement") {
    auto p = desk();
    bool ok = true;
    // polynomial inputs: all four routes exactly equal
    std::vector<AlphaSeries> polys{AlphaSeries::constant(p, rat(1), 0),
                                   AlphaSeries::monomial(p, 1)};
    for (const auto& f : polys)
        for (int n = 0; n <= 3 && ok; ++n) {
            auto R = natural_series(f);
            auto direct = natural_series(series_mul_monomial(f, n));
            ok = tpower_transform_via_s(R, n, p) == direct &&
                 tpower_transform_via_u(R, n, p) == direct && bnk_form(R, n, p) == direct;
        }
    // exponential input: closed routes exactly equal, series route matches
    // on the large-w expansion
    for (int n = 0; n <= 3 && ok; ++n) {
        auto R = natural_atom(TimeAtom::exp(rat(1, 2)), p);
        auto via_s = tpower_transform_via_s(R, n, p);
        ok = via_s == tpower_transform_via_u(R, n, p) && via_s == bnk_form(R, n, p);
        if (ok) {
            const int K = 12;
            auto closed = w_inverse_expansion(via_s, K, p);
            auto series = w_inverse_expansion(
                natural_series(series_mul_monomial(
                    expand_atom(TimeAtom::exp(rat(1, 2)), K + 1, p), n)),
                K, p);
            for (int i = 0; i < K; ++i)
                ok = ok && closed[static_cast<std::size_t>(i)] == series[static_cast<std::size_t>(i)];
        }
    }
    REQUIRE(report(7, "direct, s-route, u-route, and table route agree exactly (n <= 3)", ok));
}

TEST_CASE("criterion 8: Taylor round-trip and shifted-basis identities") {
    auto p = desk();
    std::mt19937 rng(808);
    bool ok = true;
    std::vector<Scalar> centers{rat(0), rat(1), rat(-1), rat(1, 2)};
    for (int rep = 0; rep < 20 && ok; ++rep) {
        auto f = random_poly(6, p, rng);
        for (const auto& a : centers) {
            auto e = taylor_qa(f, a);
            ok = ok && taylor_reconstruct(e, p) == f;
        }
    }
    // forward derivative identity
    for (const auto& a : centers)
        for (int n = 1; n <= 6 && ok; ++n) {
            auto lhs = dqa_series(shifted_basis_expand(a, n, p));
            auto rhs = series_scale(q_number_mult(n, p), shifted_basis_expand(a, n - 1, p));
            for (int i = 0; i <= n - 1; ++i) ok = ok && lhs.coeff(i) == rhs.coeff(i);
        }
    // reflected derivative identity
    auto reflected = [&](const Scalar& a, int n, int shift) {
        std::vector<Scalar> c{rat(1)};
        for (int j = 0; j < n; ++j) {
            Scalar qfac = p.big_q_pow(j + shift);
            std::vector<Scalar> next(c.size() + 1, rat(0));
            for (std::size_t i = 0; i < c.size(); ++i) {
                next[i] += a * c[i];
                next[i + 1] -= qfac * c[i];
            }
            c = std::move(next);
        }
        return AlphaSeries(p, std::move(c));
    };
    for (const auto& a : centers)
        for (int n = 1; n <= 6 && ok; ++n) {
            auto lhs = dqa_series(reflected(a, n, 0));
            auto rhs = series_scale(-q_number_mult(n, p), reflected(a, n - 1, 1));
            for (int i = 0; i <= n - 1; ++i) ok = ok && lhs.coeff(i) == rhs.coeff(i);
        }
    REQUIRE(report(8, "20 random round-trips exact at 4 centers; basis derivative identities exact (n <= 6)", ok));
}

TEST_CASE("criterion 9: Leibniz and integration by parts") {
    auto p = desk();
    std::mt19937 rng(909);
    bool ok = true;
    for (int rep = 0; rep < 20 && ok; ++rep) {
        auto f = random_poly(6, p, rng);
        auto g = random_poly(6, p, rng);
        auto lhs = dqa_series(series_mul(f, g));
        auto rhs = series_add(series_mul(shift_q(f), dqa_series(g)),
                              series_mul(dqa_series(f), g));
        for (int n = 0; n <= 5; ++n) ok = ok && lhs.coeff(n) == rhs.coeff(n);
        auto il = iqa_series(series_mul(dqa_series(f), g));
        auto ir = series_sub(series_mul(f, g),
                             iqa_series(series_mul(shift_q(f), dqa_series(g))));
        for (int n = 1; n <= 6; ++n) ok = ok && il.coeff(n) == ir.coeff(n);
    }
    REQUIRE(report(9, "product rule and integration by parts exact on 20 random pairs", ok));
}

TEST_CASE("criterion 10: classical limit of the third-order solution") {
    auto pc = QParams::exact(Rational(999, 1000), Rational(999, 1000), Rational(1));
    OdeProblem prob;
    prob.coeffs = {rat(1), rat(1), rat(-6), rat(0)};
    prob.rhs = TimeExpr::zero();
    prob.init = {rat(1), rat(0), rat(5)};
    auto sol = solve_ivp(prob, pc);
    auto f = expand(sol, 6, pc);
    bool ok = true;
    double factorial = 1.0;
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) factorial *= n;
        double got = f.coeff(n).value() * factorial;
        double classical = n == 0 ? 1.0 : std::pow(-3.0, n) / 3.0 + std::pow(2.0, n) / 2.0;
        if (std::fabs(classical) < 1e-12)
            ok = ok && std::fabs(got) < 1e-12;
        else
            ok = ok && std::fabs(got - classical) <= 0.02 * std::fabs(classical);
    }
    REQUIRE(report(10, "series coefficients approach the classical solution within 2% (n <= 6)", ok));
}

TEST_CASE("criterion 11: kernel sanity") {
    auto p = desk();
    auto e = make_exp_series(rat(1), 48, p);
    bool ok = true;
    for (int i = 1; i <= 20; ++i) {
        double z = 0.5 * i / 20.0; // (1-q) x^alpha
        double x = std::pow(z / 0.75, 2.0);
        double prod = inv_e_kernel(x, p) * series_eval(e, x).value;
        ok = ok && std::fabs(prod - 1.0) <= 1e-8;
    }
    REQUIRE(report(11, "product kernel times exponential series is 1 within 1e-8 on 20 points", ok));
}
