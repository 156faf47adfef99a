#include <catch2/catch_amalgamated.hpp>

#include <qnat/qcalculus.hpp>
#include <qnat/series.hpp>
#include <qnat/time_expr.hpp>

#include <cmath>
#include <complex>
#include <random>

using namespace qnat;

namespace {

QParams desk() { return QParams::exact(Rational(1, 4), Rational(1, 2), Rational(1, 2)); }

Scalar rat(long long n, long long d = 1) { return Scalar::exact(Rational(n, d)); }

Scalar random_rational(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return Scalar::exact(Rational(num(rng), den(rng)));
}

AlphaSeries random_poly(int order, const QParams& p, std::mt19937& rng) {
    std::vector<Scalar> c(static_cast<std::size_t>(order) + 1);
    for (auto& v : c) v = random_rational(rng);
    return AlphaSeries(p, std::move(c));
}

} // namespace

TEST_CASE("deformed exponential series") {
    auto p = desk();
    SECTION("beta = 0 collapses to the constant 1") {
        auto e = make_exp_series(rat(0), 5, p);
        CHECK(e.coeff(0) == rat(1));
        for (int n = 1; n <= 5; ++n) CHECK(e.coeff(n) == rat(0));
    }
    SECTION("coefficient values") {
        auto e = make_exp_series(rat(1), 4, p);
        CHECK(e.coeff(2) == rat(3, 2)); // 1/([alpha][2 alpha])
    }
    SECTION("eigenfunction of the series derivative") {
        Scalar beta = rat(-3);
        auto e = make_exp_series(beta, 12, p);
        auto d = dqa_series(e);
        for (int n = 0; n <= 11; ++n) CHECK(d.coeff(n) == beta * e.coeff(n));
    }
}

TEST_CASE("second deformed exponential series") {
    auto p = desk();
    Scalar beta = rat(2, 3);
    auto e = make_cap_exp_series(beta, 10, p);
    CHECK(e.coeff(0) == rat(1));
    CHECK(e.coeff(1) == beta / q_number_mult(1, p));
    SECTION("derivative scales coefficient n by beta Q^n") {
        auto d = dqa_series(e);
        for (int n = 0; n <= 9; ++n) CHECK(d.coeff(n) == beta * p.big_q_pow(n) * e.coeff(n));
    }
}

TEST_CASE("deformed trigonometric series") {
    auto p = desk();
    auto c = make_cos_series(rat(1), 12, p);
    auto s = make_sin_series(rat(1), 12, p);
    CHECK(series_eval(c, 0.0).value == 1.0);
    CHECK(series_eval(s, 0.0).value == 0.0);
    CHECK(c.coeff(1) == rat(0));
    CHECK(s.coeff(2) == rat(0));

    SECTION("derivative pair") {
        auto dc = dqa_series(c);
        auto ds = dqa_series(s);
        for (int n = 0; n <= 11; ++n) {
            CHECK(dc.coeff(n) == -s.coeff(n));
            CHECK(ds.coeff(n) == c.coeff(n));
        }
    }

    SECTION("cos + i sin matches the exponential at imaginary rate") {
        // desk-scale check with complex doubles: coefficient n of the
        // exponential with beta = i is i^n / [n*alpha]!
        std::complex<double> i(0.0, 1.0);
        std::complex<double> ipow(1.0, 0.0);
        for (int n = 0; n <= 8; ++n) {
            std::complex<double> expc = ipow / q_alpha_factorial(n, p).value();
            double want_re = c.coeff(n).value();
            double want_im = s.coeff(n).value();
            CHECK(expc.real() == Catch::Approx(want_re).margin(1e-14));
            CHECK(expc.imag() == Catch::Approx(want_im).margin(1e-14));
            ipow *= i;
        }
    }
}

TEST_CASE("series arithmetic") {
    auto p = desk();
    auto f = make_exp_series(rat(1), 8, p);
    SECTION("additive identity") {
        CHECK(series_add(f, AlphaSeries::zero(p, 8)) == f);
    }
    SECTION("basic product") {
        auto a = AlphaSeries(p, {rat(1), rat(1), rat(0)});
        auto b = AlphaSeries(p, {rat(1), rat(-1), rat(0)});
        CHECK(series_mul(a, b) == AlphaSeries(p, {rat(1), rat(0), rat(-1)}));
    }
    SECTION("product truncates to the smaller order") {
        auto g = make_cos_series(rat(1), 3, p);
        CHECK(series_mul(f, g).order() == 3);
    }
    SECTION("parameter mismatch is rejected") {
        auto p2 = QParams::exact(Rational(1, 9), Rational(1, 3), Rational(1, 2));
        CHECK_THROWS_AS(series_add(f, AlphaSeries::zero(p2, 8)), domain_error);
    }
    SECTION("multiplication commutes with evaluation") {
        // rates chosen so the truncated cross terms sit far below the bound
        auto a = make_exp_series(rat(1, 2), 20, p);
        auto b = make_cos_series(rat(1, 2), 20, p);
        double t = 0.3;
        double prod = series_eval(series_mul(a, b), t).value;
        double sep = series_eval(a, t).value * series_eval(b, t).value;
        CHECK(std::fabs(prod - sep) <= 1e-10);
    }
    SECTION("monomial shift") {
        auto g = series_mul_monomial(f, 2);
        CHECK(g.order() == 10);
        CHECK(g.coeff(0) == rat(0));
        CHECK(g.coeff(2) == f.coeff(0));
    }
}

TEST_CASE("Leibniz rule on coefficients") {
    auto p = desk();
    std::mt19937 rng(9001);
    for (int rep = 0; rep < 12; ++rep) {
        auto f = random_poly(8, p, rng);
        auto g = random_poly(8, p, rng);
        auto lhs = dqa_series(series_mul(f, g));
        auto rhs = series_add(series_mul(shift_q(f), dqa_series(g)),
                              series_mul(dqa_series(f), g));
        for (int n = 0; n <= 7; ++n) {
            INFO("rep=" << rep << " n=" << n);
            CHECK(lhs.coeff(n) == rhs.coeff(n));
        }
    }
}

TEST_CASE("series evaluation") {
    auto p = desk();
    SECTION("constant series") {
        auto f = AlphaSeries::constant(p, rat(7, 3), 4);
        CHECK(series_eval(f, 1.7).value == Catch::Approx(7.0 / 3.0));
    }
    SECTION("convergent point agrees with the product-form reciprocal") {
        // (1-q) t^alpha = 1/2; the last of 32 terms is ~8e-10, so ask for
        // the tolerance the identity is checked at
        double t = std::pow(0.5 / 0.75, 2.0);
        auto e = make_exp_series(rat(1), 32, p);
        auto r = series_eval(e, t, 1e-8);
        CHECK(r.converged);
        CHECK(std::fabs(r.value * inv_e_kernel(t, p) - 1.0) <= 1e-8);
    }
    SECTION("divergence is flagged") {
        double t = std::pow(1.2 / 0.75, 2.0); // (1-q) t^alpha = 1.2
        auto e = make_exp_series(rat(1), 32, p);
        CHECK_FALSE(series_eval(e, t).converged);
    }
    SECTION("negative t is rejected") {
        CHECK_THROWS_AS(series_eval(AlphaSeries::zero(p, 2), -1.0), domain_error);
    }
}

TEST_CASE("reciprocal exponential kernel") {
    auto p = desk();
    CHECK(inv_e_kernel(0.0, p) == 1.0);

    SECTION("mutual inverse against the series") {
        auto e = make_exp_series(rat(1), 48, p);
        for (int i = 1; i <= 20; ++i) {
            double z = 0.5 * i / 20.0;
            double x = std::pow(z / 0.75, 2.0);
            CHECK(std::fabs(inv_e_kernel(x, p) * series_eval(e, x).value - 1.0) <= 1e-8);
        }
    }
    SECTION("positive and bounded by one before the first zero") {
        double x0 = std::pow(1.0 / 0.75, 2.0);
        for (int i = 0; i < 12; ++i) {
            double v = inv_e_kernel(x0 * i / 12.0, p);
            CHECK(v > 0.0);
            CHECK(v <= 1.0);
        }
    }
    SECTION("vanishes exactly on the zero set") {
        double x0 = std::pow(1.0 / 0.75, 2.0); // (1-q) x0^alpha = 1
        CHECK(inv_e_kernel(x0, p) == 0.0);
        CHECK(inv_e_kernel(x0 / 0.25, p) == 0.0); // next grid zero
    }
    SECTION("derivative identity under the finite q-difference") {
        double a = 0.9, beta = std::pow(a, 0.5);
        for (double x : {0.3, 0.7, 1.1}) {
            double got = dqa_pointwise([&](double y) { return inv_e_kernel(a * y, p); }, x, p);
            double want = -beta * inv_e_kernel(0.25 * a * x, p);
            CHECK(got == Catch::Approx(want).epsilon(1e-8));
        }
    }
    SECTION("explicit factor count must reach the cutoff") {
        CHECK_THROWS_AS(inv_e_kernel(2.0, p, 3), convergence_error);
        CHECK(inv_e_kernel(2.0, p, 200) == Catch::Approx(inv_e_kernel(2.0, p)));
    }
}

TEST_CASE("time expressions") {
    auto p = desk();
    SECTION("terms merge and zeros vanish") {
        TimeExpr e;
        e.add_term(rat(2), TimeAtom::exp(rat(3)));
        e.add_term(rat(1), TimeAtom::exp(rat(3)));
        e.add_term(rat(5), TimeAtom::power(1));
        e.add_term(rat(-5), TimeAtom::power(1));
        REQUIRE(e.terms().size() == 1);
        CHECK(e.terms()[0].coef == rat(3));
    }
    SECTION("expansion agrees with atom-wise evaluation") {
        TimeExpr e;
        e.add_term(rat(2), TimeAtom::exp(rat(1, 2)));
        e.add_term(rat(-3), TimeAtom::sin(rat(2)));
        e.add_term(rat(1), TimeAtom::power(2));
        e.add_term(rat(1, 4), TimeAtom::cap_exp(rat(1)));
        double via_series = series_eval(expand(e, 32, p), 0.4).value;
        double via_atoms = eval_time_expr(e, 0.4, p).value;
        CHECK(std::fabs(via_series - via_atoms) <= 1e-10);
    }
    SECTION("float terms force a float expansion") {
        TimeExpr e;
        e.add_term(rat(1), TimeAtom::cos(Scalar::floating(std::sqrt(2.0))));
        auto s = expand(e, 8, p);
        CHECK(s.params().mode() == Mode::floating);
    }
    SECTION("canonical ordering is by kind then rate") {
        TimeExpr e;
        e.add_term(rat(1), TimeAtom::sin(rat(2)));
        e.add_term(rat(1), TimeAtom::exp(rat(5)));
        e.add_term(rat(1), TimeAtom::exp(rat(-3)));
        e.add_term(rat(1), TimeAtom::power(0));
        REQUIRE(e.terms().size() == 4);
        CHECK(e.terms()[0].atom.kind == AtomKind::power);
        CHECK(e.terms()[1].atom == TimeAtom::exp(rat(-3)));
        CHECK(e.terms()[2].atom == TimeAtom::exp(rat(5)));
        CHECK(e.terms()[3].atom.kind == AtomKind::sin);
    }
}
