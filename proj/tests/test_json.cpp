#include <catch2/catch_amalgamated.hpp>

#include <qnat/json_io.hpp>

using namespace qnat;

namespace {

QParams desk() { return QParams::exact(Rational(1, 4), Rational(1, 2), Rational(1, 2)); }

Scalar rat(long long n, long long d = 1) { return Scalar::exact(Rational(n, d)); }

} // namespace

TEST_CASE("scalar serialization") {
    CHECK(scalar_to_json(rat(2, 3)) == json("2/3"));
    CHECK(scalar_to_json(rat(-5)) == json("-5"));
    CHECK(scalar_to_json(Scalar::floating(0.25)) == json(0.25));

    CHECK(scalar_from_json(json("2/3"), Mode::exact) == rat(2, 3));
    CHECK(scalar_from_json(json(7), Mode::exact) == rat(7));
    CHECK(scalar_from_json(json(0.5), Mode::floating) == Scalar::floating(0.5));

    CHECK_THROWS_AS(scalar_from_json(json(0.5), Mode::exact), parse_error);
    CHECK_THROWS_AS(scalar_from_json(json("1/x"), Mode::exact), parse_error);
    CHECK_THROWS_AS(scalar_from_json(json::array(), Mode::exact), parse_error);
}

TEST_CASE("params serialization") {
    auto p = desk();
    auto j = params_to_json(p);
    CHECK(j.at("q") == "1/4");
    auto back = params_from_json(j);
    CHECK(back == p);

    auto pf = QParams::floating(0.3, 0.7);
    CHECK(params_from_json(params_to_json(pf)) == pf);

    CHECK_THROWS_AS(params_from_json(json{{"mode", "exact"}, {"q", "1/4"}}), parse_error);
    CHECK_THROWS_AS(params_from_json(json{{"mode", "weird"}}), parse_error);
}

TEST_CASE("series serialization") {
    auto p = desk();
    auto f = make_exp_series(rat(1, 2), 6, p);
    auto j = alpha_series_to_json(f);
    CHECK(j.at("alpha_series").at("order") == 6);
    CHECK(alpha_series_from_json(j, p) == f);

    json bad = {{"alpha_series", {{"coeffs", json::array({"1", "2"})}, {"order", 5}}}};
    CHECK_THROWS_AS(alpha_series_from_json(bad, p), parse_error);
}

TEST_CASE("time expression serialization") {
    auto p = desk();
    TimeExpr e;
    e.add_term(rat(1, 6), TimeAtom::power(0));
    e.add_term(rat(1, 3), TimeAtom::exp(rat(-3)));
    e.add_term(rat(-2), TimeAtom::cos(rat(2)));
    e.add_term(rat(3), TimeAtom::sin(rat(2)));
    e.add_term(rat(1, 7), TimeAtom::cap_exp(rat(1, 2)));

    auto j = time_expr_to_json(e);
    CHECK(time_expr_from_json(j, Mode::exact) == e);

    SECTION("canonical output is stable under a round trip") {
        auto again = time_expr_to_json(time_expr_from_json(j, Mode::exact));
        CHECK(j.dump() == again.dump());
    }
    SECTION("inexact flag travels") {
        e.mark_inexact();
        auto jj = time_expr_to_json(e);
        CHECK(jj.at("inexact") == true);
        CHECK(time_expr_from_json(jj, Mode::exact).inexact());
    }
    SECTION("bad atoms are rejected") {
        json missing_atom = json::parse(R"({"time_expr": [{"coef": "1"}]})");
        CHECK_THROWS_AS(time_expr_from_json(missing_atom, Mode::exact), parse_error);
        json unknown = json::parse(
            R"({"time_expr": [{"coef": "1", "atom": {"kind": "tanh", "beta": "1"}}]})");
        CHECK_THROWS_AS(time_expr_from_json(unknown, Mode::exact), parse_error);
    }
}

TEST_CASE("transform serialization") {
    auto p = desk();
    TimeExpr e;
    e.add_term(rat(2), TimeAtom::exp(rat(1, 2)));
    e.add_term(rat(1), TimeAtom::power(1));
    auto R = natural_time_expr(e, p);
    auto j = transform_to_json(R);
    CHECK(transform_from_json(j, Mode::exact) == R);

    SECTION("tail round trip") {
        auto T = natural_atom(TimeAtom::cap_exp(rat(1, 3)), p, 5);
        auto jj = transform_to_json(T);
        REQUIRE(jj.contains("tail"));
        CHECK(transform_from_json(jj, Mode::exact) == T);
    }
    SECTION("the constant transform renders as 1/w") {
        auto C = natural_series(AlphaSeries::constant(p, rat(1), 0));
        auto jj = transform_to_json(C);
        CHECK(jj.at("m") == 1);
        CHECK(jj.at("num") == json::array({"1"}));
        CHECK(jj.at("den") == json::array({"0", "1"}));
    }
    SECTION("zero denominator is rejected") {
        json bad = {{"m", 1}, {"num", json::array({"1"})}, {"den", json::array({"0"})}};
        CHECK_THROWS_AS(transform_from_json(bad, Mode::exact), parse_error);
    }
}

TEST_CASE("expansion serialization") {
    auto p = desk();
    auto e = taylor_qa(AlphaSeries::monomial(p, 2), rat(1));
    auto j = expansion_to_json(e);
    auto back = expansion_from_json(j, Mode::exact);
    CHECK(back.center == e.center);
    CHECK(back.terms == e.terms);
}

TEST_CASE("problem serialization") {
    auto p = desk();
    OdeProblem prob;
    prob.coeffs = {rat(1), rat(3)};
    prob.rhs = TimeExpr::single(rat(13), TimeAtom::sin(rat(2)));
    prob.init = {rat(6)};

    auto j = problem_to_json(prob, p);
    QParams loaded = QParams::floating(0.9, 1.0); // overwritten by the file params
    auto back = problem_from_json(j, loaded);
    CHECK(loaded == p);
    CHECK(back.coeffs == prob.coeffs);
    CHECK(back.init == prob.init);
    CHECK(back.rhs == prob.rhs);

    CHECK_THROWS_AS(problem_from_json(json{{"coeffs", json::array()}}, loaded), parse_error);
}

TEST_CASE("quadrature report serialization") {
    QuadratureReport r;
    r.value = 0.5;
    r.terms_used = 41;
    r.tail_bound = 1e-12;
    r.converged = true;
    auto j = quadrature_to_json(r);
    CHECK(j.at("value") == 0.5);
    CHECK(j.at("terms_used") == 41);
    CHECK(j.at("converged") == true);
}
