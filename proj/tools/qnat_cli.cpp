// Command-line front end: deformed special functions, the integral
// transform and its inverse, initial-value problems, and the built-in
// verification suites. JSON in, JSON or CSV out.
//
// Exit codes: 0 success, 2 usage or parse error, 3 unsupported input
// for the implemented calculus, 4 verification failure.

#include <qnat/qnat.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;
constexpr int kExitVerification = 4;

struct GlobalOptions {
    std::string q = "1/4";
    std::string Q = "1/2";
    std::string alpha = "1/2";
    std::string mode = "exact";
    int order = qnat::kDefaultOrder;
    double tol = 1e-10;
    int quad_terms = 200;
    std::string format = "json";
};

qnat::QParams make_params(const GlobalOptions& g) {
    if (g.mode == "exact")
        return qnat::QParams::exact(qnat::parse_rational(g.q), qnat::parse_rational(g.Q),
                                    qnat::parse_rational(g.alpha));
    if (g.mode == "float")
        return qnat::QParams::floating(
            qnat::parse_scalar(g.q, qnat::Mode::floating).value(),
            qnat::parse_scalar(g.alpha, qnat::Mode::floating).value());
    throw qnat::parse_error("unknown mode '" + g.mode + "' (use exact or float)");
}

qnat::json read_json_input(const std::string& path) {
    try {
        if (path == "-") return qnat::json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw qnat::parse_error("cannot open input file '" + path + "'");
        return qnat::json::parse(in);
    } catch (const qnat::json::parse_error& e) {
        throw qnat::parse_error(std::string("invalid JSON input: ") + e.what());
    }
}

struct SampleSpec {
    double t0 = 0.0, t1 = 0.0;
    int count = 1;
};

SampleSpec parse_sample(const std::string& text) {
    SampleSpec s;
    char c1 = 0, c2 = 0;
    std::istringstream in(text);
    if (!(in >> s.t0 >> c1 >> s.t1 >> c2 >> s.count) || c1 != ',' || c2 != ',' || s.count < 1)
        throw qnat::parse_error("--sample expects t0,t1,n with n >= 1");
    return s;
}

void print_scalar_result(const GlobalOptions& g, const std::string& name,
                         const qnat::json& args, const qnat::Scalar& value) {
    if (g.format == "csv") {
        std::cout << value.str() << "\n";
        return;
    }
    qnat::json out = args;
    out["op"] = name;
    out["exact"] = value.is_exact();
    out["value"] = qnat::scalar_to_json(value);
    out["float"] = value.value();
    std::cout << out.dump(2) << "\n";
}

int run_gamma(const GlobalOptions& g, long long n, bool verify) {
    auto p = make_params(g);
    qnat::Scalar value = qnat::gamma_qa(n, p);
    print_scalar_result(g, "gamma", {{"n", n}}, value);
    if (verify) {
        auto r = qnat::gamma_numeric(static_cast<int>(n), p, g.quad_terms, g.tol);
        double want = value.value();
        if (!r.converged || std::fabs(r.value - want) > 1e-6 * std::max(1.0, std::fabs(want))) {
            std::cerr << "verification failed: integral gave " << r.value << ", closed form "
                      << want << "\n";
            return kExitVerification;
        }
        std::cerr << "oracle agrees: " << r.value << "\n";
    }
    return kExitOk;
}

int run_beta(const GlobalOptions& g, long long m, long long n, bool verify) {
    auto p = make_params(g);
    qnat::Scalar value = qnat::beta_qa(m, n, p);
    print_scalar_result(g, "beta", {{"m", m}, {"n", n}}, value);
    if (verify) {
        auto r = qnat::beta_numeric(static_cast<int>(m), static_cast<int>(n), p, g.quad_terms, g.tol);
        double want = value.value();
        if (!r.converged || std::fabs(r.value - want) > 1e-8 * std::max(1.0, std::fabs(want))) {
            std::cerr << "verification failed: integral gave " << r.value << ", closed form "
                      << want << "\n";
            return kExitVerification;
        }
        std::cerr << "oracle agrees: " << r.value << "\n";
    }
    return kExitOk;
}

int run_eval(const GlobalOptions& g, const std::string& input, std::vector<double> points,
             const std::optional<SampleSpec>& sample) {
    auto p = make_params(g);
    qnat::json j = read_json_input(input);
    qnat::AlphaSeries series = j.contains("alpha_series")
                                   ? qnat::alpha_series_from_json(j, p)
                                   : qnat::expand(qnat::time_expr_from_json(j, p.mode()), g.order, p);
    if (sample) {
        double step = sample->count > 1 ? (sample->t1 - sample->t0) / (sample->count - 1) : 0.0;
        for (int i = 0; i < sample->count; ++i) points.push_back(sample->t0 + step * i);
    }
    if (points.empty()) throw qnat::parse_error("eval: give --t or --sample");

    qnat::json rows = qnat::json::array();
    for (double t : points) {
        auto r = qnat::series_eval(series, t, g.tol);
        rows.push_back({{"t", t}, {"value", r.value}, {"tail", r.tail}, {"converged", r.converged}});
    }
    if (g.format == "csv") {
        std::cout << "t,value,tail,converged\n";
        for (const auto& row : rows)
            std::cout << row.at("t").get<double>() << "," << row.at("value").get<double>() << ","
                      << row.at("tail").get<double>() << ","
                      << (row.at("converged").get<bool>() ? 1 : 0) << "\n";
    } else {
        std::cout << qnat::json{{"points", rows}}.dump(2) << "\n";
    }
    return kExitOk;
}

int run_transform(const GlobalOptions& g, const std::string& input) {
    auto p = make_params(g);
    auto expr = qnat::time_expr_from_json(read_json_input(input), p.mode());
    auto R = qnat::natural_time_expr(expr, p, g.order);
    std::cout << qnat::transform_to_json(R).dump(2) << "\n";
    return kExitOk;
}

int run_invert(const GlobalOptions& g, const std::string& input) {
    auto p = make_params(g);
    auto R = qnat::transform_from_json(read_json_input(input), p.mode());
    auto expr = qnat::invert(R, p);
    std::cout << qnat::time_expr_to_json(expr).dump(2) << "\n";
    return kExitOk;
}

int run_solve(const GlobalOptions& g, const std::string& input,
              const std::optional<SampleSpec>& sample) {
    auto p = make_params(g);
    auto j = read_json_input(input);
    auto prob = qnat::problem_from_json(j, p);
    auto sol = qnat::solve_ivp(prob, p, g.order);
    qnat::json out;
    out["solution"] = qnat::time_expr_to_json(sol);
    if (sample) {
        double step = sample->count > 1 ? (sample->t1 - sample->t0) / (sample->count - 1) : 0.0;
        qnat::json rows = qnat::json::array();
        for (int i = 0; i < sample->count; ++i) {
            double t = sample->t0 + step * i;
            auto r = qnat::eval_time_expr(sol, t, p, g.order, g.tol);
            rows.push_back(
                {{"t", t}, {"value", r.value}, {"tail", r.tail}, {"converged", r.converged}});
        }
        out["samples"] = rows;
        if (g.format == "csv") {
            std::cout << "t,value,tail,converged\n";
            for (const auto& row : rows)
                std::cout << row.at("t").get<double>() << "," << row.at("value").get<double>()
                          << "," << row.at("tail").get<double>() << ","
                          << (row.at("converged").get<bool>() ? 1 : 0) << "\n";
            return kExitOk;
        }
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
}

int run_verify(const GlobalOptions& g, std::vector<std::string> suites) {
    auto p = make_params(g);
    if (suites.empty()) suites = qnat::check_suite_names();
    int failures = 0, total = 0;
    for (const auto& suite : suites) {
        for (const auto& r : qnat::run_suite(suite, p, g.quad_terms)) {
            ++total;
            if (!r.pass) ++failures;
            std::cout << (r.pass ? "PASS  " : "FAIL  ") << r.name;
            if (!r.pass && !r.detail.empty()) std::cout << "  [" << r.detail << "]";
            std::cout << "\n";
        }
    }
    std::cout << (failures == 0 ? "all " : "") << total - failures << "/" << total
              << " checks passed\n";
    return failures == 0 ? kExitOk : kExitVerification;
}

int run_table(const GlobalOptions& g, const std::string& kind, long long n) {
    auto p = make_params(g);
    if (kind == "bnk") {
        qnat::BnkTable table(n, p);
        if (g.format == "csv") {
            std::cout << "n,k,value\n";
            for (long long i = 0; i <= table.n_max(); ++i)
                for (long long k = 0; k <= i; ++k)
                    std::cout << i << "," << k << "," << table.at(i, k).str() << "\n";
        } else {
            qnat::json rows = qnat::json::array();
            for (const auto& row : table.rows()) rows.push_back(qnat::scalar_list_to_json(row));
            std::cout << qnat::json{{"bnk", rows}}.dump(2) << "\n";
        }
        return kExitOk;
    }
    if (kind == "gamma") {
        if (g.format == "csv") {
            std::cout << "n,value,float\n";
            for (long long i = 1; i <= n; ++i) {
                auto v = qnat::gamma_qa(i, p);
                std::cout << i << "," << v.str() << "," << v.value() << "\n";
            }
        } else {
            qnat::json rows = qnat::json::array();
            for (long long i = 1; i <= n; ++i) {
                auto v = qnat::gamma_qa(i, p);
                rows.push_back({{"n", i}, {"value", qnat::scalar_to_json(v)}, {"float", v.value()}});
            }
            std::cout << qnat::json{{"gamma", rows}}.dump(2) << "\n";
        }
        return kExitOk;
    }
    throw qnat::parse_error("table: unknown kind '" + kind + "' (use bnk or gamma)");
}

} // namespace

int main(int argc, char** argv) {
    GlobalOptions g;
    CLI::App app{"q,alpha-deformed calculus and Natural-transform toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--q", g.q, "deformation base q as p/q (default 1/4)");
    app.add_option("--Q", g.Q, "q^alpha as p/q, exact mode only (default 1/2)");
    app.add_option("--alpha", g.alpha, "fractional order alpha (default 1/2)");
    app.add_option("--mode", g.mode, "arithmetic mode: exact | float");
    app.add_option("--order", g.order, "series truncation order");
    app.add_option("--tol", g.tol, "numeric tolerance");
    app.add_option("--quad-J", g.quad_terms, "quadrature half-range / term count");
    app.add_option("--format", g.format, "output format: json | csv");

    long long gamma_n = 1, beta_m = 1, beta_n = 1, table_n = 4;
    bool gamma_verify = false, beta_verify = false;
    std::string in_path = "-", table_kind = "bnk", sample_text;
    std::vector<double> eval_points;
    std::vector<std::string> verify_suites;

    auto* cmd_gamma = app.add_subcommand("gamma", "deformed Gamma at a positive integer");
    cmd_gamma->add_option("n", gamma_n, "argument")->required()->check(CLI::PositiveNumber);
    cmd_gamma->add_flag("--verify", gamma_verify, "cross-check against the defining integral");

    auto* cmd_beta = app.add_subcommand("beta", "deformed Beta at positive integers");
    cmd_beta->add_option("m", beta_m, "first argument")->required()->check(CLI::PositiveNumber);
    cmd_beta->add_option("n", beta_n, "second argument")->required()->check(CLI::PositiveNumber);
    cmd_beta->add_flag("--verify", beta_verify, "cross-check against the defining integral");

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a series or time expression");
    cmd_eval->add_option("--in", in_path, "input JSON file, or - for stdin");
    cmd_eval->add_option("--t", eval_points, "evaluation point (repeatable)");
    cmd_eval->add_option("--sample", sample_text, "t0,t1,n sampling spec");

    auto* cmd_transform = app.add_subcommand("transform", "forward transform of a time expression");
    cmd_transform->add_option("--in", in_path, "input JSON file, or - for stdin");

    auto* cmd_invert = app.add_subcommand("invert", "inverse transform back to a time expression");
    cmd_invert->add_option("--in", in_path, "input JSON file, or - for stdin");

    auto* cmd_solve = app.add_subcommand("solve", "solve an initial-value problem");
    cmd_solve->add_option("--in", in_path, "problem JSON file, or - for stdin");
    cmd_solve->add_option("--sample", sample_text, "t0,t1,n sampling spec for the solution");

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("suites", verify_suites,
                           "suites to run (gamma, series, taylor, transforms, examples)");

    auto* cmd_table = app.add_subcommand("table", "print coefficient tables");
    cmd_table->add_option("kind", table_kind, "bnk | gamma");
    cmd_table->add_option("--n", table_n, "table size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::optional<SampleSpec> sample;
        if (!sample_text.empty()) sample = parse_sample(sample_text);
        if (cmd_gamma->parsed()) return run_gamma(g, gamma_n, gamma_verify);
        if (cmd_beta->parsed()) return run_beta(g, beta_m, beta_n, beta_verify);
        if (cmd_eval->parsed()) return run_eval(g, in_path, eval_points, sample);
        if (cmd_transform->parsed()) return run_transform(g, in_path);
        if (cmd_invert->parsed()) return run_invert(g, in_path);
        if (cmd_solve->parsed()) return run_solve(g, in_path, sample);
        if (cmd_verify->parsed()) return run_verify(g, verify_suites);
        if (cmd_table->parsed()) return run_table(g, table_kind, table_n);
    } catch (const qnat::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qnat::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitUnsupported;
    }
    return kExitOk;
}
