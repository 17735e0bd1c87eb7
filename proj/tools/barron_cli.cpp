// Command-line harness: rate experiments, fooling demonstrations, solver
// benchmarks, invariant checks and one-shot reconstructions.

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "barron/experiment.hpp"
#include "barron/lp_combine.hpp"
#include "barron/quadrature.hpp"

using namespace barron;

namespace {

struct CommonFlags {
    std::string config;
    std::string eps_list, budget_list;
    double d = -1, sigma = -1, p = -1000, oversample = -1, kappa0 = -1, kappa3 = -1, kappa4 = -1;
    double feas_tol = -1, opt_tol = -1, sched_const = -1;
    long max_iters = -1, trials = -1, seed = -1;
    std::string output;
};

void add_common(CLI::App* cmd, CommonFlags& fl) {
    cmd->add_option("--config", fl.config, "key = value config file");
    cmd->add_option("--eps", fl.eps_list, "comma-separated epsilon list");
    cmd->add_option("--budgets", fl.budget_list, "comma-separated sample budgets");
    cmd->add_option("--d", fl.d, "dimension");
    cmd->add_option("--sigma", fl.sigma, "smoothness parameter");
    cmd->add_option("--p", fl.p, "error norm exponent (inf allowed via config)");
    cmd->add_option("--trials", fl.trials, "trials per row");
    cmd->add_option("--seed", fl.seed, "master seed");
    cmd->add_option("--oversample", fl.oversample, "local plan oversampling factor");
    cmd->add_option("--kappa0", fl.kappa0, "global budget constant");
    cmd->add_option("--kappa3", fl.kappa3, "coefficient-summability constant");
    cmd->add_option("--kappa4", fl.kappa4, "sparse-approximation constant");
    cmd->add_option("--sched-const", fl.sched_const, "budget schedule constant");
    cmd->add_option("--feas-tol", fl.feas_tol, "solver feasibility tolerance");
    cmd->add_option("--opt-tol", fl.opt_tol, "solver optimality tolerance");
    cmd->add_option("--max-iters", fl.max_iters, "solver iteration cap");
    cmd->add_option("--out", fl.output, "output CSV path");
}

ExperimentConfig build_config(const CommonFlags& fl) {
    ExperimentConfig cfg;
    if (!fl.config.empty()) cfg = parse_config_file(fl.config);
    if (!fl.eps_list.empty()) apply_config_line(cfg, "epsilons", fl.eps_list);
    if (!fl.budget_list.empty()) apply_config_line(cfg, "budgets", fl.budget_list);
    if (fl.d > 0) cfg.d = int(fl.d);
    if (fl.sigma > 0) cfg.sigma = fl.sigma;
    if (fl.p > -1000) cfg.p = fl.p;
    if (fl.trials > 0) cfg.trials = int(fl.trials);
    if (fl.seed >= 0) cfg.seed = std::uint64_t(fl.seed);
    if (fl.oversample > 0) cfg.oversample = fl.oversample;
    if (fl.kappa0 > 0) cfg.kappa0 = fl.kappa0;
    if (fl.kappa3 > 0) cfg.kappa3 = fl.kappa3;
    if (fl.kappa4 > 0) cfg.kappa4 = fl.kappa4;
    if (fl.sched_const > 0) cfg.sched_const = fl.sched_const;
    if (fl.feas_tol > 0) cfg.solver.feas_tol = fl.feas_tol;
    if (fl.opt_tol > 0) cfg.solver.opt_tol = fl.opt_tol;
    if (fl.max_iters > 0) cfg.solver.max_iters = fl.max_iters;
    if (!fl.output.empty()) cfg.output = fl.output;
    return cfg;
}

void emit(const ExperimentConfig& cfg, const std::function<void(std::ostream&)>& writer) {
    if (cfg.output.empty()) {
        writer(std::cout);
    } else {
        std::ofstream out(cfg.output);
        if (!out) throw std::runtime_error("cannot open output file: " + cfg.output);
        writer(out);
        std::cout << "wrote " << cfg.output << '\n';
    }
}

int cmd_rates(const ExperimentConfig& cfg) {
    RateReport report = run_rates(cfg);
    emit(cfg, [&](std::ostream& os) { write_rates_csv(os, cfg, report); });
    if (report.fit_valid)
        std::cout << "slope " << report.slope << " (stderr " << report.slope_stderr << ")\n";
    else
        std::cout << "slope: not enough usable rows for a fit\n";
    int bad = 0;
    for (const auto& r : report.rows)
        if (r.trials > 0 && r.mean_err > r.bound) ++bad;
    if (bad > 0)
        std::cout << "warning: measured error above the bound column in " << bad << "/"
                  << report.rows.size() << " rows\n";
    for (const auto& r : report.rows)
        if (r.failures > 0)
            std::cout << "warning: " << r.failures << " failed trial(s) at m=" << r.m << '\n';
    return 0;
}

int cmd_fool(const ExperimentConfig& cfg) {
    FoolReport report = run_fool(cfg);
    emit(cfg, [&](std::ostream& os) { write_fool_csv(os, report); });
    bool ok = true;
    for (const auto& r : report.rows) {
        if (!r.cert.vanishing_verified || r.cert.barron_bound > 1.0 + 1e-12 ||
            r.floor_gap < -1e-9)
            ok = false;
        std::cout << "M=" << r.cert.point_count << " N=" << r.cert.grid_resolution
                  << " |Lambda^I|=" << r.cert.lambda_hit << " bound=" << r.cert.barron_bound
                  << " lp=" << r.cert.lp_norm << " pipeline_err=" << r.pipeline_error << '\n';
    }
    if (report.fit_valid) {
        const double target = -(1.0 / std::max(2.0, cfg.p) + cfg.sigma / cfg.d);
        std::cout << "certificate slope " << report.slope << " (target " << target << ")\n";
    }
    return ok ? 0 : 1;
}

int cmd_solver_bench(const ExperimentConfig& cfg) {
    std::cout << "m,lattice,sparsity,iters,residual,gap,err,ms\n";
    RandomStream root(cfg.seed);
    for (long m : cfg.budgets.empty() ? std::vector<long>{24, 48, 96} : cfg.budgets) {
        for (int trial = 0; trial < cfg.trials; ++trial) {
            RandomStream rng = root.substream(std::uint64_t(m), std::uint64_t(trial));
            const int N = 16;
            std::vector<Eigen::VectorXd> pts;
            for (long i = 0; i < m; ++i) pts.push_back(rng.point_in_cube(1));
            MeasurementSystem sys = build_measurement_system(1, 2 * N, pts);
            Eigen::VectorXcd truth = Eigen::VectorXcd::Zero(sys.lattice_size());
            for (int s = 0; s < 3; ++s)
                truth[rng.uniform_int(0, int(sys.lattice_size()) - 1)] =
                    std::polar(rng.uniform(0.5, 1.5), rng.uniform(0.0, 2 * M_PI));
            const Eigen::VectorXcd y = sys.A * truth;
            const auto t0 = std::chrono::steady_clock::now();
            SolverReport rep = bpdn_solve(sys, y, 0.0, cfg.solver);
            const auto t1 = std::chrono::steady_clock::now();
            const double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
            std::printf("%ld,%ld,3,%ld,%.3e,%.3e,%.3e,%.1f\n", m, long(sys.lattice_size()),
                        rep.iterations, rep.residual, rep.gap, (rep.solution - truth).norm(), ms);
        }
    }
    return 0;
}

int cmd_check(const ExperimentConfig& cfg);

int cmd_reconstruct(const ExperimentConfig& cfg, const std::string& samples_path,
                    const std::string& emit_points, const std::string& outdir, double epsilon) {
    const GlobalPlan plan =
        make_global_plan(epsilon, cfg.sigma, cfg.d, cfg.kappa0, cfg.seed, cfg.kappa3, cfg.kappa4);
    if (!emit_points.empty()) {
        std::ofstream out(emit_points);
        out << std::setprecision(17);
        for (const auto& x : plan.all_points()) {
            for (int i = 0; i < cfg.d; ++i) out << x[i] << (i + 1 < cfg.d ? ',' : '\n');
        }
        std::cout << "wrote " << plan.total_samples << " sampling points to " << emit_points
                  << '\n';
        return 0;
    }
    std::ifstream in(samples_path);
    if (!in) {
        std::cerr << "cannot open samples file: " << samples_path << '\n';
        return 1;
    }
    std::vector<double> vals;
    double v;
    while (in >> v) vals.push_back(v);
    if (long(vals.size()) != plan.total_samples) {
        std::cerr << "expected " << plan.total_samples << " sample values, got " << vals.size()
                  << '\n';
        return 1;
    }
    Eigen::VectorXd y = Eigen::Map<Eigen::VectorXd>(vals.data(), long(vals.size()));
    const PlateauCutoff cutoff(cfg.d, cfg.sigma);
    const PiecewiseReconstruction rec = reconstruct_global(y, plan, cutoff, cfg.solver);
    write_piecewise(outdir, rec);
    std::cout << "wrote reconstruction (" << rec.pieces.size() << " cells) to " << outdir << '\n';
    return 0;
}

// ---- invariant suites for `check` ----------------------------------------

struct CheckRunner {
    int failures = 0;
    void operator()(const std::string& name, bool ok) {
        std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
        if (!ok) ++failures;
    }
};

int cmd_check(const ExperimentConfig& cfg) {
    CheckRunner check;
    RandomStream rng(cfg.seed);

    {  // sup bound |f(x)| <= barron_norm_bound
        bool ok = true;
        Weight w{cfg.sigma};
        for (int i = 0; i < 100 && ok; ++i) {
            FourierSum f = random_unit_barron(rng, 1, cfg.sigma, 10, 40, 64.0);
            for (int j = 0; j < 50; ++j) {
                Eigen::VectorXd x = rng.point_in_cube(1);
                if (std::abs(evaluate(f, x)) > barron_norm_bound(f, w) + 1e-9) ok = false;
            }
        }
        check("embedding: |f(x)| <= barron bound", ok);
    }
    {  // weight submultiplicativity
        bool ok = true;
        Weight w{cfg.sigma};
        for (int i = 0; i < 500; ++i) {
            Eigen::VectorXd a = 60.0 * rng.point_in_cube(2), b = 60.0 * rng.point_in_cube(2);
            if (w(Eigen::VectorXd(a + b)) > w(a) * w(b) * (1 + 1e-12)) ok = false;
        }
        check("weight submultiplicative", ok);
    }
    {  // partition: random points land in exactly one cell
        bool ok = true;
        for (int i = 0; i < 20000; ++i) {
            Eigen::VectorXd x = rng.point_in_cube(2);
            auto idx = locate(x);
            if (!idx) continue;
            if (!cell(*idx).contains(x)) ok = false;
        }
        check("partition: locate/contains agree", ok);
    }
    {  // clipping lemma on random discrete instances
        bool ok = true;
        for (int i = 0; i < 200 && ok; ++i) {
            const int n = 256;
            const double delta = rng.uniform(0.01, 1.0);
            Eigen::VectorXd f(n), g(n), h(n);
            for (int j = 0; j < n; ++j) {
                f[j] = rng.uniform(-1, 1);
                h[j] = f[j] + delta * rng.uniform(-1, 1);
                g[j] = f[j] + rng.uniform(-1, 1);
            }
            const double eps = std::sqrt((f - g).squaredNorm() / n);
            for (double p : {2.0, 3.0, 4.0, 8.0}) {
                double acc = 0.0;
                for (int j = 0; j < n; ++j) {
                    double F;
                    if (g[j] >= h[j] + delta) F = h[j] + delta;
                    else if (g[j] <= h[j] - delta) F = h[j] - delta;
                    else F = g[j];
                    acc += std::pow(std::abs(f[j] - F), p);
                }
                if (std::pow(acc / n, 1.0 / p) >
                    2.0 * std::pow(eps, 2.0 / p) * std::pow(delta, 1.0 - 2.0 / p) + 1e-12)
                    ok = false;
            }
        }
        check("clipping lemma (discrete)", ok);
    }
    {  // fooling certificate vanishes on its points
        std::vector<Eigen::VectorXd> pts;
        for (int i = 0; i < 40; ++i) pts.push_back(rng.point_in_cube(1));
        FoolingCertificate cert = fooling_function(pts, 1, cfg.sigma, 2.0);
        check("fooling certificate: exact vanishing + unit bound",
              cert.vanishing_verified && cert.barron_bound <= 1.0 + 1e-12);
    }
    {  // empirical kappa3 is finite and stable
        const double k128 = measure_kappa3(cfg, 10, 128);
        const double k256 = measure_kappa3(cfg, 10, 256);
        check("coefficient summability stable (R=128 vs 256)",
              std::abs(k128 - k256) <= 0.05 * k128);
        std::cout << "  measured kappa3 ~ " << k256 << '\n';
    }
    return check.failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sampling-recovery harness for Fourier-analytic Barron functions"};
    app.require_subcommand(1);

    CommonFlags fl;
    std::string samples_path, emit_points, outdir = "reconstruction";
    double rec_eps = 0.5;

    auto* rates = app.add_subcommand("rates", "L^p recovery rate experiment");
    add_common(rates, fl);
    auto* fool = app.add_subcommand("fool", "adversarial lower-bound demonstration");
    add_common(fool, fl);
    auto* bench = app.add_subcommand("solver-bench", "basis-pursuit solver benchmark");
    add_common(bench, fl);
    auto* chk = app.add_subcommand("check", "run the invariant suites");
    add_common(chk, fl);
    auto* rec = app.add_subcommand("reconstruct", "one-shot reconstruction from a samples file");
    add_common(rec, fl);
    rec->add_option("--samples", samples_path, "text file with one sample value per line");
    rec->add_option("--emit-points", emit_points, "write the plan's sampling points and exit");
    rec->add_option("--outdir", outdir, "output directory for the reconstruction");
    rec->add_option("--epsilon", rec_eps, "target accuracy of the plan");

    CLI11_PARSE(app, argc, argv);

    try {
        const ExperimentConfig cfg = build_config(fl);
        if (rates->parsed()) return cmd_rates(cfg);
        if (fool->parsed()) return cmd_fool(cfg);
        if (bench->parsed()) return cmd_solver_bench(cfg);
        if (chk->parsed()) return cmd_check(cfg);
        if (rec->parsed()) return cmd_reconstruct(cfg, samples_path, emit_points, outdir, rec_eps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
