#pragma once

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "barron/adversary.hpp"
#include "barron/fourier_sum.hpp"
#include "barron/global_recon.hpp"
#include "barron/l1_solver.hpp"
#include "barron/rng.hpp"

namespace barron {

struct ExperimentConfig {
    int d = 1;
    double sigma = 1.0;
    double p = 2.0;  // infinity allowed
    std::vector<double> epsilons;  // eps-list mode: budgets from kappa0 directly
    std::vector<long> budgets;     // m-list mode: eps(m) = (sched_const/m)^lambda,
                                   // kappa0 scaled so the plan consumes ~m samples
    int trials = 10;
    std::uint64_t seed = 1;

    double oversample = 1.0;  // local plans (make_plan)
    double kappa0 = 1.0;      // global budget scale in eps-list mode
    double kappa3 = 0.25;     // plan calibration constants (see README)
    double kappa4 = 0.25;
    double sched_const = 40.0;
    double bound_const = 1.0;  // constant of the theoretical-bound column

    int quad_order = 24;       // Gauss-Legendre nodes per axis and cell
    int atoms_min = 10;        // test-function family
    int atoms_max = 40;
    double freq_cap = 24.0;

    std::string output;  // CSV path; empty -> stdout only
    // gap tolerance sits well below the statistical error scale of every row
    ToleranceConfig solver{1e-8, 1e-3, 20000, 50};
};

// `key = value` lines, '#' comments; unknown keys are an error.
ExperimentConfig parse_config_file(const std::string& path);
void apply_config_line(ExperimentConfig& cfg, const std::string& key, const std::string& value);

// Random hermitian FourierSum with atoms_min..atoms_max atoms, heavy-tailed
// radial frequency law (Pareto-type tail, capped), amplitudes normalized so
// barron_norm_bound == 1.
FourierSum random_unit_barron(RandomStream& rng, int d, double sigma, int atoms_min,
                              int atoms_max, double freq_cap);

// |f - T|_{L^p(Omega)} via per-cell tensor Gauss-Legendre in cell coordinates
// (active cells) plus the exact remainder over the inactive region.
double lp_error_global(const FourierSum& f, const PiecewiseReconstruction& rec, double p,
                       int quad_order);

struct RateRow {
    long m = 0;
    double epsilon = 0.0;
    double mean_err = 0.0;
    double std_err = 0.0;
    double bound = 0.0;
    int trials = 0;
    int failures = 0;
};

struct RateReport {
    std::vector<RateRow> rows;
    double slope = 0.0;
    double slope_stderr = 0.0;
    bool fit_valid = false;
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};
LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y);

// Rate experiment.  p <= 2: global patched reconstruction; p = infinity:
// Hoelder grid reconstruction; 2 < p < infinity: split budget, clipping
// combiner.  The fitted slope excludes the smallest-m row (pre-asymptotic).
RateReport run_rates(const ExperimentConfig& cfg);
void write_rates_csv(std::ostream& os, const ExperimentConfig& cfg, const RateReport& report);

struct FoolRow {
    FoolingCertificate cert;
    double pipeline_error = 0.0;  // max over {gamma, -gamma}
    double floor_gap = 0.0;       // pipeline_error - cert.lp_norm
};

struct FoolReport {
    std::vector<FoolRow> rows;
    double slope = 0.0;
    bool fit_valid = false;
};

// Fooling demonstration against the pipeline's own sampling plans.
FoolReport run_fool(const ExperimentConfig& cfg);
void write_fool_csv(std::ostream& os, const FoolReport& report);

// A_R(y) = R * inner(y / R): turns a unit-ball reconstruction into one for
// the ball of radius R.  Throws for R <= 0.
using InnerReconstruction =
    std::function<std::function<double(const Eigen::VectorXd&)>(const Eigen::VectorXd&)>;
std::function<double(const Eigen::VectorXd&)> reconstruct_scaled(const Eigen::VectorXd& samples,
                                                                 double R,
                                                                 const InnerReconstruction& inner);

// Empirical kappa3: max weighted-summability total over `count` unit-ball
// test functions (d = 1).
double measure_kappa3(const ExperimentConfig& cfg, int count, int radius);

// Per-row kappa0 in m-list mode: target / sum of unscaled budget values.
double kappa0_for_target(long m_target, double epsilon, double lambda, int dim);

// eps(m) = (sched_const / m)^lambda clamped into (0, 0.95]
double scheduled_epsilon(long m, double lambda, double sched_const);

}  // namespace barron
