#include "barron/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "barron/holder_recon.hpp"
#include "barron/lp_combine.hpp"
#include "barron/quadrature.hpp"

namespace barron {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

template <typename T, typename Parse>
std::vector<T> parse_list(const std::string& value, Parse parse) {
    std::vector<T> out;
    std::stringstream ss(value);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        if (!tok.empty()) out.push_back(parse(tok));
    }
    return out;
}

double parse_p(const std::string& v) {
    if (v == "inf" || v == "infinity") return INFINITY;
    return std::stod(v);
}

}  // namespace

void apply_config_line(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "d") cfg.d = std::stoi(value);
    else if (key == "sigma") cfg.sigma = std::stod(value);
    else if (key == "p") cfg.p = parse_p(value);
    else if (key == "epsilons") cfg.epsilons = parse_list<double>(value, [](const std::string& t) { return std::stod(t); });
    else if (key == "budgets") cfg.budgets = parse_list<long>(value, [](const std::string& t) { return std::stol(t); });
    else if (key == "trials") cfg.trials = std::stoi(value);
    else if (key == "seed") cfg.seed = std::stoull(value);
    else if (key == "oversample") cfg.oversample = std::stod(value);
    else if (key == "kappa0") cfg.kappa0 = std::stod(value);
    else if (key == "kappa3") cfg.kappa3 = std::stod(value);
    else if (key == "kappa4") cfg.kappa4 = std::stod(value);
    else if (key == "sched_const") cfg.sched_const = std::stod(value);
    else if (key == "bound_const") cfg.bound_const = std::stod(value);
    else if (key == "quad_order") cfg.quad_order = std::stoi(value);
    else if (key == "atoms_min") cfg.atoms_min = std::stoi(value);
    else if (key == "atoms_max") cfg.atoms_max = std::stoi(value);
    else if (key == "freq_cap") cfg.freq_cap = std::stod(value);
    else if (key == "output") cfg.output = value;
    else if (key == "feas_tol") cfg.solver.feas_tol = std::stod(value);
    else if (key == "opt_tol") cfg.solver.opt_tol = std::stod(value);
    else if (key == "max_iters") cfg.solver.max_iters = std::stol(value);
    else throw std::invalid_argument("unknown config key: " + key);
}

ExperimentConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    ExperimentConfig cfg;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad config line: " + line);
        apply_config_line(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

FourierSum random_unit_barron(RandomStream& rng, int d, double sigma, int atoms_min,
                              int atoms_max, double freq_cap) {
    const int total = rng.uniform_int(atoms_min, atoms_max);
    const int pairs = std::max(1, total / 2);
    FourierSum half;
    half.dim = d;
    half.freqs.resize(d, pairs);
    half.amps.resize(pairs);
    const Weight w{sigma};
    // One dominant low-frequency carrier plus a heavy-tailed cloud.  The
    // carrier keeps |f|_2 comparable to the (unit) Barron bound, so recovery
    // errors are visible against the eta = eps allowance at desk scales.
    const double carrier_share = rng.uniform(0.55, 0.85);
    for (int j = 0; j < pairs; ++j) {
        double radius;
        if (j == 0) {
            radius = rng.uniform(0.3, 1.8);
        } else {
            // Pareto-type radial tail: P(r > t) ~ (1+t)^{-3/2}, capped
            const double u = rng.uniform01();
            radius = std::min(freq_cap, std::pow(1.0 - u, -2.0 / 3.0) - 1.0);
        }
        Eigen::VectorXd dir(d);
        double nrm = 0.0;
        while (nrm < 1e-9) {
            for (int i = 0; i < d; ++i) dir[i] = rng.normal();
            nrm = dir.norm();
        }
        half.freqs.col(j) = radius / nrm * dir;
        const double weighted_mass =
            j == 0 ? carrier_share : (1.0 - carrier_share) * rng.uniform(0.2, 1.0);
        half.amps[j] = std::polar(weighted_mass / w(Eigen::VectorXd(half.freqs.col(j))),
                                  rng.uniform(0.0, 2.0 * M_PI));
    }
    FourierSum f = hermitian_symmetrize(half);
    const double b = barron_norm_bound(f, w);
    f.amps /= b;
    return f;
}

namespace {

// integral of |f - h o Phi|^p over one cell, in cell coordinates
double cell_err_pow(const FourierSum& f, const Cell& geom, const TrigPoly* h, double p,
                    const QuadRule& rule1d) {
    const int d = int(geom.idx.n.size());
    double jac = 1.0;
    for (int i = 0; i < d; ++i) jac *= std::ldexp(1.0, -(geom.idx.n[i] + 1));
    const int q = int(rule1d.nodes.size());
    Eigen::VectorXi id = Eigen::VectorXi::Zero(d);
    Eigen::VectorXd t(d);
    double acc = 0.0;
    while (true) {
        double w = 1.0;
        for (int i = 0; i < d; ++i) {
            t[i] = rule1d.nodes[id[i]];
            w *= rule1d.weights[id[i]];
        }
        const double fv = evaluate(f, geom.inverse(t));
        const double hv = h ? eval(*h, t).real() : 0.0;
        acc += w * std::pow(std::abs(fv - hv), p);
        int axis = 0;
        while (axis < d && ++id[axis] == q) id[axis++] = 0;
        if (axis == d) break;
    }
    return jac * acc;
}

double cell_err_sup(const FourierSum& f, const Cell& geom, const TrigPoly* h, int res) {
    const int d = int(geom.idx.n.size());
    Eigen::VectorXi id = Eigen::VectorXi::Zero(d);
    Eigen::VectorXd t(d);
    double best = 0.0;
    while (true) {
        for (int i = 0; i < d; ++i) t[i] = -0.25 + 0.5 * (id[i] + 0.5) / res;
        const double fv = evaluate(f, geom.inverse(t));
        const double hv = h ? eval(*h, t).real() : 0.0;
        best = std::max(best, std::abs(fv - hv));
        int axis = 0;
        while (axis < d && ++id[axis] == res) id[axis++] = 0;
        if (axis == d) break;
    }
    return best;
}

}  // namespace

double lp_error_global(const FourierSum& f, const PiecewiseReconstruction& rec, double p,
                       int quad_order) {
    const int d = f.dim;
    auto diff = [&](const Eigen::VectorXd& x) {
        return evaluate(f, x) - evaluate_piecewise(rec, x);
    };
    if (std::isinf(p)) {
        double best = 0.0;
        for (const auto& piece : rec.pieces)
            best = std::max(best,
                            cell_err_sup(f, piece.geometry, &piece.h, std::max(64, 4 * piece.h.bound)));
        // inactive region: dense scan of |f| restricted to cells without a piece
        const int res = d == 1 ? 8192 : 128;
        Eigen::VectorXi id = Eigen::VectorXi::Zero(d);
        Eigen::VectorXd x(d);
        while (true) {
            for (int i = 0; i < d; ++i) x[i] = -0.5 + (id[i] + 0.5) / res;
            bool active = false;
            if (auto idx = locate(x)) {
                for (const auto& piece : rec.pieces)
                    if ((piece.idx.n.array() == idx->n.array()).all() &&
                        (piece.idx.theta.array() == idx->theta.array()).all()) {
                        active = true;
                        break;
                    }
            }
            if (!active) best = std::max(best, std::abs(evaluate(f, x)));
            int axis = 0;
            while (axis < d && ++id[axis] == res) id[axis++] = 0;
            if (axis == d) break;
        }
        return best;
    }

    const QuadRule rule = gauss_legendre(quad_order, -0.25, 0.25);
    double total = 0.0;
    double active_f_mass = 0.0;  // integral of |f|^p over the active cells
    for (const auto& piece : rec.pieces) {
        total += cell_err_pow(f, piece.geometry, &piece.h, p, rule);
        active_f_mass += cell_err_pow(f, piece.geometry, nullptr, p, rule);
    }
    // remainder: |f - 0|^p over the inactive region
    const int panels = d == 1 ? 64 : 16;
    double whole = 0.0;
    {
        const QuadRule base = gauss_legendre(8);
        Eigen::VectorXi id = Eigen::VectorXi::Zero(d);
        Eigen::VectorXd x(d);
        const long per_axis = panels * base.nodes.size();
        while (true) {
            double w = 1.0;
            for (int i = 0; i < d; ++i) {
                const long panel = id[i] / base.nodes.size(), node = id[i] % base.nodes.size();
                const double h = 1.0 / panels;
                x[i] = -0.5 + h * (panel + 0.5 * (base.nodes[node] + 1.0));
                w *= 0.5 * h * base.weights[node];
            }
            whole += w * std::pow(std::abs(evaluate(f, x)), p);
            int axis = 0;
            while (axis < d && ++id[axis] == per_axis) id[axis++] = 0;
            if (axis == d) break;
        }
    }
    total += std::max(0.0, whole - active_f_mass);
    return std::pow(std::max(total, 0.0), 1.0 / p);
}

LineFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    if (n < 2 || y.size() != n) throw std::invalid_argument("fit_line: need >= 2 points");
    double sx = 0, sy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    if (n > 2) {
        double rss = 0;
        for (size_t i = 0; i < n; ++i) {
            const double r = y[i] - (fit.intercept + fit.slope * x[i]);
            rss += r * r;
        }
        fit.slope_stderr = std::sqrt(rss / double(n - 2) / sxx);
    }
    return fit;
}

double scheduled_epsilon(long m, double lambda, double sched_const) {
    const double eps = std::pow(sched_const / double(m), lambda);
    return std::min(eps, 0.95);
}

double kappa0_for_target(long m_target, double epsilon, double lambda, int dim) {
    const auto active = active_set(epsilon, dim);
    if (active.empty()) return 1.0;
    double total = 0.0;
    for (const auto& n : active)
        total += budget_value<double>(n.sum(), epsilon, lambda, 1.0) * std::pow(2.0, dim);
    return double(m_target) / total;
}

namespace {

double theory_bound(const ExperimentConfig& cfg, long m) {
    const double lambda = 0.5 + cfg.sigma / cfg.d;
    const double lg = std::log(M_E + double(m));
    if (cfg.p <= 2.0) return cfg.bound_const * std::pow(lg * lg * lg * lg / double(m), lambda);
    if (std::isinf(cfg.p)) return cfg.bound_const * std::pow(double(m), -cfg.sigma / cfg.d);
    const double a = (4.0 + 8.0 * cfg.sigma / cfg.d) / cfg.p;
    return cfg.bound_const * std::pow(lg, a) * std::pow(double(m), -(1.0 / cfg.p + cfg.sigma / cfg.d));
}

struct TrialOutcome {
    double err = 0.0;
    bool ok = false;
};

// one reconstruction + error measurement for the L^2 pipeline
TrialOutcome l2_pipeline_trial(const ExperimentConfig& cfg, double epsilon, double kappa0,
                               std::uint64_t plan_seed, const FourierSum& f, long* consumed) {
    TrialOutcome out;
    try {
        const GlobalPlan plan = make_global_plan(epsilon, cfg.sigma, cfg.d, kappa0, plan_seed,
                                                 cfg.kappa3, cfg.kappa4);
        if (consumed) *consumed = plan.total_samples;
        const PlateauCutoff cutoff(cfg.d, cfg.sigma);
        const auto pts = plan.all_points();
        Eigen::VectorXd y(plan.total_samples);
        for (long i = 0; i < plan.total_samples; ++i) y[i] = evaluate(f, pts[size_t(i)]);
        const PiecewiseReconstruction rec = reconstruct_global(y, plan, cutoff, cfg.solver);
        out.err = lp_error_global(f, rec, cfg.p, cfg.quad_order);
        out.ok = true;
    } catch (const std::exception& e) {
        std::cerr << "warning: trial failed: " << e.what() << '\n';
    }
    return out;
}

}  // namespace

RateReport run_rates(const ExperimentConfig& cfg) {
    RateReport report;
    const double lambda = 0.5 + cfg.sigma / cfg.d;
    const bool m_mode = !cfg.budgets.empty();
    const size_t n_rows = m_mode ? cfg.budgets.size() : cfg.epsilons.size();
    if (n_rows == 0) throw std::invalid_argument("run_rates: need epsilons or budgets");
    RandomStream root(cfg.seed);

    for (size_t row = 0; row < n_rows; ++row) {
        RateRow r;
        double epsilon, kappa0;
        long m_plan = 0;
        if (m_mode) {
            const long target = cfg.budgets[row];
            epsilon = scheduled_epsilon(target, lambda, cfg.sched_const);
            kappa0 = kappa0_for_target(target, epsilon, lambda, cfg.d);
        } else {
            epsilon = cfg.epsilons[row];
            kappa0 = cfg.kappa0;
        }
        r.epsilon = epsilon;

        std::vector<double> errs;
        for (int trial = 0; trial < cfg.trials; ++trial) {
            RandomStream trial_rng = root.substream(row + 1, std::uint64_t(trial) + 1);
            const std::uint64_t plan_seed = trial_rng.next_u64();
            FourierSum f = random_unit_barron(trial_rng, cfg.d, cfg.sigma, cfg.atoms_min,
                                              cfg.atoms_max, cfg.freq_cap);

            if (std::isinf(cfg.p)) {
                // Hoelder grid reconstruction; budget = target m
                const long m = m_mode ? cfg.budgets[row]
                                      : long(std::ceil(std::pow(epsilon, -1.0 / cfg.sigma)));
                try {
                    GridInterpolant g = grid_plan(m, cfg.d, cfg.sigma);
                    populate(g, [&](const Eigen::VectorXd& x) { return evaluate(f, x); });
                    const int res = cfg.d == 1 ? 4096 : 96;
                    const double err = lp_norm_estimate(
                        [&](const Eigen::VectorXd& x) {
                            return evaluate(f, x) - interpolate_eval(g, x);
                        },
                        INFINITY, res, cfg.d);
                    errs.push_back(err);
                    m_plan = g.total_nodes();
                } catch (const std::exception& e) {
                    std::cerr << "warning: holder trial failed: " << e.what() << '\n';
                    ++r.failures;
                }
            } else if (cfg.p <= 2.0) {
                long consumed = 0;
                const TrialOutcome out =
                    l2_pipeline_trial(cfg, epsilon, kappa0, plan_seed, f, &consumed);
                if (out.ok) {
                    errs.push_back(out.err);
                    m_plan = consumed;
                } else {
                    ++r.failures;
                }
            } else {
                // split budget: L^2 half + L^inf half, clip with measured delta
                const long target = m_mode ? cfg.budgets[row]
                                           : long(std::ceil(std::pow(epsilon, -1.0 / lambda)));
                const long m_half = std::max(2L, target / 2);
                const double eps_half = scheduled_epsilon(m_half, lambda, cfg.sched_const);
                const double k0_half = kappa0_for_target(m_half, eps_half, lambda, cfg.d);
                try {
                    const GlobalPlan plan = make_global_plan(eps_half, cfg.sigma, cfg.d, k0_half,
                                                             plan_seed, cfg.kappa3, cfg.kappa4);
                    const PlateauCutoff cutoff(cfg.d, cfg.sigma);
                    const auto pts = plan.all_points();
                    Eigen::VectorXd y(plan.total_samples);
                    for (long i = 0; i < plan.total_samples; ++i)
                        y[i] = evaluate(f, pts[size_t(i)]);
                    const PiecewiseReconstruction rec =
                        reconstruct_global(y, plan, cutoff, cfg.solver);

                    GridInterpolant g = grid_plan(m_half, cfg.d, cfg.sigma);
                    populate(g, [&](const Eigen::VectorXd& x) { return evaluate(f, x); });
                    const int res = cfg.d == 1 ? 4096 : 96;
                    const double delta_measured = 1.1 * lp_norm_estimate(
                        [&](const Eigen::VectorXd& x) {
                            return evaluate(f, x) - interpolate_eval(g, x);
                        },
                        INFINITY, res, cfg.d);

                    LpEstimator est = combine_lp_estimator(
                        cfg.p, 0.0, delta_measured,
                        [&rec](const Eigen::VectorXd& x) { return evaluate_piecewise(rec, x); },
                        [&g](const Eigen::VectorXd& x) { return interpolate_eval(g, x); });
                    const int resp = cfg.d == 1 ? 512 : 48;
                    const double err = lp_norm_estimate(
                        [&](const Eigen::VectorXd& x) { return evaluate(f, x) - est(x); }, cfg.p,
                        resp, cfg.d);
                    errs.push_back(err);
                    m_plan = plan.total_samples + g.total_nodes();
                } catch (const std::exception& e) {
                    std::cerr << "warning: split trial failed: " << e.what() << '\n';
                    ++r.failures;
                }
            }
        }

        r.m = m_plan;
        r.trials = int(errs.size());
        if (!errs.empty()) {
            double s = 0.0;
            for (double e : errs) s += e;
            r.mean_err = s / double(errs.size());
            double v = 0.0;
            for (double e : errs) v += (e - r.mean_err) * (e - r.mean_err);
            r.std_err = errs.size() > 1 ? std::sqrt(v / double(errs.size() - 1)) : 0.0;
        }
        r.bound = theory_bound(cfg, std::max(r.m, 1L));
        report.rows.push_back(r);
    }

    // slope over log m vs log mean error, excluding the smallest-m row
    std::vector<RateRow> usable;
    for (const auto& r : report.rows)
        if (r.trials > 0 && r.mean_err > 0.0 && r.m > 0) usable.push_back(r);
    std::sort(usable.begin(), usable.end(),
              [](const RateRow& a, const RateRow& b) { return a.m < b.m; });
    if (usable.size() >= 4) usable.erase(usable.begin());
    if (usable.size() >= 3) {
        std::vector<double> lx, ly;
        for (const auto& r : usable) {
            lx.push_back(std::log(double(r.m)));
            ly.push_back(std::log(r.mean_err));
        }
        const LineFit fit = fit_line(lx, ly);
        report.slope = fit.slope;
        report.slope_stderr = fit.slope_stderr;
        report.fit_valid = true;
    }
    return report;
}

void write_rates_csv(std::ostream& os, const ExperimentConfig& cfg, const RateReport& report) {
    os << "m,p,sigma,d,mean_err,std_err,bound\n";
    char buf[256];
    for (const auto& r : report.rows) {
        if (std::isinf(cfg.p))
            std::snprintf(buf, sizeof buf, "%ld,inf,%.6g,%d,%.12e,%.12e,%.12e\n", r.m, cfg.sigma,
                          cfg.d, r.mean_err, r.std_err, r.bound);
        else
            std::snprintf(buf, sizeof buf, "%ld,%.6g,%.6g,%d,%.12e,%.12e,%.12e\n", r.m, cfg.p,
                          cfg.sigma, cfg.d, r.mean_err, r.std_err, r.bound);
        os << buf;
    }
}

FoolReport run_fool(const ExperimentConfig& cfg) {
    if (cfg.budgets.empty()) throw std::invalid_argument("run_fool: needs a budgets list");
    FoolReport report;
    const double lambda = 0.5 + cfg.sigma / cfg.d;
    RandomStream root(cfg.seed);
    const PlateauCutoff cutoff(cfg.d, cfg.sigma);

    for (size_t row = 0; row < cfg.budgets.size(); ++row) {
        const long target = cfg.budgets[row];
        const double epsilon = scheduled_epsilon(target, lambda, cfg.sched_const);
        const double kappa0 = kappa0_for_target(target, epsilon, lambda, cfg.d);
        RandomStream rrow = root.substream(row + 1);
        const GlobalPlan plan = make_global_plan(epsilon, cfg.sigma, cfg.d, kappa0,
                                                 rrow.next_u64(), cfg.kappa3, cfg.kappa4);
        const auto pts = plan.all_points();

        FoolRow fr;
        fr.cert = fooling_function(pts, cfg.d, cfg.sigma, cfg.p);

        // the pair {gamma, -gamma} agrees with zero at every plan point
        Eigen::VectorXd y(plan.total_samples);
        for (long i = 0; i < plan.total_samples; ++i) y[i] = fr.cert.function.eval(pts[size_t(i)]);
        const PiecewiseReconstruction rec = reconstruct_global(y, plan, cutoff, cfg.solver);
        bool rec_zero = true;
        for (const auto& piece : rec.pieces)
            if (piece.h.coeffs.cwiseAbs().maxCoeff() > 0.0) rec_zero = false;
        double err_plus, err_minus;
        if (rec_zero) {
            err_plus = err_minus = fr.cert.function.lp_norm(cfg.p);  // exact
        } else {
            auto gamma = [&](const Eigen::VectorXd& x) { return fr.cert.function.eval(x); };
            const int res = cfg.d == 1 ? 2048 : 64;
            err_plus = lp_norm_estimate(
                [&](const Eigen::VectorXd& x) { return gamma(x) - evaluate_piecewise(rec, x); },
                cfg.p, res, cfg.d);
            err_minus = lp_norm_estimate(
                [&](const Eigen::VectorXd& x) { return -gamma(x) - evaluate_piecewise(rec, x); },
                cfg.p, res, cfg.d);
        }
        fr.pipeline_error = std::max(err_plus, err_minus);
        fr.floor_gap = fr.pipeline_error - fr.cert.lp_norm;
        report.rows.push_back(std::move(fr));
    }

    if (report.rows.size() >= 2) {
        std::vector<double> lx, ly;
        for (const auto& r : report.rows)
            if (r.cert.point_count > 0 && r.cert.lp_norm > 0) {
                lx.push_back(std::log(double(r.cert.point_count)));
                ly.push_back(std::log(r.cert.lp_norm));
            }
        if (lx.size() >= 2) {
            report.slope = fit_line(lx, ly).slope;
            report.fit_valid = true;
        }
    }
    return report;
}

void write_fool_csv(std::ostream& os, const FoolReport& report) {
    os << "M,N,lambda_hit,barron_bound,lp_norm\n";
    char buf[256];
    for (const auto& r : report.rows) {
        std::snprintf(buf, sizeof buf, "%d,%d,%d,%.12e,%.12e\n", r.cert.point_count,
                      r.cert.grid_resolution, r.cert.lambda_hit, r.cert.barron_bound,
                      r.cert.lp_norm);
        os << buf;
    }
}

std::function<double(const Eigen::VectorXd&)> reconstruct_scaled(const Eigen::VectorXd& samples,
                                                                 double R,
                                                                 const InnerReconstruction& inner) {
    if (R <= 0.0) throw std::invalid_argument("reconstruct_scaled: R must be > 0");
    auto fn = inner(samples / R);
    return [R, fn](const Eigen::VectorXd& x) { return R * fn(x); };
}

double measure_kappa3(const ExperimentConfig& cfg, int count, int radius) {
    const PlateauCutoff cutoff(1, cfg.sigma);
    RandomStream rng(cfg.seed ^ 0xabcdef12345ull);
    double worst = 0.0;
    for (int i = 0; i < count; ++i) {
        FourierSum f = random_unit_barron(rng, 1, cfg.sigma, cfg.atoms_min, cfg.atoms_max,
                                          std::min(cfg.freq_cap, double(radius) / 2));
        worst = std::max(worst, weighted_summability(f, cutoff, cfg.sigma, radius).total());
    }
    return worst;
}

}  // namespace barron
