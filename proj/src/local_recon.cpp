#include "barron/local_recon.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "barron/rng.hpp"

namespace barron {

namespace {

LocalPlan plan_skeleton(double epsilon, double sigma, int dim, double kappa3, double kappa4) {
    if (!(epsilon > 0.0 && epsilon < 1.0))
        throw std::domain_error("make_plan: epsilon must lie in (0,1)");
    if (sigma <= 0.0 || dim < 1) throw std::invalid_argument("make_plan: bad sigma or dim");
    LocalPlan p;
    p.epsilon = epsilon;
    p.sigma = sigma;
    p.dim = dim;
    p.lambda = 0.5 + sigma / dim;
    p.kappa3 = kappa3;
    p.kappa4 = kappa4;
    p.N = std::max(1, int(std::floor(std::pow(2.0 * kappa3 / epsilon, 1.0 / sigma))));
    p.s = long(std::ceil(
        std::pow(std::pow(3.0, dim + 1) * kappa3 * kappa4 / epsilon, 1.0 / p.lambda)));
    return p;
}

void draw_points(LocalPlan& p) {
    RandomStream rng(p.seed);
    p.points.resize(size_t(p.m));
    for (long i = 0; i < p.m; ++i) p.points[size_t(i)] = rng.point_in_cube(p.dim);
}

}  // namespace

LocalPlan make_plan(double epsilon, double sigma, int dim, double oversample, std::uint64_t seed,
                    double kappa3, double kappa4) {
    LocalPlan p = plan_skeleton(epsilon, sigma, dim, kappa3, kappa4);
    const double ln = std::log(M_E + double(p.lattice_size()));
    p.m = long(std::ceil(oversample * double(p.s) * ln * ln * ln * ln));
    p.m = std::max(p.m, 1L);
    p.seed = seed;
    draw_points(p);
    return p;
}

LocalPlan make_plan_sized(double epsilon, double sigma, int dim, long m, std::uint64_t seed,
                          double kappa3, double kappa4) {
    if (m < 1) throw std::invalid_argument("make_plan_sized: m must be >= 1");
    LocalPlan p = plan_skeleton(epsilon, sigma, dim, kappa3, kappa4);
    p.m = m;
    p.seed = seed;
    draw_points(p);
    return p;
}

TrigPoly localized_coeffs(const FourierSum& f, const PlateauCutoff& cutoff, int radius) {
    if (f.dim != cutoff.dim()) throw std::invalid_argument("localized_coeffs: dim mismatch");
    TrigPoly c(f.dim, radius);
    Eigen::VectorXd shift(f.dim);
    for (Eigen::Index idx = 0; idx < c.lattice_size(); ++idx) {
        const Eigen::VectorXi n = c.unflatten(idx);
        Complex acc(0.0, 0.0);
        for (int j = 0; j < f.atom_count(); ++j) {
            for (int i = 0; i < f.dim; ++i) shift[i] = double(n[i]) - f.freqs(i, j);
            acc += f.amps[j] * cutoff.transform(shift);
        }
        c.coeffs[idx] = acc;
    }
    return c;
}

SummabilityReport weighted_summability(const FourierSum& f, const PlateauCutoff& cutoff,
                                       double sigma, int radius) {
    if (f.dim != 1 || cutoff.dim() != 1)
        throw std::invalid_argument("weighted_summability: one-dimensional oracle");
    const TrigPoly c = localized_coeffs(f, cutoff, radius);
    SummabilityReport rep;
    const Weight w{sigma};
    for (Eigen::Index idx = 0; idx < c.lattice_size(); ++idx) {
        const Eigen::VectorXi n = c.unflatten(idx);
        rep.head += w(double(n[0])) * std::abs(c.coeffs[idx]);
    }
    double max_freq = 0.0, mass = 0.0;
    for (int j = 0; j < f.atom_count(); ++j) {
        max_freq = std::max(max_freq, std::abs(f.freqs(0, j)));
        mass += std::abs(f.amps[j]);
    }
    if (2.0 * max_freq > radius)
        throw std::invalid_argument("weighted_summability: radius must be >= 2 max |xi_j|");
    // per-atom triangle inequality: sum the exact transform moduli over the
    // tail lattice, with the loose power-law bound covering the far remainder
    const int big = std::max(16 * radius, 4096);
    for (int j = 0; j < f.atom_count(); ++j) {
        const double a = std::abs(f.amps[j]);
        double s = 0.0;
        for (int n = radius + 1; n <= big; ++n)
            s += w(double(n)) * std::abs(cutoff.transform1(double(n) - f.freqs(0, j))) +
                 w(double(-n)) * std::abs(cutoff.transform1(double(-n) - f.freqs(0, j)));
        rep.tail_bound += a * s;
    }
    rep.tail_bound += mass * cutoff.weighted_tail_bound(sigma, double(big));
    return rep;
}

TrigPoly reconstruct_local(const Eigen::VectorXd& samples, const LocalPlan& plan,
                           const PlateauCutoff& cutoff, const ToleranceConfig& solver_cfg) {
    if (samples.size() != plan.m)
        throw std::invalid_argument("reconstruct_local: samples.size() != plan.m");
    const MeasurementSystem sys =
        build_measurement_system(plan.dim, plan.lattice_bound(), plan.points);
    Eigen::VectorXcd z(plan.m);
    for (long i = 0; i < plan.m; ++i)
        z[i] = Complex(samples[i] * cutoff.eval(plan.points[size_t(i)]), 0.0);
    const SolverReport rep = bpdn_solve(sys, z, plan.epsilon, solver_cfg);
    if (!rep.converged) {
        std::ostringstream msg;
        msg << "reconstruct_local: solver did not converge (iters=" << rep.iterations
            << " residual=" << rep.residual << " allowed=" << plan.epsilon * std::sqrt(double(plan.m))
            << " gap=" << rep.gap << ")";
        throw std::runtime_error(msg.str());
    }
    TrigPoly h(plan.dim, plan.lattice_bound());
    h.coeffs = rep.solution;
    return h;
}

}  // namespace barron
