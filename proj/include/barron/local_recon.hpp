#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "barron/cutoff.hpp"
#include "barron/fourier_sum.hpp"
#include "barron/l1_solver.hpp"
#include "barron/trig_poly.hpp"

namespace barron {

// Sampling plan for one local reconstruction: recover f on [-1/4,1/4]^d from
// samples on [-1/2,1/2]^d.
struct LocalPlan {
    double epsilon = 0.5;
    double sigma = 1.0;
    int dim = 1;
    double lambda = 1.5;  // 1/2 + sigma/d
    int N = 0;            // spectral radius; lattice is |k|_inf <= 2N
    long s = 0;           // sparsity target sizing the sample budget
    long m = 0;
    double kappa3 = 1.0;
    double kappa4 = 1.0;
    std::uint64_t seed = 0;
    std::vector<Eigen::VectorXd> points;  // i.i.d. uniform on the cube

    int lattice_bound() const { return 2 * N; }
    long lattice_size() const {
        long n = 1;
        for (int i = 0; i < dim; ++i) n *= 4L * N + 1L;
        return n;
    }
};

// Parameter choices N = floor((2 kappa3/eps)^{1/sigma}),
// s = ceil((3^{d+1} kappa3 kappa4 / eps)^{1/lambda}),
// m = ceil(oversample * s * ln^4(e + |I|)).  Throws for eps outside (0,1);
// callers wanting eps >= 1 should use the zero reconstruction instead.
LocalPlan make_plan(double epsilon, double sigma, int dim, double oversample, std::uint64_t seed,
                    double kappa3 = 1.0, double kappa4 = 1.0);

// Same lattice sizing, but with an externally prescribed sample count
// (used by the global pipeline, where per-cell budgets come from the
// partition module).
LocalPlan make_plan_sized(double epsilon, double sigma, int dim, long m, std::uint64_t seed,
                          double kappa3 = 1.0, double kappa4 = 1.0);

// Exact Fourier coefficients of the localized periodization phi*f on the box
// |n|_inf <= radius: c_n = sum_j c_j phi_hat(n - xi_j).  Serves as the test
// oracle for the localized expansion.
TrigPoly localized_coeffs(const FourierSum& f, const PlateauCutoff& cutoff, int radius);

struct SummabilityReport {
    double head = 0.0;        // sum_{|n| <= R} (1+|n|)^sigma |c_n|
    double tail_bound = 0.0;  // closed-form bound for the rest
    double total() const { return head + tail_bound; }
};

// Truncated weighted coefficient sum plus closed-form spline tail (d = 1).
// The reported total is the empirical kappa3 for this f.
SummabilityReport weighted_summability(const FourierSum& f, const PlateauCutoff& cutoff,
                                       double sigma, int radius);

// Samples -> z_i = y_i * phi(x_i) -> ell^1 recovery with eta = epsilon.
// Returns the recovered polynomial on the plan lattice; throws on solver
// non-convergence (with the solver diagnostics in the message).
TrigPoly reconstruct_local(const Eigen::VectorXd& samples, const LocalPlan& plan,
                           const PlateauCutoff& cutoff, const ToleranceConfig& solver_cfg = {});

}  // namespace barron
