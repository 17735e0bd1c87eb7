#pragma once

#include <Eigen/Core>
#include <complex>
#include <vector>

namespace barron {

using Complex = std::complex<double>;

// Point evaluations of the Fourier system e_k, |k|_inf <= bound, at the given
// sampling points: A[i, l] = exp(2 pi i <k_l, x_i>).  Every entry has modulus
// one, so rows have Euclidean norm sqrt(|I|).  Column ordering matches
// TrigPoly's flat lattice indexing.
struct MeasurementSystem {
    int dim = 1;
    int bound = 0;  // lattice radius (2N in the local reconstruction)
    std::vector<Eigen::VectorXd> points;
    Eigen::MatrixXcd A;

    Eigen::Index lattice_size() const { return A.cols(); }
    Eigen::VectorXi lattice_point(Eigen::Index idx) const;
};

MeasurementSystem build_measurement_system(int dim, int bound,
                                           const std::vector<Eigen::VectorXd>& points);

struct ToleranceConfig {
    double feas_tol = 1e-8;   // feasibility slack, scaled by (1 + |y|_2)
    double opt_tol = 1e-6;    // duality-gap slack, scaled by (1 + objective)
    long max_iters = 50000;
    long check_every = 25;
};

struct SolverReport {
    Eigen::VectorXcd solution;
    double residual = 0.0;   // |y - A zeta|_2
    double objective = 0.0;  // |zeta|_1
    double gap = 0.0;        // duality-gap certificate at exit
    long iterations = 0;
    bool converged = false;
};

// minimize |zeta|_1  subject to  |y - A zeta|_2 <= eta sqrt(m)
//
// Chambolle-Pock primal-dual splitting: the dual update projects onto the
// Euclidean ball of radius eta sqrt(m) (via its support-function prox) and the
// primal update is complex soft-thresholding; step sizes come from a
// power-method estimate of |A|.  Optimality is certified by a duality-gap
// bound at exit.  converged = false means the report is diagnostic only.
SolverReport bpdn_solve(const MeasurementSystem& sys, const Eigen::VectorXcd& y, double eta,
                        const ToleranceConfig& tol = {});

// Maximum modulus of normalized column inner products of A.
double coherence_diag(const MeasurementSystem& sys);

// largest singular value of A by power iteration on A^H A
double operator_norm_estimate(const Eigen::MatrixXcd& A, int iters = 40);

}  // namespace barron
