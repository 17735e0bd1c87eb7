#include "barron/l1_solver.hpp"

#include <Eigen/Cholesky>
#include <cmath>
#include <stdexcept>

namespace barron {

Eigen::VectorXi MeasurementSystem::lattice_point(Eigen::Index idx) const {
    Eigen::VectorXi k(dim);
    const Eigen::Index side = 2 * Eigen::Index(bound) + 1;
    for (int i = 0; i < dim; ++i) {
        k[i] = int(idx % side) - bound;
        idx /= side;
    }
    return k;
}

MeasurementSystem build_measurement_system(int dim, int bound,
                                           const std::vector<Eigen::VectorXd>& points) {
    if (dim < 1 || bound < 0) throw std::invalid_argument("build_measurement_system: bad lattice");
    if (points.empty()) throw std::invalid_argument("build_measurement_system: need m >= 1 points");
    MeasurementSystem sys;
    sys.dim = dim;
    sys.bound = bound;
    sys.points = points;
    Eigen::Index n = 1;
    for (int i = 0; i < dim; ++i) n *= 2 * Eigen::Index(bound) + 1;
    const Eigen::Index m = Eigen::Index(points.size());
    sys.A.resize(m, n);
    for (Eigen::Index l = 0; l < n; ++l) {
        const Eigen::VectorXi k = sys.lattice_point(l);
        for (Eigen::Index i = 0; i < m; ++i) {
            double phase = 0.0;
            for (int j = 0; j < dim; ++j) phase += k[j] * points[size_t(i)][j];
            sys.A(i, l) = std::polar(1.0, 2.0 * M_PI * phase);
        }
    }
    return sys;
}

double operator_norm_estimate(const Eigen::MatrixXcd& A, int iters) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(A.cols());
    v /= v.norm();
    double lambda = 0.0;
    for (int it = 0; it < iters; ++it) {
        Eigen::VectorXcd w = A.adjoint() * (A * v);
        lambda = w.norm();
        if (lambda == 0.0) return 0.0;
        v = w / lambda;
    }
    return std::sqrt(lambda);
}

namespace {

void soft_threshold(Eigen::VectorXcd& z, double t) {
    for (Eigen::Index i = 0; i < z.size(); ++i) {
        const double a = std::abs(z[i]);
        z[i] = a > t ? z[i] * ((a - t) / a) : std::complex<double>(0.0, 0.0);
    }
}

Eigen::VectorXcd project_ball(const Eigen::VectorXcd& v, const Eigen::VectorXcd& center,
                              double radius) {
    const Eigen::VectorXcd diff = v - center;
    const double d = diff.norm();
    if (d <= radius) return v;
    return center + diff * (radius / std::max(d, 1e-300));
}

}  // namespace

// Splitting with consensus variables z (soft-thresholding) and w (projection
// onto the ball of radius eta sqrt(m) around y), coupled through the quadratic
// step (I + A^H A)^{-1}, which is factorized once (via the m x m Gram matrix
// when the system is underdetermined).  The penalty parameter is rebalanced
// from the primal/dual residual ratio; the exit certificate is a duality-gap
// bound built from the scaled multiplier of the w-constraint.
SolverReport bpdn_solve(const MeasurementSystem& sys, const Eigen::VectorXcd& y, double eta,
                        const ToleranceConfig& tol) {
    const Eigen::Index m = sys.A.rows(), n = sys.A.cols();
    if (y.size() != m) throw std::invalid_argument("bpdn_solve: y length != number of points");
    if (eta < 0.0) throw std::invalid_argument("bpdn_solve: eta must be >= 0");

    const double radius = eta * std::sqrt(double(m));
    const double feas_slack = tol.feas_tol * (1.0 + y.norm());

    const bool woodbury = m < n;
    Eigen::LLT<Eigen::MatrixXcd> llt;
    if (woodbury) {
        Eigen::MatrixXcd G = sys.A * sys.A.adjoint();
        G.diagonal().array() += 1.0;
        llt.compute(G);
    } else {
        Eigen::MatrixXcd G = sys.A.adjoint() * sys.A;
        G.diagonal().array() += 1.0;
        llt.compute(G);
    }
    auto solve_normal = [&](const Eigen::VectorXcd& rhs) -> Eigen::VectorXcd {
        if (woodbury) return rhs - sys.A.adjoint() * llt.solve(sys.A * rhs);
        return llt.solve(rhs);
    };

    Eigen::VectorXcd zeta = Eigen::VectorXcd::Zero(n);
    Eigen::VectorXcd z = zeta, uz = zeta;
    Eigen::VectorXcd w = Eigen::VectorXcd::Zero(m), uw = w;
    double rho = 1.0;
    const double relax = 1.7;

    SolverReport rep;
    Eigen::VectorXcd z_prev = z, w_prev = w;
    for (long it = 1; it <= tol.max_iters; ++it) {
        zeta = solve_normal((z - uz) + sys.A.adjoint() * (w - uw));
        const Eigen::VectorXcd Az = sys.A * zeta;
        z_prev.swap(z);
        w_prev.swap(w);
        const Eigen::VectorXcd zeta_hat = relax * zeta + (1.0 - relax) * z_prev;
        const Eigen::VectorXcd Az_hat = relax * Az + (1.0 - relax) * w_prev;
        z = zeta_hat + uz;
        soft_threshold(z, 1.0 / rho);
        w = project_ball(Az_hat + uw, y, radius);
        uz += zeta_hat - z;
        uw += Az_hat - w;

        if (it % tol.check_every == 0 || it == tol.max_iters) {
            rep.residual = (Az - y).norm();
            rep.objective = zeta.cwiseAbs().sum();
            Eigen::VectorXcd Atu = sys.A.adjoint() * (rho * uw);
            const double nu = Atu.size() > 0 ? Atu.cwiseAbs().maxCoeff() : 0.0;
            Eigen::VectorXcd ut = rho * uw;
            if (nu > 1.0) ut /= nu;
            const double dual = -(ut.dot(y)).real() - radius * ut.norm();
            rep.gap = rep.objective - dual;
            rep.iterations = it;
            const double split = (zeta - z).norm();
            const bool feasible = rep.residual <= radius + feas_slack;
            const bool optimal = rep.gap <= tol.opt_tol * (1.0 + rep.objective) &&
                                 split <= tol.opt_tol * (1.0 + zeta.norm());
            if (feasible && optimal) {
                rep.converged = true;
                break;
            }
            // residual balancing keeps the two splits progressing together;
            // scaled multipliers shrink when the penalty grows
            const double primal_res = std::sqrt((zeta - z).squaredNorm() + (Az - w).squaredNorm());
            const double dual_res =
                rho * std::sqrt((z - z_prev).squaredNorm() + (w - w_prev).squaredNorm());
            if (primal_res > 10.0 * dual_res) {
                rho *= 2.0;
                uz *= 0.5;
                uw *= 0.5;
            } else if (dual_res > 10.0 * primal_res) {
                rho *= 0.5;
                uz *= 2.0;
                uw *= 2.0;
            }
        }
    }
    rep.solution = zeta;
    return rep;
}

double coherence_diag(const MeasurementSystem& sys) {
    const Eigen::MatrixXcd G = sys.A.adjoint() * sys.A;
    const Eigen::Index n = G.rows();
    double best = 0.0;
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = i + 1; j < n; ++j) {
            const double denom = std::sqrt(G(i, i).real() * G(j, j).real());
            best = std::max(best, std::abs(G(i, j)) / denom);
        }
    return best;
}

}  // namespace barron
