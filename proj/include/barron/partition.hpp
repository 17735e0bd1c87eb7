#pragma once

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <vector>

namespace barron {

// Index of one dyadic rectangle: depth vector n in N_0^d and sign pattern
// theta in {+1,-1}^d.
struct CellIndex {
    Eigen::VectorXi n;
    Eigen::VectorXi theta;
};

// a_n = 1/4 sum_{j<n} 2^{-j} = (1 - 2^{-n}) / 2; exact in binary floating point.
double endpoint(int n);

// One rectangle Q_n^theta with its affine maps
//   Phi(x) = fwd_scale .* x + fwd_offset   (Q -> [-1/4,1/4)^d)
//   Psi(t) = inv_scale .* t + inv_offset   (inverse; Psi(Omega) subset Omega).
// Membership follows the half-open convention I_n^+ = [a_n, a_{n+1}) on the
// positive side, mirrored on the negative side with x = 0 assigned to theta=+.
struct Cell {
    CellIndex idx;
    Eigen::VectorXd fwd_scale, fwd_offset;
    Eigen::VectorXd inv_scale, inv_offset;

    Eigen::VectorXd forward(const Eigen::VectorXd& x) const {
        return (fwd_scale.array() * x.array() + fwd_offset.array()).matrix();
    }
    Eigen::VectorXd inverse(const Eigen::VectorXd& t) const {
        return (inv_scale.array() * t.array() + inv_offset.array()).matrix();
    }
    bool contains(const Eigen::VectorXd& x) const;
    double volume() const;  // 2^{-2d} * 2^{-|n|_1}
};

Cell cell(const CellIndex& idx);

// The unique cell index containing x (coordinates with |x_i| = 1/2 belong to
// no dyadic interval; nullopt is returned for those).
std::optional<CellIndex> locate(const Eigen::VectorXd& x);

// I(eps) = { n in N_0^d : eps * 2^{|n|_1/4} < 1 }, lexicographically sorted.
std::vector<Eigen::VectorXi> active_set(double epsilon, int dim);

// m(n) = ceil( kappa0 * (eps 2^{|n|_1/4})^{-1/lambda}
//              * ln^4(e + 1/(eps 2^{|n|_1/4})) ).
// The scalar-generic value lets tests re-evaluate the ceiling argument in
// quad precision to guard boundary flips.
template <typename Scalar>
Scalar budget_value(int n_l1, Scalar epsilon, Scalar lambda, Scalar kappa0) {
    using std::exp2;
    using std::log;
    using std::pow;
    const Scalar t = epsilon * pow(Scalar(2), Scalar(n_l1) / Scalar(4));
    const Scalar ln = log(Scalar(M_E) + Scalar(1) / t);
    return kappa0 * pow(t, Scalar(-1) / lambda) * ln * ln * ln * ln;
}

// Throws if n is not active for this epsilon.
long budget(const Eigen::VectorXi& n, double epsilon, double lambda, double kappa0);

}  // namespace barron
