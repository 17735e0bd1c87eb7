#pragma once

#include <Eigen/Core>
#include <functional>

namespace barron {

struct QuadRule {
    Eigen::VectorXd nodes;    // on [-1, 1]
    Eigen::VectorXd weights;  // sum to 2
};

// Gauss-Legendre rule of the given order (number of nodes).
QuadRule gauss_legendre(int order);

// Nodes/weights mapped to [a, b].
QuadRule gauss_legendre(int order, double a, double b);

// Tensor-product Gauss-Legendre integral of f over the box [lo, hi]^d.
double integrate_box(const std::function<double(const Eigen::VectorXd&)>& f, int dim,
                     double lo, double hi, int order_per_axis);

// L^p norm of fn on the cube [-1/2,1/2]^d.  p = infinity -> dense-grid max with
// `resolution` points per axis; p < infinity -> tensor Gauss-Legendre of |fn|^p
// with `resolution` nodes per axis.  Throws std::invalid_argument for
// resolution < 2 or p < 1.
double lp_norm_estimate(const std::function<double(const Eigen::VectorXd&)>& fn, double p,
                        int resolution, int dim);

// Monte Carlo estimate of the same quantity (p < infinity), used as a cross-check.
double lp_norm_monte_carlo(const std::function<double(const Eigen::VectorXd&)>& fn, double p,
                           int samples, int dim, std::uint64_t seed);

}  // namespace barron
