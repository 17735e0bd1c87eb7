#pragma once

#include <Eigen/Core>
#include <functional>

namespace barron {

// Uniform tensor grid over [-1/2,1/2]^d with local tensor Lagrange
// interpolation of degree q = ceil(sigma) on the q+1 nearest nodes per axis.
// Realizes the m^{-sigma/d} sup-norm reconstruction rate for C^sigma targets.
struct GridInterpolant {
    int dim = 1;
    int nodes_per_axis = 2;
    int degree = 1;                // q
    Eigen::VectorXd values;        // nodes_per_axis^d samples, axis-0 fastest

    double node(int i) const { return -0.5 + double(i) / (nodes_per_axis - 1); }
    Eigen::Index flatten(const Eigen::VectorXi& id) const;
    long total_nodes() const;
    bool populated() const { return values.size() == total_nodes(); }
};

// n = floor(m^{1/d}) nodes per axis, clamped to n >= q+1.
// Throws if m < (ceil(sigma)+1)^d.
GridInterpolant grid_plan(long m, int dim, double sigma);

// fill the grid with fn values
void populate(GridInterpolant& g, const std::function<double(const Eigen::VectorXd&)>& fn);

// value of the local degree-q tensor Lagrange interpolant at x
double interpolate_eval(const GridInterpolant& g, const Eigen::VectorXd& x);

// sup of sum_i |l_i(x)| over the stencil's evaluation range (one axis),
// computed by dense scan; the d-dimensional amplification factor is this to
// the power d.
double lebesgue_constant(int degree, int nodes_per_axis, int scan_resolution = 4000);

}  // namespace barron
