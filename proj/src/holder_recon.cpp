#include "barron/holder_recon.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace barron {

Eigen::Index GridInterpolant::flatten(const Eigen::VectorXi& id) const {
    Eigen::Index idx = 0, stride = 1;
    for (int i = 0; i < dim; ++i) {
        idx += id[i] * stride;
        stride *= nodes_per_axis;
    }
    return idx;
}

long GridInterpolant::total_nodes() const {
    long n = 1;
    for (int i = 0; i < dim; ++i) n *= nodes_per_axis;
    return n;
}

GridInterpolant grid_plan(long m, int dim, double sigma) {
    if (dim < 1 || sigma <= 0.0) throw std::invalid_argument("grid_plan: bad dim or sigma");
    const int q = int(std::ceil(sigma));
    long needed = 1;
    for (int i = 0; i < dim; ++i) needed *= q + 1;
    if (m < needed)
        throw std::invalid_argument("grid_plan: budget m too small for degree-" +
                                    std::to_string(q) + " interpolation");
    GridInterpolant g;
    g.dim = dim;
    g.degree = q;
    g.nodes_per_axis = std::max(q + 1, int(std::floor(std::pow(double(m), 1.0 / dim))));
    return g;
}

void populate(GridInterpolant& g, const std::function<double(const Eigen::VectorXd&)>& fn) {
    g.values.resize(g.total_nodes());
    Eigen::VectorXi id = Eigen::VectorXi::Zero(g.dim);
    Eigen::VectorXd x(g.dim);
    for (Eigen::Index idx = 0; idx < g.values.size(); ++idx) {
        for (int i = 0; i < g.dim; ++i) x[i] = g.node(id[i]);
        g.values[idx] = fn(x);
        int axis = 0;
        while (axis < g.dim && ++id[axis] == g.nodes_per_axis) id[axis++] = 0;
    }
}

namespace {

// Lagrange weights for the q+1 consecutive nodes starting at s, evaluated at
// grid coordinate t (units of node spacing).
void lagrange_weights(int q, int s, double t, std::vector<double>& w) {
    w.assign(size_t(q) + 1, 1.0);
    for (int i = 0; i <= q; ++i)
        for (int j = 0; j <= q; ++j) {
            if (j == i) continue;
            w[size_t(i)] *= (t - (s + j)) / double(i - j);
        }
}

int window_start(int q, int n, double t) {
    int s = int(std::lround(t - 0.5 * q));
    return std::max(0, std::min(s, n - 1 - q));
}

}  // namespace

double interpolate_eval(const GridInterpolant& g, const Eigen::VectorXd& x) {
    if (!g.populated()) throw std::logic_error("interpolate_eval: grid not populated");
    if (x.size() != g.dim) throw std::invalid_argument("interpolate_eval: dimension mismatch");
    const int q = g.degree, n = g.nodes_per_axis;
    std::vector<std::vector<double>> w(size_t(g.dim));
    std::vector<int> start(size_t(g.dim));
    for (int i = 0; i < g.dim; ++i) {
        const double t = (x[i] + 0.5) * (n - 1);
        start[size_t(i)] = window_start(q, n, t);
        lagrange_weights(q, start[size_t(i)], t, w[size_t(i)]);
    }
    double acc = 0.0;
    Eigen::VectorXi offset = Eigen::VectorXi::Zero(g.dim);
    Eigen::VectorXi id(g.dim);
    while (true) {
        double weight = 1.0;
        for (int i = 0; i < g.dim; ++i) {
            weight *= w[size_t(i)][size_t(offset[i])];
            id[i] = start[size_t(i)] + offset[i];
        }
        acc += weight * g.values[g.flatten(id)];
        int axis = 0;
        while (axis < g.dim && ++offset[axis] == q + 1) offset[axis++] = 0;
        if (axis == g.dim) break;
    }
    return acc;
}

double lebesgue_constant(int degree, int nodes_per_axis, int scan_resolution) {
    const int q = degree, n = nodes_per_axis;
    if (n < q + 1) throw std::invalid_argument("lebesgue_constant: too few nodes");
    double best = 0.0;
    std::vector<double> w;
    for (int k = 0; k < scan_resolution; ++k) {
        const double t = (n - 1) * (k + 0.5) / scan_resolution;
        const int s = window_start(q, n, t);
        lagrange_weights(q, s, t, w);
        double sum = 0.0;
        for (double v : w) sum += std::abs(v);
        best = std::max(best, sum);
    }
    return best;
}

}  // namespace barron
