#include "barron/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "barron/rng.hpp"

namespace barron {

QuadRule gauss_legendre(int order) {
    if (order < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    QuadRule r;
    r.nodes.resize(order);
    r.weights.resize(order);
    const int m = (order + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev-based initial guess
        double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
        double pp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < order; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
            }
            pp = order * (x * p0 - p1) / (x * x - 1.0);
            double dx = p0 / pp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        r.nodes[i] = -x;
        r.nodes[order - 1 - i] = x;
        double w = 2.0 / ((1.0 - x * x) * pp * pp);
        r.weights[i] = w;
        r.weights[order - 1 - i] = w;
    }
    return r;
}

QuadRule gauss_legendre(int order, double a, double b) {
    QuadRule r = gauss_legendre(order);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    r.nodes = (r.nodes.array() * half + mid).matrix();
    r.weights *= half;
    return r;
}

double integrate_box(const std::function<double(const Eigen::VectorXd&)>& f, int dim,
                     double lo, double hi, int order_per_axis) {
    QuadRule r = gauss_legendre(order_per_axis, lo, hi);
    const int n = order_per_axis;
    Eigen::VectorXd x(dim);
    std::vector<int> idx(dim, 0);
    double total = 0.0;
    while (true) {
        double w = 1.0;
        for (int i = 0; i < dim; ++i) {
            x[i] = r.nodes[idx[i]];
            w *= r.weights[idx[i]];
        }
        total += w * f(x);
        int axis = 0;
        while (axis < dim && ++idx[axis] == n) idx[axis++] = 0;
        if (axis == dim) break;
    }
    return total;
}

double lp_norm_estimate(const std::function<double(const Eigen::VectorXd&)>& fn, double p,
                        int resolution, int dim) {
    if (resolution < 2) throw std::invalid_argument("lp_norm_estimate: resolution < 2");
    if (p < 1.0) throw std::invalid_argument("lp_norm_estimate: p < 1");
    if (std::isinf(p)) {
        Eigen::VectorXd x(dim);
        std::vector<int> idx(dim, 0);
        double best = 0.0;
        while (true) {
            for (int i = 0; i < dim; ++i) x[i] = -0.5 + (idx[i] + 0.5) / resolution;
            best = std::max(best, std::abs(fn(x)));
            int axis = 0;
            while (axis < dim && ++idx[axis] == resolution) idx[axis++] = 0;
            if (axis == dim) break;
        }
        return best;
    }
    double v = integrate_box([&](const Eigen::VectorXd& x) { return std::pow(std::abs(fn(x)), p); },
                             dim, -0.5, 0.5, resolution);
    return std::pow(std::max(v, 0.0), 1.0 / p);
}

double lp_norm_monte_carlo(const std::function<double(const Eigen::VectorXd&)>& fn, double p,
                           int samples, int dim, std::uint64_t seed) {
    RandomStream rng(seed);
    double acc = 0.0;
    for (int i = 0; i < samples; ++i) acc += std::pow(std::abs(fn(rng.point_in_cube(dim))), p);
    return std::pow(acc / samples, 1.0 / p);
}

}  // namespace barron
