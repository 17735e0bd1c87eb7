#include "barron/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <ostream>
#include <set>
#include <stdexcept>

#include "barron/bspline.hpp"
#include "barron/quadrature.hpp"

namespace barron {

double BumpProfile::eval(double t) const { return cardinal_bspline<double>(order, order * t); }

double BumpProfile::transform_abs(double xi) const {
    double s = std::abs(sinc(xi / order));
    double acc = 1.0;
    for (int j = 0; j < order; ++j) acc *= s;
    return acc / order;
}

double BumpProfile::lp_norm(double p) const {
    if (std::isinf(p)) return cardinal_bspline<double>(order, 0.5 * order);  // peak at center
    // piecewise polynomial between knots k/order; per-knot Gauss-Legendre is
    // exact for integer p and machine-accurate otherwise
    const QuadRule base = gauss_legendre(32);
    double acc = 0.0;
    for (int k = 0; k < order; ++k) {
        const double a = double(k) / order, b = double(k + 1) / order;
        for (int i = 0; i < base.nodes.size(); ++i) {
            const double t = 0.5 * (a + b) + 0.5 * (b - a) * base.nodes[i];
            acc += 0.5 * (b - a) * base.weights[i] * std::pow(eval(t), p);
        }
    }
    return std::pow(acc, 1.0 / p);
}

BumpProfile make_profile(int dim, double sigma) {
    return BumpProfile{dim + 3 + int(std::ceil(sigma))};
}

double BumpSum::eval(const Eigen::VectorXd& x) const {
    if (x.size() != dim) throw std::invalid_argument("BumpSum::eval: dimension mismatch");
    Eigen::VectorXi n(dim);
    for (int i = 0; i < dim; ++i) {
        const double u = (x[i] + 0.5) * N;
        const double fl = std::floor(u);
        if (u <= 0.0 || u >= N || u == fl) return 0.0;  // outside or on a cell face
        n[i] = int(fl);
    }
    const int sign = sign_at_cell(n);
    if (sign == 0) return 0.0;
    double v = amplitude * sign;
    for (int i = 0; i < dim; ++i) v *= profile.eval((x[i] + 0.5) * N - n[i]);
    return v;
}

int BumpSum::sign_at_cell(const Eigen::VectorXi& n) const {
    for (size_t j = 0; j < lambda.size(); ++j)
        if ((lambda[j].array() == n.array()).all()) return theta[j];
    return 0;
}

double BumpSum::lp_norm(double p) const {
    if (lambda.empty()) return 0.0;
    if (std::isinf(p)) return std::abs(amplitude) * std::pow(profile.lp_norm(p), dim);
    return std::abs(amplitude) * std::pow(profile.lp_norm(p), dim) *
           std::pow(double(N), -double(dim) / p) * std::pow(double(lambda.size()), 1.0 / p);
}

BumpSum bump_sum_build(int N, const std::vector<Eigen::VectorXi>& lambda,
                       const std::vector<int>& theta, const BumpProfile& profile, int dim) {
    if (N < 1) throw std::invalid_argument("bump_sum_build: N must be >= 1");
    if (lambda.size() != theta.size())
        throw std::invalid_argument("bump_sum_build: theta must be defined on Lambda");
    for (const auto& n : lambda) {
        if (n.size() != dim) throw std::invalid_argument("bump_sum_build: index dimension");
        for (int i = 0; i < dim; ++i)
            if (n[i] < 0 || n[i] >= N) throw std::out_of_range("bump_sum_build: index out of range");
    }
    for (int s : theta)
        if (s != 1 && s != -1) throw std::invalid_argument("bump_sum_build: signs must be +-1");
    BumpSum b;
    b.dim = dim;
    b.N = N;
    b.profile = profile;
    b.lambda = lambda;
    b.theta = theta;
    return b;
}

namespace {

// g_{Lambda,theta}(u) = sum_{n in Lambda} theta_n exp(-2 pi i <n, u>)
Complex bump_symbol(const BumpSum& b, const Eigen::VectorXd& u) {
    Complex acc(0.0, 0.0);
    for (size_t j = 0; j < b.lambda.size(); ++j) {
        double phase = 0.0;
        for (int i = 0; i < b.dim; ++i) phase += b.lambda[j][i] * u[i];
        acc += double(b.theta[j]) * std::polar(1.0, -2.0 * M_PI * phase);
    }
    return acc;
}

// int_{|v|>R} (1+|v|)^sigma |profile_hat(v)| dv in one dimension, bounded via
// |profile_hat(v)| <= (order/(pi |v|))^order / order
double profile_tail_integral(const BumpProfile& prof, double sigma, double R) {
    const double r = double(prof.order);
    if (R < r) throw std::invalid_argument("profile_tail_integral: R too small");
    // (1+v)^sigma <= (2v)^sigma for v >= 1; integrate the power law
    const double expo = r - sigma - 1.0;
    if (expo <= 0.0) throw std::invalid_argument("profile_tail_integral: order too small");
    const double c = std::pow(2.0, sigma) * std::pow(r / M_PI, r) / r;
    return 2.0 * c * std::pow(R, -expo) / expo;
}

double profile_weighted_integral(const BumpProfile& prof, double sigma, double R, int subdiv) {
    // int_{-R}^{R} (1+|v|)^sigma |profile_hat(v)| dv by composite quadrature
    const QuadRule base = gauss_legendre(8);
    double acc = 0.0;
    const double h = 2.0 * R / subdiv;
    for (int k = 0; k < subdiv; ++k) {
        const double a = -R + k * h;
        for (int i = 0; i < base.nodes.size(); ++i) {
            const double v = a + 0.5 * h * (base.nodes[i] + 1.0);
            acc += 0.5 * h * base.weights[i] * std::pow(1.0 + std::abs(v), sigma) *
                   prof.transform_abs(v);
        }
    }
    return acc;
}

}  // namespace

namespace {

// |g_{Lambda,theta}| on the tensor grid, via per-axis contraction with the
// (nodes x N) phase matrix
Eigen::VectorXd symbol_moduli_on_grid(const BumpSum& b, const Eigen::VectorXd& grid) {
    const int nodes = int(grid.size());
    const int d = b.dim, N = b.N;
    Eigen::MatrixXcd M(nodes, N);
    for (int i = 0; i < nodes; ++i)
        for (int n = 0; n < N; ++n) M(i, n) = std::polar(1.0, -2.0 * M_PI * n * grid[i]);
    if (d == 1) {
        Eigen::VectorXcd t = Eigen::VectorXcd::Zero(N);
        for (size_t j = 0; j < b.lambda.size(); ++j) t[b.lambda[j][0]] += double(b.theta[j]);
        return (M * t).cwiseAbs();
    }
    if (d == 2) {
        Eigen::MatrixXcd T = Eigen::MatrixXcd::Zero(N, N);
        for (size_t j = 0; j < b.lambda.size(); ++j)
            T(b.lambda[j][0], b.lambda[j][1]) += double(b.theta[j]);
        const Eigen::MatrixXcd G = M * T * M.transpose();  // axis-0 rows, axis-1 cols
        Eigen::VectorXd out(Eigen::Index(nodes) * nodes);
        for (int i1 = 0; i1 < nodes; ++i1)  // flat index = i0 + nodes * i1
            for (int i0 = 0; i0 < nodes; ++i0) out[i0 + Eigen::Index(nodes) * i1] = std::abs(G(i0, i1));
        return out;
    }
    // direct fallback for higher dimensions
    Eigen::VectorXi id = Eigen::VectorXi::Zero(d);
    Eigen::Index total = 1;
    for (int i = 0; i < d; ++i) total *= nodes;
    Eigen::VectorXd out(total);
    Eigen::VectorXd u(d);
    for (Eigen::Index g = 0; g < total; ++g) {
        for (int i = 0; i < d; ++i) u[i] = grid[id[i]];
        out[g] = std::abs(bump_symbol(b, u));
        int axis = 0;
        while (axis < d && ++id[axis] == nodes) id[axis++] = 0;
    }
    return out;
}

double pow_weight(double base, double sigma) {
    if (sigma == 1.0) return base;
    if (sigma == 2.0) return base * base;
    return std::pow(base, sigma);
}

}  // namespace

BarronBoundReport bump_barron_bound(const BumpSum& b, double sigma) {
    if (b.lambda.empty()) return {};
    const int d = b.dim;
    const double Ns = std::pow(double(b.N), sigma);
    const double cardinality = double(b.lambda.size());

    // 1-D ingredients for the tail: full and truncated weighted transforms
    const double A_full = profile_weighted_integral(b.profile, sigma, 4.0 * b.profile.order, 2048) +
                          profile_tail_integral(b.profile, sigma, 4.0 * b.profile.order);

    // head quadrature grid, fine enough for the fastest oscillation of g
    const int per_axis = std::max(12, 10 * b.N);
    const QuadRule base = gauss_legendre(4);
    const int nodes = per_axis * int(base.nodes.size());
    Eigen::VectorXd grid(nodes), gw(nodes);
    for (int k = 0; k < per_axis; ++k)
        for (int i = 0; i < base.nodes.size(); ++i) {
            const double h = 1.0 / per_axis;
            grid[k * base.nodes.size() + i] = h * (k + 0.5 * (base.nodes[i] + 1.0));
            gw[k * base.nodes.size() + i] = 0.5 * h * base.weights[i];
        }
    const Eigen::VectorXd gmod = symbol_moduli_on_grid(b, grid);

    int R = std::max(4, b.profile.order);
    for (int attempt = 0; attempt < 8; ++attempt) {
        // head: int_{[0,1]^d} |g(u)| W(u) du, lattice sum truncated to |l|_inf <= R
        const int offs = 2 * R + 1;
        Eigen::MatrixXd table(offs, nodes);
        for (int l = -R; l <= R; ++l)
            for (int i = 0; i < nodes; ++i)
                table(l + R, i) = b.profile.transform_abs(grid[i] + l);

        double head = 0.0;
        Eigen::VectorXi node_id = Eigen::VectorXi::Zero(d);
        Eigen::VectorXd u(d);
        Eigen::Index flat = 0;
        while (true) {
            if (gmod[flat] > 1e-15) {
                double wq = 1.0;
                for (int i = 0; i < d; ++i) {
                    u[i] = grid[node_id[i]];
                    wq *= gw[node_id[i]];
                }
                double W = 0.0;
                Eigen::VectorXi l = Eigen::VectorXi::Constant(d, -R);
                while (true) {
                    double prod = 1.0;
                    double norm2 = 0.0;
                    for (int i = 0; i < d; ++i) {
                        prod *= table(l[i] + R, node_id[i]);
                        const double vi = u[i] + l[i];
                        norm2 += vi * vi;
                    }
                    W += pow_weight(1.0 + b.N * std::sqrt(norm2), sigma) * prod;
                    int axis = 0;
                    while (axis < d && ++l[axis] > R) l[axis++] = -R;
                    if (axis == d) break;
                }
                head += wq * gmod[flat] * W;
            }
            ++flat;
            int axis = 0;
            while (axis < d && ++node_id[axis] == nodes) node_id[axis++] = 0;
            if (axis == d) break;
        }

        // tail: |g| <= |Lambda| and (1+N|u|)^sigma <= N^sigma prod_i (1+|u_i|)^sigma
        const double tail1 = profile_tail_integral(b.profile, sigma, double(R));
        const double tail = cardinality * Ns * d * tail1 * std::pow(A_full, d - 1);

        if (tail <= 0.1 * head || head == 0.0) {
            BarronBoundReport rep;
            rep.head = std::abs(b.amplitude) * head;
            rep.tail = std::abs(b.amplitude) * tail;
            rep.bound = rep.head + rep.tail;
            rep.c_cal = rep.bound / (std::abs(b.amplitude) * Ns * std::sqrt(cardinality));
            return rep;
        }
        R *= 2;
    }
    throw std::runtime_error("bump_barron_bound: quadrature tail exceeds 10% of head");
}

FoolingCertificate fooling_function(const std::vector<Eigen::VectorXd>& points, int dim,
                                    double sigma, double p) {
    const int M = int(points.size());
    const int N = std::max(1, int(std::ceil(std::pow(2.0 * M, 1.0 / dim))));

    // cells hit by a sample; points on a closed cell face exclude nothing
    std::set<std::vector<int>> hit;
    for (const auto& x : points) {
        if (int(x.size()) != dim) throw std::invalid_argument("fooling_function: point dimension");
        std::vector<int> micro_cell(std::size_t(dim), 0);
        bool interior = true;
        for (int i = 0; i < dim && interior; ++i) {
            const double u = (x[i] + 0.5) * N;
            const double fl = std::floor(u);
            if (u <= 0.0 || u >= N || u == fl) interior = false;
            micro_cell[size_t(i)] = int(fl);
        }
        if (interior) hit.insert(micro_cell);
    }

    std::vector<Eigen::VectorXi> unsampled;
    Eigen::VectorXi n = Eigen::VectorXi::Zero(dim);
    std::vector<int> key(std::size_t(dim), 0);
    while (true) {
        for (int i = 0; i < dim; ++i) key[size_t(i)] = n[i];
        if (!hit.count(key)) unsampled.push_back(n);
        int axis = 0;
        while (axis < dim && ++n[axis] == N) n[axis++] = 0;
        if (axis == dim) break;
    }

    std::vector<Eigen::VectorXi> lambda =
        p > 2.0 ? std::vector<Eigen::VectorXi>{unsampled.front()} : unsampled;
    const std::vector<int> theta(lambda.size(), 1);

    BumpSum psi = bump_sum_build(N, lambda, theta, make_profile(dim, sigma), dim);
    const BarronBoundReport raw = bump_barron_bound(psi, sigma);
    psi.amplitude = 1.0 / raw.bound;

    FoolingCertificate cert;
    cert.function = psi;
    cert.sigma = sigma;
    cert.p = p;
    cert.barron_bound = bump_barron_bound(psi, sigma).bound;
    cert.lp_norm = psi.lp_norm(p);
    cert.point_count = M;
    cert.grid_resolution = N;
    cert.lambda_hit = int(lambda.size());
    cert.vanishing_verified = true;
    for (const auto& x : points)
        if (psi.eval(x) != 0.0) cert.vanishing_verified = false;
    if (M >= 1) {
        const double rate = 1.0 / std::max(2.0, p) + sigma / dim;
        cert.lower_bound_constant = cert.lp_norm * std::pow(double(M), rate);
    }
    return cert;
}

void write_certificate(std::ostream& os, const FoolingCertificate& cert) {
    os << std::setprecision(12);
    os << cert.grid_resolution << ',' << cert.lambda_hit << ',' << cert.barron_bound << ','
       << cert.lp_norm << ',' << cert.point_count << '\n';
}

FourierSum cosine_family(const Eigen::VectorXi& eta, double sigma) {
    (void)sigma;
    FourierSum f;
    f.dim = int(eta.size());
    if (eta.isZero()) {
        f.freqs = Eigen::MatrixXd::Zero(f.dim, 1);
        f.amps = Eigen::VectorXcd::Ones(1);
        return f;
    }
    f.freqs.resize(f.dim, 2);
    f.freqs.col(0) = eta.cast<double>();
    f.freqs.col(1) = -eta.cast<double>();
    f.amps.resize(2);
    f.amps[0] = f.amps[1] = Complex(std::sqrt(2.0) / 2.0, 0.0);
    return f;
}

double linear_avg_residual(const std::vector<std::function<double(const Eigen::VectorXd&)>>& basis,
                           double gamma_level, double sigma, int dim, int quad_order) {
    const double c1 = std::sqrt(2.0);
    const int max_eta = int(std::floor(std::pow(gamma_level / c1, 1.0 / sigma) - 1.0));
    if (max_eta < 0) throw std::invalid_argument("linear_avg_residual: I_gamma is empty");

    // tensor quadrature grid over Omega
    const QuadRule rule = gauss_legendre(quad_order, -0.5, 0.5);
    long grid = 1;
    for (int i = 0; i < dim; ++i) grid *= quad_order;
    Eigen::MatrixXd pts(dim, grid);
    Eigen::VectorXd w(grid);
    Eigen::VectorXi id = Eigen::VectorXi::Zero(dim);
    for (long g = 0; g < grid; ++g) {
        double wq = 1.0;
        for (int i = 0; i < dim; ++i) {
            pts(i, g) = rule.nodes[id[i]];
            wq *= rule.weights[id[i]];
        }
        w[g] = wq;
        int axis = 0;
        while (axis < dim && ++id[axis] == quad_order) id[axis++] = 0;
    }

    // orthonormalize the basis on the grid (modified Gram-Schmidt)
    std::vector<Eigen::VectorXd> ortho;
    for (const auto& fn : basis) {
        Eigen::VectorXd v(grid);
        for (long g = 0; g < grid; ++g) v[g] = fn(pts.col(g));
        for (const auto& q : ortho) v -= (w.array() * q.array() * v.array()).sum() * q;
        const double nrm = std::sqrt((w.array() * v.array().square()).sum());
        if (nrm > 1e-10) ortho.push_back(v / nrm);
    }

    // enumerate I_gamma and average the residuals of f_eta / gamma
    double acc = 0.0;
    long count = 0;
    Eigen::VectorXi eta = Eigen::VectorXi::Zero(dim);
    while (true) {
        if (c1 * std::pow(1.0 + eta.maxCoeff(), sigma) <= gamma_level) {
            Eigen::VectorXd v(grid);
            if (eta.isZero())
                v.setOnes();
            else
                for (long g = 0; g < grid; ++g)
                    v[g] = std::sqrt(2.0) *
                           std::cos(2.0 * M_PI * eta.cast<double>().dot(pts.col(g)));
            double norm2 = (w.array() * v.array().square()).sum();
            for (const auto& q : ortho) {
                const double c = (w.array() * q.array() * v.array()).sum();
                norm2 -= c * c;
            }
            acc += std::sqrt(std::max(0.0, norm2));
            ++count;
        }
        int axis = 0;
        while (axis < dim && ++eta[axis] > max_eta) eta[axis++] = 0;
        if (axis == dim) break;
    }
    if (count == 0) throw std::invalid_argument("linear_avg_residual: I_gamma is empty");
    return acc / (double(count) * gamma_level);
}

}  // namespace barron
