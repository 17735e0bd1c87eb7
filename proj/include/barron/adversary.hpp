#pragma once

#include <Eigen/Core>
#include <functional>
#include <iosfwd>
#include <vector>

#include "barron/fourier_sum.hpp"

namespace barron {

// 1-D bump generator: B_order(order * t), nonnegative with support (0,1) and
// closed-form transform modulus |sinc(xi/order)|^order / order.
struct BumpProfile {
    int order = 5;

    double eval(double t) const;
    double transform_abs(double xi) const;
    double lp_norm(double p) const;  // exact (composite per-knot quadrature); p=inf -> peak
};

BumpProfile make_profile(int dim, double sigma);  // order d + 3 + ceil(sigma)

// Signed superposition of disjointly supported bumps on the N^d micro-cell
// grid of Omega: sum_{n in Lambda} theta_n * amplitude *
// prod_i profile(N (x_i + 1/2) - n_i).
struct BumpSum {
    int dim = 1;
    int N = 1;
    BumpProfile profile;
    double amplitude = 1.0;
    std::vector<Eigen::VectorXi> lambda;  // subset of {0..N-1}^d
    std::vector<int> theta;               // aligned signs, +-1

    double eval(const Eigen::VectorXd& x) const;
    // exact by disjoint supports: amplitude * |profile|_p^d * N^{-d/p} * |Lambda|^{1/p}
    double lp_norm(double p) const;
    int sign_at_cell(const Eigen::VectorXi& n) const;  // 0 if n not in Lambda
};

BumpSum bump_sum_build(int N, const std::vector<Eigen::VectorXi>& lambda,
                       const std::vector<int>& theta, const BumpProfile& profile, int dim);

struct BarronBoundReport {
    double bound = 0.0;      // certified upper bound on the Barron norm
    double head = 0.0;       // quadrature part
    double tail = 0.0;       // closed-form remainder
    double c_cal = 0.0;      // bound / (N^sigma |Lambda|^{1/2})
};

// Certified bound on |psi|_{B^sigma} via the factorization
// psi_hat(xi) = e^{i phase} N^{-d} profile_hat(xi/N) g_{Lambda,theta}(xi/N):
// quadrature of the periodized weighted integrand over [0,1]^d plus a
// closed-form spline tail.  The lattice truncation radius grows until the
// tail is below 10% of the head; throws if that cannot be reached.
BarronBoundReport bump_barron_bound(const BumpSum& b, double sigma);

struct FoolingCertificate {
    BumpSum function;             // gamma, normalization baked into amplitude
    double sigma = 1.0;
    double p = 2.0;
    double barron_bound = 1.0;    // certified, <= 1 by normalization
    double lp_norm = 0.0;         // exact
    int point_count = 0;          // M
    int grid_resolution = 1;      // N
    int lambda_hit = 0;           // |Lambda cap I|
    bool vanishing_verified = false;
    double lower_bound_constant = 0.0;  // lp_norm / M^{-(1/max(2,p)+sigma/d)}
};

// Bump sum avoiding every supplied sampling point: N = ceil((2M)^{1/d}) makes
// at least half of the N^d micro-cells unsampled; a single bump is used for
// p > 2 and all unsampled cells for p <= 2.  gamma is normalized by its
// certified Barron bound and its vanishing at the points is verified exactly.
FoolingCertificate fooling_function(const std::vector<Eigen::VectorXd>& points, int dim,
                                    double sigma, double p);

void write_certificate(std::ostream& os, const FoolingCertificate& cert);

// f_0 = 1; f_eta = sqrt(2) cos(2 pi <eta, x>) as a hermitian atomic pair,
// with weighted mass sqrt(2) (1+|eta|)^sigma for eta != 0.
FourierSum cosine_family(const Eigen::VectorXi& eta, double sigma);

// Average over eta in I_gamma = { eta : sqrt(2) (1+|eta|_inf)^sigma <= gamma }
// of the L^2 residual of f_eta/gamma against the span of the given basis
// (orthonormalized internally).  Bessel gives >= 1/(2 gamma) whenever
// |I_gamma| >= 2 * dim span.  Throws if I_gamma is empty.
double linear_avg_residual(const std::vector<std::function<double(const Eigen::VectorXd&)>>& basis,
                           double gamma_level, double sigma, int dim, int quad_order = 64);

}  // namespace barron
