#include "barron/cutoff.hpp"

#include <cmath>
#include <stdexcept>

#include "barron/bspline.hpp"

namespace barron {

PlateauCutoff::PlateauCutoff(int dim, double sigma) : dim_(dim) {
    if (dim < 1 || sigma <= 0.0) throw std::invalid_argument("PlateauCutoff: bad parameters");
    order_ = dim + 3 + int(std::ceil(sigma));
    shifts_ = 3 * (order_ - 1);
    scale_ = 4.0 * (order_ - 1);
}

double PlateauCutoff::eval1(double x) const {
    const double t = scale_ * (x + 0.5);
    if (t <= 0.0 || t >= shifts_ - 1 + order_) return 0.0;
    double acc = 0.0;
    const int klo = std::max(0, int(std::ceil(t)) - order_);
    const int khi = std::min(shifts_ - 1, int(std::floor(t)));
    for (int k = klo; k <= khi; ++k) acc += cardinal_bspline<double>(order_, t - k);
    return acc;
}

double PlateauCutoff::eval(const Eigen::VectorXd& x) const {
    if (x.size() != dim_) throw std::invalid_argument("PlateauCutoff::eval: dimension mismatch");
    double acc = 1.0;
    for (int i = 0; i < dim_ && acc != 0.0; ++i) acc *= eval1(x[i]);
    return acc;
}

double PlateauCutoff::transform1(double xi) const {
    const double u = xi / scale_;
    double s = sinc(u);
    double sp = 1.0;
    for (int j = 0; j < order_; ++j) sp *= s;
    return sp * dirichlet_ratio(shifts_, u) / scale_;
}

double PlateauCutoff::transform(const Eigen::VectorXd& xi) const {
    if (xi.size() != dim_)
        throw std::invalid_argument("PlateauCutoff::transform: dimension mismatch");
    double acc = 1.0;
    for (int i = 0; i < dim_; ++i) acc *= transform1(xi[i]);
    return acc;
}

double PlateauCutoff::decay_constant() const {
    // |sinc(u)| <= min(1, 1/(pi|u|)) and |D_K| <= K give
    // |phi_hat(xi)| <= (K/L) min(1, (L/(pi|xi|)))^r, hence the bound below.
    return double(shifts_) / scale_ * std::pow(1.0 + scale_ / M_PI, double(order_));
}

double PlateauCutoff::weighted_tail_bound(double sigma, double R) const {
    // |n| > R >= 2|xi| implies |n - xi| >= |n|/2, so each term is at most
    // kappa1 * 2^r * (1+|n|)^{sigma - r}; the sum is bounded by an integral.
    const double r = double(order_);
    if (r <= sigma + 1.0) throw std::invalid_argument("weighted_tail_bound: order too small");
    const double kappa1 = decay_constant();
    return kappa1 * std::pow(2.0, r + 1.0) * std::pow(1.0 + R, sigma + 1.0 - r) /
           (r - sigma - 1.0);
}

}  // namespace barron
