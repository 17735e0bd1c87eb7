#pragma once

#include <Eigen/Core>

namespace barron {

// Smooth plateau cutoff built from integer translates of a cardinal B-spline:
//
//   phi_1(x) = sum_{k=0}^{shifts-1} B_order( scale*(x + 1/2) - k ),
//   phi(x)   = prod_i phi_1(x_i),
//
// with shifts = 3*(order-1) and scale = 4*(order-1).  By the partition-of-unity
// property of the translates, phi == 1 exactly on [-1/4,1/4]^d, 0 <= phi <= 1,
// and phi vanishes outside (-1/2,1/2)^d.  The Fourier transform is real, even
// and in closed form:
//
//   phi_1_hat(xi) = sinc^order(xi/scale) * sin(pi*shifts*xi/scale)
//                   / (scale * sin(pi*xi/scale)),
//
// which decays like (1+|xi|)^{-order}.
class PlateauCutoff {
public:
    // order r = d + 3 + ceil(sigma) gives decay beyond (1+|xi|)^{-(d+1+sigma)}
    PlateauCutoff(int dim, double sigma);

    int dim() const { return dim_; }
    int order() const { return order_; }
    int shifts() const { return shifts_; }
    double scale() const { return scale_; }

    double eval1(double x) const;
    double eval(const Eigen::VectorXd& x) const;

    double transform1(double xi) const;
    double transform(const Eigen::VectorXd& xi) const;  // tensor product

    // closed-form constant with |phi_1_hat(xi)| * (1+|xi|)^order <= decay_constant()
    double decay_constant() const;

    // upper bound for sum_{|n| > R} (1+|n|)^sigma |phi_1_hat(n - xi)| over
    // integers n, valid for any |xi| <= R/2 (one-dimensional)
    double weighted_tail_bound(double sigma, double R) const;

private:
    int dim_;
    int order_;
    int shifts_;
    double scale_;
};

}  // namespace barron
