#pragma once

#include <cmath>
#include <stdexcept>

namespace barron {

// Cardinal B-spline of order r (piecewise degree r-1, support [0, r]),
// evaluated via the divided-difference formula
//   B_r(x) = 1/(r-1)! * sum_k (-1)^k C(r,k) (x-k)_+^{r-1}.
// Fine numerically for the moderate orders used here (r <= ~12).
template <typename Scalar>
Scalar cardinal_bspline(int r, Scalar x) {
    if (r < 1) throw std::invalid_argument("cardinal_bspline: order must be >= 1");
    if (x <= Scalar(0) || x >= Scalar(r)) return Scalar(0);
    if (r == 1) return Scalar(1);
    Scalar acc = 0;
    Scalar binom = 1;  // C(r, k)
    Scalar fact = 1;
    for (int j = 2; j < r; ++j) fact *= Scalar(j);
    for (int k = 0; k <= r; ++k) {
        Scalar t = x - Scalar(k);
        if (t > Scalar(0)) {
            Scalar pw = 1;
            for (int j = 0; j < r - 1; ++j) pw *= t;
            acc += (k % 2 == 0 ? pw : -pw) * binom;
        }
        binom = binom * Scalar(r - k) / Scalar(k + 1);
    }
    return acc / fact;
}

// sin(pi u) / (pi u), continuous at 0
template <typename Scalar>
Scalar sinc(Scalar u) {
    Scalar a = Scalar(M_PI) * u;
    if (std::abs(double(a)) < 1e-8) return Scalar(1) - a * a / Scalar(6);
    return std::sin(a) / a;
}

// sin(pi K u) / sin(pi u), the Dirichlet-type ratio, continuous at integers
// where it equals K * (-1)^{n (K-1)}.
double dirichlet_ratio(int K, double u);

}  // namespace barron
