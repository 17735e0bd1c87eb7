#include "barron/bspline.hpp"

#include <cmath>

namespace barron {

double dirichlet_ratio(int K, double u) {
    const double frac = u - std::round(u);
    if (std::abs(frac) < 1e-9) {
        const long long n = (long long)std::llround(u);
        const bool flip = ((n % 2) != 0) && (K % 2 == 0);
        // limit K * (-1)^{n(K-1)}; second-order correction is O(frac^2)
        return flip ? -double(K) : double(K);
    }
    return std::sin(M_PI * K * u) / std::sin(M_PI * u);
}

}  // namespace barron
