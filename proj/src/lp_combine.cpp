#include "barron/lp_combine.hpp"

#include <cmath>
#include <stdexcept>

namespace barron {

double clip_eval(const ClipCombiner& c, const Eigen::VectorXd& x) {
    const double gv = c.g(x), hv = c.h(x);
    if (gv >= hv + c.delta) return hv + c.delta;
    if (gv <= hv - c.delta) return hv - c.delta;
    return gv;
}

double clip_bound(double p, double eps, double delta) {
    if (p < 2.0) throw std::invalid_argument("clip_bound: p must be >= 2");
    if (std::isinf(p)) return 2.0 * delta;
    const double a = 2.0 / p;
    return 2.0 * std::pow(eps, a) * std::pow(delta, 1.0 - a);
}

double LpEstimator::guarantee() const {
    if (p == 2.0) return epsilon_l2;  // pointwise |f-F| <= |f-g|
    return clip_bound(p, epsilon_l2, delta_linf);
}

LpEstimator combine_lp_estimator(double p, double epsilon_l2, double delta_linf, RealFn g,
                                 RealFn h) {
    if (p < 2.0)
        throw std::invalid_argument(
            "combine_lp_estimator: p < 2; use the L^2 estimator directly (|.|_p <= |.|_2)");
    if (delta_linf < 0.0 || epsilon_l2 < 0.0)
        throw std::invalid_argument("combine_lp_estimator: negative error level");
    LpEstimator est;
    est.combiner = ClipCombiner{std::move(g), std::move(h), delta_linf};
    est.p = p;
    est.epsilon_l2 = epsilon_l2;
    est.delta_linf = delta_linf;
    return est;
}

}  // namespace barron
