#pragma once

#include <Eigen/Core>
#include <functional>

namespace barron {

using RealFn = std::function<double(const Eigen::VectorXd&)>;

// Clipping combiner F_{g,h,delta}: follow the L^2-accurate candidate g, but
// never stray further than delta from the L^inf-accurate candidate h.
struct ClipCombiner {
    RealFn g;
    RealFn h;
    double delta = 0.0;
};

// h(x)+delta if g(x) >= h(x)+delta; h(x)-delta if g(x) <= h(x)-delta; else g(x).
double clip_eval(const ClipCombiner& c, const Eigen::VectorXd& x);

// 2 eps^{2/p} delta^{1-2/p}, the L^p guarantee of the combiner whenever
// |f-g|_2 <= eps and |f-h|_inf <= delta (p in [2, inf]).
double clip_bound(double p, double eps, double delta);

// Split-budget L^p estimator: clip the L^2 half against the L^inf half with
// delta at the L^inf error level.  For p = 2 the pointwise domination
// |f-F| <= |f-g| gives the sharper guarantee eps.
struct LpEstimator {
    ClipCombiner combiner;
    double p = 2.0;
    double epsilon_l2 = 0.0;
    double delta_linf = 0.0;

    double operator()(const Eigen::VectorXd& x) const { return clip_eval(combiner, x); }
    double guarantee() const;
};

// Throws for p < 2 (use the L^2 estimator directly there: |.|_p <= |.|_2 on
// the unit-volume cube).
LpEstimator combine_lp_estimator(double p, double epsilon_l2, double delta_linf, RealFn g,
                                 RealFn h);

}  // namespace barron
