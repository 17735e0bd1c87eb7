#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "barron/lp_combine.hpp"
#include "barron/rng.hpp"

using namespace barron;

namespace {

RealFn constant(double c) {
    return [c](const Eigen::VectorXd&) { return c; };
}

double discrete_lp(const Eigen::VectorXd& v, double p) {
    if (std::isinf(p)) return v.cwiseAbs().maxCoeff();
    double acc = 0.0;
    for (int i = 0; i < v.size(); ++i) acc += std::pow(std::abs(v[i]), p);
    return std::pow(acc / double(v.size()), 1.0 / p);
}

}  // namespace

TEST_CASE("clip_eval: three branches") {
    const Eigen::VectorXd x = Eigen::VectorXd::Zero(1);
    CHECK(clip_eval({constant(5.0), constant(0.0), 1.0}, x) == 1.0);
    CHECK(clip_eval({constant(-5.0), constant(0.0), 1.0}, x) == -1.0);
    CHECK(clip_eval({constant(0.5), constant(0.0), 1.0}, x) == 0.5);
}

TEST_CASE("clip_bound: formula arithmetic") {
    // 2 * 0.01^(1/2) * 0.1^(1/2) = 2 * sqrt(0.001)
    CHECK(clip_bound(4.0, 0.01, 0.1) == doctest::Approx(2.0 * std::sqrt(0.001)).epsilon(1e-14));
    CHECK(clip_bound(INFINITY, 0.3, 0.1) == doctest::Approx(0.2));
    CHECK(clip_bound(2.0, 0.05, 123.0) == doctest::Approx(0.1));
    CHECK_THROWS_AS(clip_bound(1.5, 0.1, 0.1), std::invalid_argument);
}

TEST_CASE("combine_lp_estimator: guarantees and rejection of p < 2") {
    LpEstimator e2 = combine_lp_estimator(2.0, 0.07, 0.5, constant(0), constant(0));
    CHECK(e2.guarantee() == doctest::Approx(0.07));  // reduces to eps at p = 2
    LpEstimator einf = combine_lp_estimator(INFINITY, 0.07, 0.5, constant(0), constant(0));
    CHECK(einf.guarantee() == doctest::Approx(1.0));  // 2 delta
    CHECK_THROWS_AS(combine_lp_estimator(1.5, 0.1, 0.1, constant(0), constant(0)),
                    std::invalid_argument);
}

TEST_CASE("clipping lemma: 1000 random discrete instances, zero violations") {
    RandomStream rng(99);
    const int n = 256;
    int instances = 0;
    while (instances < 1000) {
        const double delta = rng.uniform(0.005, 1.5);
        Eigen::VectorXd f(n), g(n), h(n), F(n);
        for (int j = 0; j < n; ++j) {
            f[j] = rng.uniform(-2, 2);
            h[j] = f[j] + delta * rng.uniform(-1, 1);  // |f-h|_inf <= delta
            g[j] = f[j] + rng.uniform(-1.5, 1.5);
        }
        const double eps = discrete_lp(f - g, 2.0);
        for (int j = 0; j < n; ++j) {
            if (g[j] >= h[j] + delta) F[j] = h[j] + delta;
            else if (g[j] <= h[j] - delta) F[j] = h[j] - delta;
            else F[j] = g[j];
        }
        for (double p : {2.0, 3.0, 4.0, 8.0, double(INFINITY)}) {
            const double lhs = discrete_lp(f - F, p);
            const double rhs = std::isinf(p)
                                   ? 2.0 * delta
                                   : 2.0 * std::pow(eps, 2.0 / p) * std::pow(delta, 1.0 - 2.0 / p);
            CHECK(lhs <= rhs + 1e-12);
        }
        // pointwise domination from the proof's case analysis
        for (int j = 0; j < n; ++j) {
            CHECK(std::abs(f[j] - F[j]) <= std::abs(f[j] - g[j]) + 1e-15);
            CHECK(std::abs(f[j] - F[j]) <= 2.0 * delta + 1e-15);
        }
        ++instances;
    }
}

TEST_CASE("combiner output stays within delta of h") {
    RandomStream rng(5);
    for (int rep = 0; rep < 200; ++rep) {
        const double delta = rng.uniform(0.0, 2.0);
        const double gv = rng.uniform(-3, 3), hv = rng.uniform(-3, 3);
        ClipCombiner c{constant(gv), constant(hv), delta};
        const double F = clip_eval(c, Eigen::VectorXd::Zero(1));
        CHECK(std::abs(F - hv) <= delta + 1e-15);
        if (std::abs(gv - hv) < delta) CHECK(F == gv);
    }
}
