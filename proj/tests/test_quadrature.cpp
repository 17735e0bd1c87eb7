#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "barron/quadrature.hpp"

using namespace barron;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    // order q is exact up to degree 2q-1
    QuadRule r = gauss_legendre(6, 0.0, 1.0);
    double acc = 0.0;
    for (int i = 0; i < r.nodes.size(); ++i)
        acc += r.weights[i] * std::pow(r.nodes[i], 11.0);
    CHECK(acc == doctest::Approx(1.0 / 12.0).epsilon(1e-13));
    CHECK(r.weights.sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("tensor box integral") {
    // int_{[0,1]^2} x y dx dy = 1/4
    double v = integrate_box([](const Eigen::VectorXd& x) { return x[0] * x[1]; }, 2, 0.0, 1.0, 8);
    CHECK(v == doctest::Approx(0.25).epsilon(1e-13));
}

TEST_CASE("lp_norm_estimate examples") {
    auto constant3 = [](const Eigen::VectorXd&) { return 3.0; };
    CHECK(lp_norm_estimate(constant3, 2.0, 16, 1) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(lp_norm_estimate(constant3, 5.0, 16, 2) == doctest::Approx(3.0).epsilon(1e-12));

    auto cosine = [](const Eigen::VectorXd& x) { return std::sqrt(2.0) * std::cos(2 * M_PI * x[0]); };
    CHECK(lp_norm_estimate(cosine, 2.0, 48, 1) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lp_norm_estimate(cosine, INFINITY, 8192, 1) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-6));

    CHECK_THROWS_AS(lp_norm_estimate(constant3, 2.0, 1, 1), std::invalid_argument);
}

TEST_CASE("monte carlo cross-check within 2%") {
    auto fn = [](const Eigen::VectorXd& x) { return 1.0 + 0.5 * std::sin(2 * M_PI * x[0]); };
    const double gl = lp_norm_estimate(fn, 2.0, 32, 1);
    const double mc = lp_norm_monte_carlo(fn, 2.0, 200000, 1, 7);
    CHECK(std::abs(gl - mc) / gl < 0.02);
}
