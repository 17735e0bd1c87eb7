#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "barron/bspline.hpp"
#include "barron/quadrature.hpp"

using namespace barron;

TEST_CASE("low-order splines match closed forms") {
    // order 1: indicator of [0,1]
    CHECK(cardinal_bspline<double>(1, 0.5) == doctest::Approx(1.0));
    CHECK(cardinal_bspline<double>(1, 1.5) == 0.0);
    // order 2: hat function
    CHECK(cardinal_bspline<double>(2, 1.0) == doctest::Approx(1.0));
    CHECK(cardinal_bspline<double>(2, 0.25) == doctest::Approx(0.25));
    // order 4 at center: B_4(2) = 2/3
    CHECK(cardinal_bspline<double>(4, 2.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-13));
}

TEST_CASE("partition of unity and unit mass") {
    for (int r : {3, 5, 8}) {
        double mass = 0.0;
        const int n = 2000;
        for (int i = 0; i < n; ++i) {
            const double x = r * (i + 0.5) / n;
            mass += cardinal_bspline<double>(r, x) * (double(r) / n);
            double pou = 0.0;
            for (int k = -r; k <= r; ++k) pou += cardinal_bspline<double>(r, x - k + r / 2.0);
            // translates sum to 1 wherever all contributing shifts are present
            if (x > r / 2.0 - 1 && x < r / 2.0 + 1) CHECK(pou == doctest::Approx(1.0).epsilon(1e-10));
        }
        CHECK(mass == doctest::Approx(1.0).epsilon(1e-5));
    }
}

TEST_CASE("spline transform identity: quadrature vs sinc form") {
    // hat(B_r)(xi) = e^{-pi i r xi} sinc^r(xi); moduli must agree.
    // The spline is only piecewise smooth, so integrate knot interval by
    // knot interval.
    const int r = 5;
    QuadRule base = gauss_legendre(32);
    for (double xi : {0.0, 0.3, 1.0, 2.7}) {
        double re = 0.0, im = 0.0;
        for (int k = 0; k < r; ++k) {
            for (int i = 0; i < base.nodes.size(); ++i) {
                const double t = k + 0.5 * (base.nodes[i] + 1.0);
                const double w = 0.5 * base.weights[i];
                const double b = cardinal_bspline<double>(r, t);
                re += w * b * std::cos(2 * M_PI * xi * t);
                im -= w * b * std::sin(2 * M_PI * xi * t);
            }
        }
        const double expect = std::pow(std::abs(sinc(xi)), r);
        CHECK(std::abs(std::hypot(re, im) - expect) < 1e-12);
    }
}

TEST_CASE("dirichlet ratio limits") {
    CHECK(dirichlet_ratio(4, 0.0) == doctest::Approx(4.0));
    CHECK(dirichlet_ratio(4, 1.0) == doctest::Approx(-4.0));  // K even, n odd
    CHECK(dirichlet_ratio(3, 1.0) == doctest::Approx(3.0));   // K odd
    CHECK(dirichlet_ratio(4, 0.25) ==
          doctest::Approx(std::sin(M_PI) / std::sin(M_PI * 0.25)).epsilon(1e-12));
    CHECK(dirichlet_ratio(5, 0.1) ==
          doctest::Approx(std::sin(0.5 * M_PI) / std::sin(0.1 * M_PI)).epsilon(1e-12));
}
