#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "barron/holder_recon.hpp"
#include "barron/rng.hpp"

using namespace barron;

namespace {

double sup_error(const GridInterpolant& g, const std::function<double(double)>& f, int res) {
    double best = 0.0;
    for (int i = 0; i < res; ++i) {
        Eigen::VectorXd x(1);
        x[0] = -0.5 + (i + 0.5) / res;
        best = std::max(best, std::abs(f(x[0]) - interpolate_eval(g, x)));
    }
    return best;
}

}  // namespace

TEST_CASE("grid_plan: pinned examples") {
    GridInterpolant g = grid_plan(9, 2, 1.0);
    CHECK(g.nodes_per_axis == 3);
    CHECK(g.degree == 1);

    GridInterpolant h = grid_plan(10, 1, 2.5);
    CHECK(h.nodes_per_axis == 10);
    CHECK(h.degree == 3);

    CHECK_THROWS_AS(grid_plan(1, 2, 1.0), std::invalid_argument);
    CHECK(grid_plan(9, 2, 1.0).total_nodes() <= 9);
}

TEST_CASE("polynomial reproduction") {
    GridInterpolant g = grid_plan(16, 1, 1.0);  // q = 1
    populate(g, [](const Eigen::VectorXd&) { return 4.2; });
    RandomStream rng(1);
    for (int i = 0; i < 100; ++i)
        CHECK(interpolate_eval(g, rng.point_in_cube(1)) == doctest::Approx(4.2).epsilon(1e-12));

    populate(g, [](const Eigen::VectorXd& x) { return x[0]; });
    for (int i = 0; i < 100; ++i) {
        const Eigen::VectorXd x = rng.point_in_cube(1);
        CHECK(interpolate_eval(g, x) == doctest::Approx(x[0]).epsilon(1e-12));
    }

    // degree-2 stencils reproduce quadratics, tensor version in d = 2
    GridInterpolant g2 = grid_plan(64, 2, 2.0);
    populate(g2, [](const Eigen::VectorXd& x) { return x[0] * x[0] + 0.5 * x[0] * x[1]; });
    for (int i = 0; i < 100; ++i) {
        const Eigen::VectorXd x = rng.point_in_cube(2);
        CHECK(interpolate_eval(g2, x) ==
              doctest::Approx(x[0] * x[0] + 0.5 * x[0] * x[1]).epsilon(1e-10));
    }
}

TEST_CASE("cosine sup-error obeys the local remainder bound") {
    GridInterpolant g = grid_plan(64, 1, 2.0);  // n = 64, q = 2
    populate(g, [](const Eigen::VectorXd& x) { return std::cos(2 * M_PI * x[0]); });
    const double err = sup_error(g, [](double x) { return std::cos(2 * M_PI * x); }, 20000);
    const double bound = 10.0 * std::pow(1.0 / 64.0, 2.0) * std::pow(2 * M_PI, 3.0) / 6.0;
    CHECK(err <= bound);
}

TEST_CASE("empirical sup-norm order matches min(sigma, q)") {
    for (double sigma : {1.0, 2.0}) {
        std::vector<double> errs;
        for (int n : {16, 32, 64}) {
            GridInterpolant g = grid_plan(n, 1, sigma);
            populate(g, [](const Eigen::VectorXd& x) {
                return std::sqrt(2.0) * std::cos(2 * M_PI * 3.0 * x[0]);
            });
            errs.push_back(
                sup_error(g, [](double x) { return std::sqrt(2.0) * std::cos(2 * M_PI * 3.0 * x); },
                          20000));
        }
        const double q = std::ceil(sigma);
        for (size_t i = 0; i + 1 < errs.size(); ++i)
            CHECK(errs[i] / errs[i + 1] >= std::exp2(std::min(sigma, q) - 0.3));
    }
}

TEST_CASE("interpolant is bounded by the Lebesgue constant") {
    RandomStream rng(3);
    GridInterpolant g = grid_plan(40, 1, 3.0);  // q = 3
    const double lam = lebesgue_constant(g.degree, g.nodes_per_axis);
    CHECK(lam >= 1.0);
    for (int rep = 0; rep < 20; ++rep) {
        populate(g, [&](const Eigen::VectorXd&) { return rng.uniform(-1.0, 1.0); });
        const double peak = g.values.cwiseAbs().maxCoeff();
        for (int i = 0; i < 500; ++i) {
            const Eigen::VectorXd x = rng.point_in_cube(1);
            CHECK(std::abs(interpolate_eval(g, x)) <= lam * peak + 1e-12);
        }
    }
}
