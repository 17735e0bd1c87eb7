#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "barron/rng.hpp"
#include "barron/trig_poly.hpp"

using namespace barron;

namespace {
Eigen::VectorXd x1(double v) {
    Eigen::VectorXd x(1);
    x[0] = v;
    return x;
}
}  // namespace

TEST_CASE("eval: pinned examples") {
    TrigPoly p(1, 2);
    p.coeff1(0) = 3.0;
    CHECK(eval(p, x1(0.1)).real() == doctest::Approx(3.0));
    CHECK(eval(p, x1(-0.4)).real() == doctest::Approx(3.0));

    TrigPoly q(1, 1);
    q.coeff1(1) = 1.0;
    CHECK(eval(q, x1(0.5)).real() == doctest::Approx(-1.0).epsilon(1e-14));

    TrigPoly c(1, 1);
    c.coeff1(1) = 0.5;
    c.coeff1(-1) = 0.5;
    CHECK(eval(c, x1(0.25)).real() == doctest::Approx(0.0));
    CHECK_THROWS_AS(eval(c, Eigen::VectorXd::Zero(2)), std::invalid_argument);
}

TEST_CASE("vdv_coefficient: plateau, ramp, support") {
    CHECK(vdv_coefficient(2, 0) == doctest::Approx(1.0));
    CHECK(vdv_coefficient(2, 3) == doctest::Approx(0.5));
    CHECK(vdv_coefficient(2, 4) == 0.0);
    for (int j = -5; j <= 5; ++j)
        if (std::abs(j) <= 5) CHECK(vdv_coefficient(5, j) == doctest::Approx(1.0));
    for (int j = 10; j < 15; ++j) CHECK(vdv_coefficient(5, j) == 0.0);
    CHECK_THROWS_AS(vdv_coefficient(0, 1), std::invalid_argument);
}

TEST_CASE("vdv_filter behavior") {
    TrigPoly p(1, 8);
    p.coeff1(0) = 1.0;
    TrigPoly f = vdv_filter(p, 4);
    CHECK(f.coeff1(0) == Complex(1.0, 0.0));

    TrigPoly q(1, 8);
    q.coeff1(3) = 1.0;
    CHECK(vdv_filter(q, 2).coeff1(3) == Complex(0.5, 0.0));

    // supported inside |j| <= N: identity
    RandomStream rng(2);
    TrigPoly r(1, 8);
    for (int k = -4; k <= 4; ++k) r.coeff1(k) = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
    TrigPoly fr = vdv_filter(r, 4);
    for (int k = -4; k <= 4; ++k) CHECK(std::abs(fr.coeff1(k) - r.coeff1(k)) < 1e-15);
    // support bound |j|_inf <= 2N
    CHECK(fr.bound <= 8);

    // filter applied twice equals coefficient-wise square of the multiplier
    TrigPoly s(1, 10);
    for (int k = -10; k <= 10; ++k) s.coeff1(k) = 1.0;
    TrigPoly once = vdv_filter(s, 3), twice = vdv_filter(once, 3);
    for (int k = -6; k <= 6; ++k) {
        const double m = vdv_coefficient(3, k);
        CHECK(std::abs(twice.coeff1(k) - Complex(m * m, 0.0)) < 1e-14);
        if (std::abs(k) <= 3) CHECK(std::abs(twice.coeff1(k) - once.coeff1(k)) < 1e-14);
    }

    // pointwise multiplication never creates nonzeros
    CHECK(sparsity(vdv_filter(r, 4)) <= sparsity(r));
}

TEST_CASE("norms: pinned examples") {
    TrigPoly p(1, 2);
    p.coeff1(0) = 3.0;
    auto n = norms(p);
    CHECK(n.l2 == doctest::Approx(3.0));
    CHECK(n.l1_coeff == doctest::Approx(3.0));

    TrigPoly q(1, 2);
    q.coeff1(1) = 3.0;
    q.coeff1(2) = 4.0;
    auto nq = norms(q);
    CHECK(nq.l2 == doctest::Approx(5.0));
    CHECK(nq.l1_coeff == doctest::Approx(7.0));

    TrigPoly empty(1, 2);
    auto ne = norms(empty);
    CHECK(ne.l2 == 0.0);
    CHECK(ne.l1_coeff == 0.0);
}

TEST_CASE("parseval: coefficient norm equals quadrature norm") {
    RandomStream rng(9);
    for (int rep = 0; rep < 10; ++rep) {
        const int d = 1 + rep % 2;
        const int B = d == 1 ? 6 : 3;
        TrigPoly p(d, B);
        for (Eigen::Index i = 0; i < p.lattice_size(); ++i)
            p.coeffs[i] = Complex(rng.uniform(-1, 1), rng.uniform(-1, 1));
        // uniform grid with > 4*bound points per axis integrates |p|^2 exactly
        const int res = 4 * B + 4;
        double acc = 0.0;
        Eigen::VectorXi id = Eigen::VectorXi::Zero(d);
        Eigen::VectorXd x(d);
        long total = 1;
        for (int i = 0; i < d; ++i) total *= res;
        for (long g = 0; g < total; ++g) {
            for (int i = 0; i < d; ++i) x[i] = -0.5 + double(id[i]) / res;
            acc += std::norm(eval(p, x));
            int axis = 0;
            while (axis < d && ++id[axis] == res) id[axis++] = 0;
        }
        const double grid_l2 = std::sqrt(acc / double(total));
        CHECK(norms(p).l2 == doctest::Approx(grid_l2).epsilon(1e-8));
    }
}

TEST_CASE("sparsity threshold and csv round-trip") {
    TrigPoly p(2, 2);
    Eigen::VectorXi k(2);
    k << 1, -2;
    p.coeff(k) = Complex(0.5, -0.25);
    k << 0, 0;
    p.coeff(k) = 1e-13;  // below threshold
    CHECK(sparsity(p) == 1);

    std::stringstream ss;
    write_trig_poly_csv(ss, p);
    TrigPoly q = read_trig_poly_csv(ss, 2, 2);
    CHECK((q.coeffs - p.coeffs).cwiseAbs().maxCoeff() <= 1e-15);
}
