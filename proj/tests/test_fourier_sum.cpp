#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "barron/fourier_sum.hpp"
#include "barron/rng.hpp"

using namespace barron;

namespace {

FourierSum atoms1d(std::initializer_list<std::pair<double, Complex>> list) {
    FourierSum f;
    f.dim = 1;
    f.freqs.resize(1, long(list.size()));
    f.amps.resize(long(list.size()));
    int j = 0;
    for (const auto& [xi, c] : list) {
        f.freqs(0, j) = xi;
        f.amps[j] = c;
        ++j;
    }
    return f;
}

Eigen::VectorXd x1(double v) {
    Eigen::VectorXd x(1);
    x[0] = v;
    return x;
}

FourierSum random_hermitian(RandomStream& rng, int d, int pairs, double freq_scale) {
    FourierSum half;
    half.dim = d;
    half.freqs.resize(d, pairs);
    half.amps.resize(pairs);
    for (int j = 0; j < pairs; ++j) {
        for (int i = 0; i < d; ++i) half.freqs(i, j) = freq_scale * (rng.uniform01() - 0.5);
        half.amps[j] = std::polar(rng.uniform(0.1, 2.0), rng.uniform(0.0, 2 * M_PI));
    }
    return hermitian_symmetrize(half);
}

}  // namespace

TEST_CASE("evaluate: pinned examples") {
    const double s2 = std::sqrt(2.0) / 2.0;
    CHECK(evaluate(atoms1d({{0.0, 1.0}}), x1(0.37)) == doctest::Approx(1.0));
    CHECK(evaluate(atoms1d({{1.0, s2}, {-1.0, s2}}), x1(0.0)) ==
          doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    CHECK(evaluate(atoms1d({{1.0, s2}, {-1.0, s2}}), x1(0.25)) == doctest::Approx(0.0));
    CHECK_THROWS_AS(evaluate(atoms1d({{0.0, 1.0}}), Eigen::VectorXd::Zero(2)),
                    std::invalid_argument);
}

TEST_CASE("barron_norm_bound: pinned examples") {
    const double s2 = std::sqrt(2.0) / 2.0;
    CHECK(barron_norm_bound(atoms1d({{0.0, 1.0}}), Weight{1.0}) == doctest::Approx(1.0));
    // 2 * (sqrt2/2) * (1+1) = 2 sqrt 2
    CHECK(barron_norm_bound(atoms1d({{1.0, s2}, {-1.0, s2}}), Weight{1.0}) ==
          doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-14));
    // (1+3)^2 * 1 = 16
    CHECK(barron_norm_bound(atoms1d({{3.0, 1.0}}), Weight{2.0}) == doctest::Approx(16.0));
}

TEST_CASE("holder_norm_bound") {
    CHECK(holder_norm_bound(atoms1d({{0.0, 1.0}}), Weight{1.0}) ==
          doctest::Approx(std::pow(2 * M_PI, 3.0)).epsilon(1e-13));
    FourierSum zero;
    zero.dim = 1;
    zero.freqs.resize(1, 0);
    zero.amps.resize(0);
    CHECK(holder_norm_bound(zero, Weight{1.0}) == 0.0);
    // bound 2*(1/2)*(1+1)^2 = 4, times (2 pi)^4
    CHECK(holder_norm_bound(atoms1d({{1.0, 0.5}, {-1.0, 0.5}}), Weight{2.0}) ==
          doctest::Approx(4.0 * std::pow(2 * M_PI, 4.0)).epsilon(1e-13));
}

TEST_CASE("affine_pullback: atom mapping and errors") {
    Eigen::VectorXd a = x1(0.5), t0 = x1(0.25);
    FourierSum g = affine_pullback(atoms1d({{1.0, 1.0}}), a, t0);
    CHECK(g.freqs(0, 0) == doctest::Approx(0.5));
    CHECK(g.amps[0].real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(g.amps[0].imag() == doctest::Approx(1.0).epsilon(1e-15));

    // constants are fixed
    FourierSum c = affine_pullback(atoms1d({{0.0, 1.0}}), a, t0);
    CHECK(c.freqs(0, 0) == 0.0);
    CHECK(c.amps[0] == Complex(1.0, 0.0));

    // norm bound drop: (1+2) -> (1+1)
    Weight w{1.0};
    FourierSum f2 = atoms1d({{2.0, 1.0}});
    CHECK(barron_norm_bound(f2, w) == doctest::Approx(3.0));
    CHECK(barron_norm_bound(affine_pullback(f2, a, x1(0.0)), w) == doctest::Approx(2.0));

    CHECK_THROWS_AS(affine_pullback(f2, x1(0.0), t0), std::invalid_argument);
    CHECK_THROWS_AS(affine_pullback(f2, x1(1.5), t0), std::invalid_argument);
}

TEST_CASE("pullback reproduces composition with the affine map") {
    RandomStream rng(11);
    for (int rep = 0; rep < 50; ++rep) {
        const int d = 1 + rep % 3;
        FourierSum f = random_hermitian(rng, d, 4, 6.0);
        Eigen::VectorXd a(d), t0(d);
        for (int i = 0; i < d; ++i) {
            a[i] = rng.uniform(0.05, 1.0) * (rng.uniform01() < 0.5 ? -1.0 : 1.0);
            t0[i] = rng.uniform(-0.3, 0.3);
        }
        FourierSum g = affine_pullback(f, a, t0);
        for (int k = 0; k < 10; ++k) {
            Eigen::VectorXd t = rng.point_in_cube(d);
            const Eigen::VectorXd mapped = (a.array() * t.array()).matrix() + t0;
            CHECK(evaluate(g, t) == doctest::Approx(evaluate(f, mapped)).epsilon(1e-12));
        }
        // contraction is exact at the atomic level
        Weight w{1.3};
        CHECK(barron_norm_bound(g, w) <= barron_norm_bound(f, w) + 1e-12);
        // identity map fixes atoms
        FourierSum id = affine_pullback(f, Eigen::VectorXd::Ones(d), Eigen::VectorXd::Zero(d));
        CHECK((id.freqs - f.freqs).cwiseAbs().maxCoeff() == 0.0);
        CHECK((id.amps - f.amps).cwiseAbs().maxCoeff() <= 1e-15);
    }
}

TEST_CASE("hermitian sums evaluate real; sup bound holds") {
    RandomStream rng(5);
    Weight w{1.0};
    for (int rep = 0; rep < 500; ++rep) {
        const int d = 1 + rep % 2;
        FourierSum f = random_hermitian(rng, d, 1 + rep % 12, 40.0);
        CHECK(is_hermitian(f));
        const double bound = barron_norm_bound(f, w);
        for (int k = 0; k < 100; ++k) {
            const Eigen::VectorXd x = rng.point_in_cube(d);
            const Complex v = evaluate_complex(f, x);
            CHECK(std::abs(v.imag()) < 1e-12);
            CHECK(std::abs(v.real()) <= bound + 1e-9);
        }
    }
}

TEST_CASE("weight submultiplicativity") {
    Weight w{1.0};
    CHECK(w(7.0) <= w(3.0) * w(4.0));  // 8 <= 20
    RandomStream rng(3);
    for (int rep = 0; rep < 1000; ++rep) {
        Weight ws{rng.uniform(0.2, 3.0)};
        Eigen::VectorXd xi = 50.0 * rng.point_in_cube(3), eta = 50.0 * rng.point_in_cube(3);
        CHECK(ws(Eigen::VectorXd(xi + eta)) <= ws(xi) * ws(eta) * (1.0 + 1e-12));
    }
}

TEST_CASE("serialization round-trip") {
    RandomStream rng(17);
    FourierSum f = random_hermitian(rng, 2, 5, 20.0);
    std::stringstream ss;
    write_fourier_sum(ss, f, 1.25);
    auto [g, sigma] = read_fourier_sum(ss);
    CHECK(sigma == 1.25);
    REQUIRE(g.atom_count() == f.atom_count());
    CHECK((g.freqs - f.freqs).cwiseAbs().maxCoeff() <= 1e-15);
    CHECK((g.amps - f.amps).cwiseAbs().maxCoeff() <= 1e-15);
}
