#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <functional>

#include "thetafock/errors.hpp"
#include "thetafock/hermite.hpp"
#include "thetafock/numerics.hpp"

using namespace thetafock;

TEST_CASE("low-order closed forms") {
    double nu = 1.7;
    cplx xi(0.6, -0.3);
    CHECK(hermite_eval(nu, 0, 0, xi) == cplx(1.0));
    CHECK(std::abs(hermite_eval(nu, 1, 0, xi) - nu * xi) < 1e-15);
    CHECK(std::abs(hermite_eval(nu, 0, 1, xi) - nu * std::conj(xi)) < 1e-15);
    CHECK(std::abs(hermite_eval(nu, 1, 1, xi) - (nu * nu * std::norm(xi) - nu)) < 1e-14);
}

// independent oracle for H_{1,1}: Rodrigues form gives
// H_{1,1} = e^(nu|z|^2) * (1/4)(d_xx + d_yy) e^(-nu|z|^2), central differences
TEST_CASE("H_{1,1} against a finite-difference Laplacian of the Gaussian") {
    double nu = 1.3;
    cplx xi(0.41, 0.27);
    auto g = [&](double x, double y) { return std::exp(-nu * (x * x + y * y)); };
    double h = 1e-4;
    double x = xi.real(), y = xi.imag();
    double lap = (g(x + h, y) + g(x - h, y) + g(x, y + h) + g(x, y - h) - 4 * g(x, y)) / (h * h);
    double expected = std::exp(nu * std::norm(xi)) * lap / 4.0;
    CHECK(std::abs(hermite_eval(nu, 1, 1, xi) - expected) < 1e-6);
}

TEST_CASE("table at xi = 0") {
    double nu = 2.1;
    HermiteTable t(nu, 2, 2, 0.0);
    CHECK(t.at(0, 0) == cplx(1.0));
    CHECK(std::abs(t.at(1, 1) + nu) < 1e-14);
    CHECK(std::abs(t.at(2, 2) - 2.0 * nu * nu) < 1e-13);
    CHECK(std::abs(t.at(1, 0)) < 1e-15);
    CHECK(std::abs(t.at(0, 2)) < 1e-15);
}

TEST_CASE("table agrees with the explicit sum") {
    HermiteTable t(1.0, 5, 5, cplx(1, 1));
    for (int m = 0; m <= 5; ++m)
        for (int n = 0; n <= 5; ++n) {
            cplx direct = hermite_eval(1.0, m, n, cplx(1, 1));
            CHECK(std::abs(t.at(m, n) - direct) <=
                  1e-10 * std::max(1.0, std::abs(direct)));
        }
}

TEST_CASE("table parity") {
    double nu = 0.9;
    cplx xi(0.8, -0.55);
    HermiteTable tp(nu, 4, 4, xi), tm(nu, 4, 4, -xi);
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n) {
            double sign = ((m + n) % 2) ? -1.0 : 1.0;
            CHECK(std::abs(tm.at(m, n) - sign * tp.at(m, n)) <=
                  1e-12 * std::max(1.0, std::abs(tp.at(m, n))));
        }
}

TEST_CASE("randomized identities: conjugation, parity, recurrence, scaling") {
    UniformStream rng(42);
    for (int trial = 0; trial < 200; ++trial) {
        double nu = rng.next(0.5, 3.0);
        cplx xi = rng.next_complex(-2.0, 2.0);
        int m = static_cast<int>(rng.next(0.0, 9.0));
        int n = static_cast<int>(rng.next(0.0, 9.0));
        cplx h = hermite_eval(nu, m, n, xi);
        double scale = std::max(1.0, std::abs(h));

        CHECK(std::abs(std::conj(h) - hermite_eval(nu, n, m, xi)) < 1e-12 * scale);

        double sign = ((m + n) % 2) ? -1.0 : 1.0;
        CHECK(std::abs(hermite_eval(nu, m, n, -xi) - sign * h) < 1e-12 * scale);

        cplx up = hermite_eval(nu, m + 1, n, xi);
        cplx dn = n > 0 ? hermite_eval(nu, m, n - 1, xi) : 0.0;
        CHECK(std::abs(up - nu * xi * h + nu * static_cast<double>(n) * dn) <=
              1e-10 * std::max(1.0, std::abs(up)));

        cplx lambda = rng.next_complex(-2.0, 2.0);
        if (std::abs(lambda) < 0.3) continue;
        cplx lhs = hermite_eval(nu / std::norm(lambda), m, n, lambda * xi);
        cplx rhs = h / (std::pow(lambda, n) * std::pow(std::conj(lambda), m));
        CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("two-variable generating function") {
    CHECK(genfun2_residual(1.4, 0.0, 0.0, cplx(0.7, 0.1), 5, 5) == 0.0);
    CHECK(genfun2_residual(1.0, 0.3, 0.3, cplx(0.5, 0.2), 25, 25) < 1e-12);
    // M = N = 0 keeps only H_{0,0} = 1
    double nu = 1.1;
    cplx a(0.2, 0.1), b(-0.3, 0.2), xi(0.4, 0.6);
    double expected = std::abs(std::exp(nu * (a * xi + b * std::conj(xi) - a * b)) - 1.0);
    CHECK(genfun2_residual(nu, a, b, xi, 0, 0) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("one-variable generating function") {
    CHECK(genfun1_residual(1.3, 0.0, cplx(0.5, 0.5), 0, 10) < 1e-15);
    CHECK(genfun1_residual(1.0, 0.4, cplx(1.0, 0.5), 2, 30) < 1e-12);
    // n = 1, z = 0: closed form is nu*conj(xi) = H_{0,1}
    CHECK(genfun1_residual(2.0, 0.0, cplx(0.3, -0.8), 1, 5) < 1e-15);
}

TEST_CASE("degree cap raises") {
    CHECK_THROWS_AS(hermite_eval(1.0, 31, 30, cplx(1, 0)), Overflow);
    CHECK_THROWS_AS(HermiteTable(1.0, 40, 30, cplx(1, 0)), Overflow);
    CHECK_NOTHROW(hermite_eval(1.0, 30, 30, cplx(1, 0)));
    // a larger explicit cap lifts the limit
    CHECK_NOTHROW(hermite_eval(1.0, 35, 30, cplx(1, 0), 80));
}
