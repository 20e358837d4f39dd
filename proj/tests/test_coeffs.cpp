#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "thetafock/coeffs.hpp"
#include "thetafock/errors.hpp"
#include "thetafock/hermite.hpp"
#include "thetafock/numerics.hpp"

using namespace thetafock;

namespace {

ThetaFockSpace square_space(double nu, cplx u1 = -1.0, cplx u2 = -1.0) {
    Lattice lat(cplx(1, 0), cplx(0, 1));
    return ThetaFockSpace(PseudoCharacter::from_generators(lat, nu, u1, u2));
}

ThetaFockSpace generic_space(double k, cplx u1 = -1.0, cplx u2 = -1.0) {
    Lattice lat(cplx(1, 0), cplx(0.3, 1.1));
    return ThetaFockSpace(PseudoCharacter::from_generators(lat, k * M_PI / 1.1, u1, u2));
}

// independent oracle: plain double loop over a fixed box, no shell policy
cplx brute_coeff(const ThetaFockSpace& sp, int m, int n, int p, int q, int R) {
    const Lattice& lat = sp.lattice();
    double nu = sp.nu();
    KahanSum sum;
    for (int a = -R; a <= R; ++a) {
        for (int b = -R; b <= R; ++b) {
            cplx g = lat.point_value(a, b);
            cplx t = sp.chi().evaluate(a, b) * std::pow(g, p) *
                     std::pow(std::conj(g), q) *
                     std::exp(-(nu / 2.0) * std::norm(g)) *
                     hermite_eval(nu, m, n, g);
            sum.add(t);
        }
    }
    return sum.value();
}

} // namespace

TEST_CASE("critical-density character sum vanishes") {
    for (const ThetaFockSpace& sp : {square_space(M_PI), generic_space(1.0)}) {
        SumResult r = coeff(sp, {0, 0, 0, 0});
        CHECK(std::abs(r.value) < 1e-12 * r.abs_mass);
        CHECK(r.tail_bound < 1e-12 * r.abs_mass);
    }
}

TEST_CASE("odd-total tuples vanish for real characters") {
    ThetaFockSpace sp = square_space(2 * M_PI);
    for (auto [m, n, p, q] : {std::array{1, 0, 0, 0}, {0, 0, 1, 0}, {1, 1, 1, 0},
                              {0, 0, 3, 0}, {2, 1, 0, 0}, {0, 3, 1, 1}}) {
        SumResult r = coeff(sp, {m, n, p, q});
        CHECK(std::abs(r.value) < 1e-10 * std::max(1.0, r.abs_mass));
    }
}

TEST_CASE("frozen values and positivity witnesses") {
    // trivial character at k = 2: a_00 > 0 (30-digit reference)
    ThetaFockSpace triv = square_space(2 * M_PI, 1.0, 1.0);
    SumResult a00 = coeff(triv, {0, 0, 0, 0});
    CHECK(a00.value.real() > 0.0);
    CHECK(std::abs(a00.value - cplx(1.1803405990160962)) < 1e-12);

    // even-total nonzero witnesses on the Weierstrass spaces; at k = 2 the
    // generator extension is (-1)^(m+n)
    ThetaFockSpace w1 = square_space(M_PI);
    CHECK(std::abs(coeff(w1, {1, 1, 0, 0}).value - cplx(-11.476429250433)) < 1e-10);
    ThetaFockSpace w2 = square_space(2 * M_PI);
    CHECK(std::abs(coeff(w2, {1, 1, 0, 0}).value - cplx(-11.476429250433)) < 1e-10);
}

TEST_CASE("coeff agrees with the brute-force box sum") {
    ThetaFockSpace spaces[] = {square_space(2 * M_PI, cplx(0, 1), 1.0),
                               generic_space(2.0)};
    for (const auto& sp : spaces) {
        for (auto [m, n, p, q] :
             {std::array{0, 0, 0, 0}, {1, 1, 0, 0}, {2, 0, 1, 1}, {3, 2, 1, 0}}) {
            cplx fast = coeff(sp, {m, n, p, q}).value;
            cplx brute = brute_coeff(sp, m, n, p, q, 14);
            CHECK(std::abs(fast - brute) <= 1e-11 * std::max(1.0, std::abs(brute)));
        }
    }
}

TEST_CASE("coeff_block matches per-tuple sums") {
    ThetaFockSpace sp = generic_space(2.0);
    auto block = coeff_block(sp, 6, 6, 1e-14);
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) {
            SumResult single = coeff(sp, {m, n, 0, 0});
            cplx blocked = block[static_cast<std::size_t>(m) * 7 + n].value;
            CHECK(std::abs(blocked - single.value) <=
                  1e-12 * std::max(1.0, single.abs_mass));
        }
}

TEST_CASE("parity report") {
    ThetaFockSpace sp = square_space(2 * M_PI);
    ParityReport rep = parity_report(sp, 5);
    CHECK(!rep.rows.empty());
    for (const ParityRow& row : rep.rows) {
        CHECK((row.m + row.n + row.p + row.q) % 2 == 1);
        CHECK(row.vanishes);
    }
    CHECK(rep.worst_scale_ratio < 1e-10);
    CHECK(rep.worst_mass_ratio < 1e-10);
    // even-total coefficients are not required to vanish: nonzero witness
    CHECK(rep.max_even_magnitude > 1.0);

    ThetaFockSpace complex_chi = square_space(2 * M_PI, cplx(0, 1), 1.0);
    CHECK_THROWS_AS(parity_report(complex_chi, 3), NotRealCharacter);
}

TEST_CASE("index-swapped conjugation symmetry") {
    ThetaFockSpace sp = square_space(2 * M_PI, cplx(0, 1), 1.0);
    for (auto [m, n, p, q] : {std::array{1, 0, 1, 1}, {2, 1, 0, 1}, {1, 1, 1, 0},
                              {2, 2, 0, 0}, {0, 1, 2, 0}}) {
        CHECK(conj_symmetry_residual(sp, m, n, p, q) < 1e-10);
    }
    // self-conjugate slots reduce to reality/imaginarity by parity
    cplx a = coeff(sp, {2, 2, 1, 1}).value;
    CHECK(std::abs(a.imag()) < 1e-10 * std::max(1.0, std::abs(a)));
}

TEST_CASE("coefficient recurrences") {
    // n = 0 kills the last term
    ThetaFockSpace sp = square_space(2 * M_PI);
    double nu = sp.nu();
    cplx lhs = nu * coeff(sp, {2, 0, 1, 0}).value;
    cplx rhs = coeff(sp, {3, 0, 0, 0}).value;
    CHECK(std::abs(lhs - rhs) <= 1e-10 * std::max(1.0, std::abs(lhs)));

    CHECK(recurrence_residuals(sp, 4) < 1e-9);
    CHECK(recurrence_residuals(square_space(M_PI), 6) < 1e-9);
    CHECK(recurrence_residuals(generic_space(2.0, cplx(0, 1), 1.0), 4) < 1e-9);
}

TEST_CASE("scaling law") {
    ThetaFockSpace sp = square_space(2 * M_PI);
    CHECK(scaling_residual(sp, 1.0, 1, 1, 0, 0) == 0.0);
    CHECK(scaling_residual(sp, cplx(0, 2), 1, 1, 0, 0) < 1e-9);
    ThetaFockSpace gen = generic_space(1.0);
    CHECK(scaling_residual(gen, std::polar(1.0, M_PI / 5), 2, 0, 0, 0) < 1e-9);

    UniformStream rng(606);
    double worst = 0.0;
    for (int i = 0; i < 10; ++i) {
        cplx lambda = rng.next_complex(-1.5, 1.5);
        if (std::abs(lambda) < 0.3) continue;
        worst = std::max(worst, scaling_residual(sp, lambda,
                                                 static_cast<int>(rng.next(0, 3)),
                                                 static_cast<int>(rng.next(0, 3)),
                                                 static_cast<int>(rng.next(0, 2)),
                                                 static_cast<int>(rng.next(0, 2))));
    }
    CHECK(worst < 1e-9);
}

TEST_CASE("gaussian character sum table and shape") {
    // reference values as printed in the source table
    CHECK(std::abs(gaussian_char_sum(1.0)) < 1e-12);
    CHECK(std::abs(gaussian_char_sum(2.0) - 0.8196872998200459) < 1e-10);
    CHECK(std::abs(gaussian_char_sum(4.0) - 0.9925162797522077) < 1e-10);
    CHECK(std::abs(gaussian_char_sum(0.1) + 9.999993971929990) < 1e-9);

    // empirical monotonicity, upper bound, and sign change at t = 1
    double prev = -1e9;
    for (double t = 0.5; t <= 4.001; t += 0.25) {
        double v = gaussian_char_sum(t);
        CHECK(v > prev);
        CHECK(v <= 1.0 + 1e-12);
        if (t < 0.999) CHECK(v < 0.0);
        if (t > 1.001) CHECK(v > 0.0);
        prev = v;
    }
}

TEST_CASE("tail bound majorizes the dropped terms") {
    for (const ThetaFockSpace& sp : {square_space(M_PI), generic_space(2.0)}) {
        for (auto [m, n, p, q] : {std::array{0, 0, 0, 0}, {2, 1, 1, 0}, {4, 4, 2, 2}}) {
            SumResult coarse = coeff(sp, {m, n, p, q, 1e-4});
            SumResult fine = coeff(sp, {m, n, p, q, 1e-16});
            CHECK(std::abs(fine.value - coarse.value) <=
                  coarse.tail_bound + 1e-13 * fine.abs_mass);
        }
    }
}

TEST_CASE("degree cap and argument validation") {
    ThetaFockSpace sp = square_space(M_PI);
    CHECK_THROWS_AS(coeff(sp, {40, 21, 0, 0}), Overflow);
    CHECK_THROWS_AS(coeff(sp, {-1, 0, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(gaussian_char_sum(0.0), std::invalid_argument);
}
