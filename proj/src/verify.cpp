#include "thetafock/verify.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "thetafock/coeffs.hpp"
#include "thetafock/elliptic.hpp"
#include "thetafock/hermite.hpp"
#include "thetafock/kernel.hpp"
#include "thetafock/zeros.hpp"

namespace thetafock {

namespace {

using clock = std::chrono::steady_clock;

double elapsed(clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
}

ThetaFockSpace square_space(double nu_multiple) {
    Lattice lat(cplx(1.0, 0.0), cplx(0.0, 1.0));
    return ThetaFockSpace(PseudoCharacter::weierstrass(lat, nu_multiple * M_PI));
}

ThetaFockSpace generic_space(double k) {
    Lattice lat(cplx(1.0, 0.0), cplx(0.3, 1.1));
    return ThetaFockSpace(PseudoCharacter::weierstrass(lat, k * M_PI / 1.1));
}

std::string fmt(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

CriterionResult check_perelomov() {
    auto t0 = clock::now();
    ThetaFockSpace sp = square_space(1.0);
    SumResult r = coeff(sp, {0, 0, 0, 0});
    double obs = std::abs(r.value) / r.abs_mass;
    CriterionResult res{1, "character sum vanishes at critical density",
                        false, obs, 1e-12, elapsed(t0), 1.0, ""};
    res.detail = "|a_00|/mass = " + fmt(obs);
    res.passed = obs < res.threshold && res.seconds < res.time_budget;
    return res;
}

CriterionResult check_sum_table() {
    auto t0 = clock::now();
    // reference values of the character sum at squared-scale t
    const std::pair<double, double> table[] = {
        {0.01, -100.0},
        {0.1, -9.999993971929990},
        {1.0, 0.0},
        {1.25, 0.3608381973529082},
        {1.5, 0.5852075679820199},
        {1.75, 0.7276806878628701},
        {2.0, 0.8196872998200459},
        {3.0, 0.9637440634268266},
        {4.0, 0.9925162797522077},
        {8.0, 0.9999860505819289},
    };
    double worst = 0.0;
    for (auto [t, expected] : table) {
        worst = std::max(worst, std::abs(gaussian_char_sum(t) - expected));
    }
    CriterionResult res{2, "reference character-sum table", false, worst,
                        1e-9, elapsed(t0), 5.0, "max |delta| = " + fmt(worst)};
    res.passed = worst < res.threshold && res.seconds < res.time_budget;
    return res;
}

CriterionResult check_odd_parity() {
    auto t0 = clock::now();
    double worst = 0.0;
    for (const ThetaFockSpace& sp :
         {square_space(1.0), square_space(2.0), generic_space(1.0)}) {
        ParityReport rep = parity_report(sp, 7);
        worst = std::max(worst, rep.worst_mass_ratio);
    }
    CriterionResult res{3, "odd-parity lattice sums vanish", false, worst,
                        1e-10, elapsed(t0), 30.0,
                        "max |a|/mass over odd tuples = " + fmt(worst)};
    res.passed = worst < res.threshold && res.seconds < res.time_budget;
    return res;
}

CriterionResult check_scaling_law() {
    auto t0 = clock::now();
    ThetaFockSpace sp = square_space(2.0);
    UniformStream rng(0x5ca1e5u);
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
        cplx lambda;
        do {
            lambda = rng.next_complex(-1.5, 1.5);
        } while (std::abs(lambda) < 0.3);
        for (int j = 0; j < 10; ++j) {
            int m = static_cast<int>(rng.next(0.0, 3.0));
            int n = static_cast<int>(rng.next(0.0, 3.0));
            int p = static_cast<int>(rng.next(0.0, 2.0));
            int q = static_cast<int>(rng.next(0.0, 2.0));
            worst = std::max(worst, scaling_residual(sp, lambda, m, n, p, q));
        }
    }
    CriterionResult res{4, "lattice-function scaling law", false, worst, 1e-9,
                        elapsed(t0), 0.0, "max residual = " + fmt(worst)};
    res.passed = worst < res.threshold;
    return res;
}

CriterionResult check_kernel_triangle() {
    auto t0 = clock::now();
    double worst = 0.0;
    const double eps = 1e-14;
    for (double mult : {1.0, 2.0}) {
        ThetaFockSpace sp = square_space(mult);
        FundamentalCell cell(sp.lattice());
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                // centered cell coordinates keep |z|, |w| <= ~0.57
                cplx z = cell.map(0.1 + 0.2 * i - 0.5, 0.1 + 0.2 * j - 0.5);
                cplx w = cell.map(0.1 + 0.2 * j - 0.5, 0.1 + 0.2 * i - 0.5) * 0.9;
                cplx direct = kernel_eval(sp, z, w, eps).value;
                cplx series = kernel_eval_series(sp, z, w, 26, 26, eps);
                cplx poincare = kernel_via_poincare(sp, z, w, 34, eps);
                double scale = std::max(1e-300, std::abs(direct));
                worst = std::max(worst, std::abs(direct - series) / scale);
                worst = std::max(worst, std::abs(direct - poincare) / scale);
                worst = std::max(worst, std::abs(series - poincare) / scale);
            }
        }
    }
    CriterionResult res{5, "kernel route consistency", false, worst, 1e-8,
                        elapsed(t0), 60.0, "max relative spread = " + fmt(worst)};
    res.passed = worst < res.threshold && res.seconds < res.time_budget;
    return res;
}

CriterionResult check_bi_invariance() {
    auto t0 = clock::now();
    UniformStream rng(0xb17a9u);
    double worst = 0.0;
    ThetaFockSpace spaces[] = {square_space(2.0), generic_space(2.0)};
    for (const ThetaFockSpace& sp : spaces) {
        FundamentalCell cell(sp.lattice());
        for (int trial = 0; trial < 10; ++trial) {
            cplx z = cell.map(rng.next(), rng.next());
            cplx w = cell.map(rng.next(), rng.next());
            auto g = sp.lattice().point(static_cast<int>(rng.next(0.0, 5.0)) - 2,
                                        static_cast<int>(rng.next(0.0, 5.0)) - 2);
            auto g2 = sp.lattice().point(static_cast<int>(rng.next(0.0, 5.0)) - 2,
                                         static_cast<int>(rng.next(0.0, 5.0)) - 2);
            worst = std::max(worst, bi_invariance_residual(sp, z, w, g, g2, 1e-13));
        }
    }
    CriterionResult res{6, "kernel bi-invariance", false, worst, 1e-8,
                        elapsed(t0), 0.0, "max residual = " + fmt(worst)};
    res.passed = worst < res.threshold;
    return res;
}

CriterionResult check_reproducing() {
    auto t0 = clock::now();
    double worst = 0.0;
    // at critical density P(e_0) degenerates to 0; the k = 2 space keeps
    // every m nontrivial
    for (double mult : {1.0, 2.0}) {
        ThetaFockSpace sp = square_space(mult);
        for (int m = 0; m <= 2; ++m) {
            worst = std::max(worst, reproducing_residual(sp, m, cplx(0.25, 0.25), 48));
        }
    }
    CriterionResult res{7, "reproducing property quadrature", false, worst,
                        1e-6, elapsed(t0), 0.0, "max residual = " + fmt(worst)};
    res.passed = worst < res.threshold;
    return res;
}

CriterionResult check_zero_count() {
    auto t0 = clock::now();
    UniformStream rng(0x2e105u);
    bool counts_ok = true;
    double worst_closure = 0.0;
    for (bool generic : {false, true}) {
        for (int k = 1; k <= 3; ++k) {
            ThetaFockSpace sp = generic
                                    ? generic_space(static_cast<double>(k))
                                    : square_space(static_cast<double>(k));
            FundamentalCell cell(sp.lattice());
            for (int trial = 0; trial < 5; ++trial) {
                cplx w = cell.map(rng.next(0.1, 0.9), rng.next(0.1, 0.9));
                ZeroCountResult count = zero_count(sp, w);
                if (count.count != k) counts_ok = false;

                ZeroList located = zero_locate(sp, w, 28);
                if (static_cast<int>(located.zeros.size()) != count.count) {
                    counts_ok = false;
                }
                // Gamma-translation closure for the first located zero
                if (!located.zeros.empty()) {
                    double scale = 0.0;
                    for (int i = 0; i < 8; ++i)
                        for (int j = 0; j < 8; ++j)
                            scale = std::max(
                                scale, std::abs(kernel_eval(sp,
                                                            cell.map((i + 0.5) / 8,
                                                                     (j + 0.5) / 8),
                                                            w, 1e-12)
                                                    .value));
                    cplx z0 = located.zeros.front().location;
                    for (const LatticePoint& g : sp.lattice().shell(1)) {
                        double r = std::abs(kernel_eval(sp, z0 + g.value, w, 1e-12).value) / scale;
                        worst_closure = std::max(worst_closure, r);
                    }
                }
            }
        }
    }
    CriterionResult res{8, "zero count equals dimension", false, worst_closure,
                        1e-7, elapsed(t0), 0.0, ""};
    res.detail = std::string("counts ") + (counts_ok ? "match" : "MISMATCH") +
                 ", max translation-closure residual = " + fmt(worst_closure);
    res.passed = counts_ok && worst_closure < res.threshold;
    return res;
}

CriterionResult check_sigma_factorization() {
    auto t0 = clock::now();
    double worst = 0.0;
    double mu_mag = 0.0;
    // the square lattice and a rescaled copy, both at critical density
    Lattice sq(cplx(1.0, 0.0), cplx(0.0, 1.0));
    Lattice sq2(cplx(2.0, 0.0), cplx(0.0, 2.0));
    for (const Lattice& lat : {sq, sq2}) {
        double nu = M_PI / lat.cell_area();
        ThetaFockSpace sp(PseudoCharacter::weierstrass(lat, nu));
        worst = std::max(worst,
                         sigma_factor_residual(sp, sigma_factor_default_samples(sp)));
        MuInvariant mu = mu_invariant(WeierstrassData(lat), nu);
        mu_mag = std::max(mu_mag, std::abs(mu.mu));
    }
    CriterionResult res{9, "one-dimensional sigma factorization", false, worst,
                        1e-7, elapsed(t0), 0.0, ""};
    res.detail = "max ratio spread = " + fmt(worst) + ", |mu| = " + fmt(mu_mag);
    res.passed = worst < res.threshold && mu_mag < 1e-8;
    return res;
}

CriterionResult check_hermite_suite() {
    auto t0 = clock::now();
    UniformStream rng(0x8e2317u);
    double worst = 0.0;

    for (int trial = 0; trial < 100; ++trial) {
        double nu = rng.next(0.7, 2.5);
        cplx xi = rng.next_complex(-1.2, 1.2);
        cplx a = rng.next_complex(-0.4, 0.4);
        cplx b = rng.next_complex(-0.4, 0.4);
        worst = std::max(worst, genfun2_residual(nu, a, b, xi, 25, 25));

        int n = static_cast<int>(rng.next(0.0, 7.0));
        cplx z = rng.next_complex(-0.5, 0.5);
        worst = std::max(worst, genfun1_residual(nu, z, xi, n, 30));
    }

    for (int trial = 0; trial < 100; ++trial) {
        double nu = rng.next(0.7, 2.5);
        cplx xi = rng.next_complex(-2.0, 2.0);
        int m = static_cast<int>(rng.next(0.0, 10.0));
        int n = static_cast<int>(rng.next(0.0, 10.0));

        cplx h = hermite_eval(nu, m, n, xi);
        cplx h_up = hermite_eval(nu, m + 1, n, xi);
        cplx h_dn = n > 0 ? hermite_eval(nu, m, n - 1, xi) : 0.0;
        worst = std::max(worst, std::abs(h_up - nu * xi * h + nu * static_cast<double>(n) * h_dn) /
                                    std::max(1.0, std::abs(h_up)));

        double hscale = std::max(1.0, std::abs(h));
        worst = std::max(worst,
                         std::abs(std::conj(h) - hermite_eval(nu, n, m, xi)) / hscale);
        double parity_sign = ((m + n) % 2) ? -1.0 : 1.0;
        worst = std::max(worst,
                         std::abs(hermite_eval(nu, m, n, -xi) - parity_sign * h) / hscale);

        cplx lambda;
        do {
            lambda = rng.next_complex(-2.0, 2.0);
        } while (std::abs(lambda) < 0.5);
        cplx lhs = hermite_eval(nu / std::norm(lambda), m, n, lambda * xi);
        cplx rhs = h / (std::pow(lambda, n) * std::pow(std::conj(lambda), m));
        worst = std::max(worst, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    CriterionResult res{10, "hermite identity suite", false, worst, 1e-10,
                        elapsed(t0), 0.0, "max residual = " + fmt(worst)};
    res.passed = worst < res.threshold;
    return res;
}

CriterionResult check_coeff_recurrences() {
    auto t0 = clock::now();
    double worst = 0.0;

    worst = std::max(worst, recurrence_residuals(square_space(2.0), 6));
    Lattice gen(cplx(1.0, 0.0), cplx(0.3, 1.1));
    ThetaFockSpace complex_chi(PseudoCharacter::from_generators(
        gen, 2.0 * M_PI / 1.1, cplx(0.0, 1.0), cplx(1.0, 0.0)));
    worst = std::max(worst, recurrence_residuals(complex_chi, 6));

    for (int total = 0; total <= 6; ++total)
        for (int m = 0; m <= total; ++m)
            for (int n = 0; n + m <= total; ++n)
                for (int p = 0; p + n + m <= total; ++p) {
                    int q = total - m - n - p;
                    worst = std::max(worst,
                                     conj_symmetry_residual(complex_chi, m, n, p, q));
                }

    CriterionResult res{11, "coefficient recurrences and conjugation", false,
                        worst, 1e-9, elapsed(t0), 0.0,
                        "max residual = " + fmt(worst)};
    res.passed = worst < res.threshold;
    return res;
}

CriterionResult check_theta_identity() {
    auto t0 = clock::now();
    double worst = 0.0;
    std::ostringstream printed;
    printed.precision(3);
    printed << std::scientific;
    for (double nu : {M_PI / 2.0, 1.0, M_PI, 2.0}) {
        ThetaIdentityReport rep = theta_identity_report(nu);
        worst = std::max(worst, std::abs(rep.split_sum_combination -
                                         gaussian_char_sum(nu / M_PI)));
        worst = std::max(worst,
                         std::abs(rep.theta_combination - rep.split_sum_combination));
        printed << " " << rep.printed_residual;
    }
    CriterionResult res{12, "theta identity report", false, worst, 1e-10,
                        elapsed(t0), 0.0, ""};
    res.detail = "max split-vs-brute delta = " + fmt(worst) +
                 "; printed-identity residuals (reported, not asserted):" +
                 printed.str();
    res.passed = worst < res.threshold;
    return res;
}

} // namespace

std::vector<CriterionResult> run_acceptance() {
    return {
        check_perelomov(),     check_sum_table(),       check_odd_parity(),
        check_scaling_law(),   check_kernel_triangle(), check_bi_invariance(),
        check_reproducing(),   check_zero_count(),      check_sigma_factorization(),
        check_hermite_suite(), check_coeff_recurrences(), check_theta_identity(),
    };
}

} // namespace thetafock
