#include "thetafock/kernel.hpp"

#include <cmath>

#include "thetafock/coeffs.hpp"
#include "thetafock/errors.hpp"
#include "thetafock/shell_sum.hpp"

namespace thetafock {

namespace {

cplx guarded_exp(cplx e) {
    if (e.real() > 700.0) {
        throw Overflow("kernel term exponent exceeds the overflow guard (+700)");
    }
    return std::exp(e);
}

cplx ipow(cplx z, int e) {
    cplx r = 1.0;
    while (e > 0) {
        if (e & 1) r *= z;
        z *= z;
        e >>= 1;
    }
    return r;
}

int kernel_min_shells(const Lattice& lat, double reach) {
    return static_cast<int>(std::ceil(2.0 * reach / lat.shell_min_distance())) + 3;
}

} // namespace

ThetaFockSpace::ThetaFockSpace(const Lattice& lat, double nu,
                               PseudoCharacter chi)
    : chi_(std::move(chi)) {
    if (!(chi_.lattice() == lat) || chi_.nu() != nu) {
        throw std::invalid_argument("ThetaFockSpace: chi was built for a different (lattice, nu)");
    }
}

ThetaFockSpace::ThetaFockSpace(PseudoCharacter chi) : chi_(std::move(chi)) {}

SumResult kernel_eval(const ThetaFockSpace& sp, cplx z, cplx w, double eps,
                      int shell_cap) {
    const Lattice& lat = sp.lattice();
    double nu = sp.nu();
    cplx zw = nu * z * std::conj(w);
    double dmin = lat.shell_min_distance(), dmax = lat.shell_max_distance();
    double reach = std::abs(z) + std::abs(w);

    ShellSumOptions opt{eps, kernel_min_shells(lat, reach), shell_cap};
    auto term = [&](const LatticePoint& p) {
        cplx e = -(nu / 2.0) * std::norm(p.value) +
                 nu * (z * std::conj(p.value) - std::conj(w) * p.value) + zw;
        return sp.chi().evaluate(p) * guarded_exp(e);
    };
    auto majorant = [&](int k) {
        double r_lo = k * dmin, r_hi = k * dmax;
        double e = -(nu / 2.0) * r_lo * r_lo + nu * reach * r_hi + zw.real();
        return 8.0 * k * std::exp(std::min(e, 700.0));
    };
    SumResult res = sum_over_shells(lat, term, majorant, opt);
    double pref = nu / M_PI;
    res.value *= pref;
    res.tail_bound *= pref;
    res.abs_mass *= pref;
    return res;
}

SumResult kernel_eval_dz(const ThetaFockSpace& sp, cplx z, cplx w, double eps,
                         int shell_cap) {
    const Lattice& lat = sp.lattice();
    double nu = sp.nu();
    cplx zw = nu * z * std::conj(w);
    double dmin = lat.shell_min_distance(), dmax = lat.shell_max_distance();
    double reach = std::abs(z) + std::abs(w);

    ShellSumOptions opt{eps, kernel_min_shells(lat, reach), shell_cap};
    auto term = [&](const LatticePoint& p) {
        cplx e = -(nu / 2.0) * std::norm(p.value) +
                 nu * (z * std::conj(p.value) - std::conj(w) * p.value) + zw;
        return nu * (std::conj(p.value) + std::conj(w)) * sp.chi().evaluate(p) *
               guarded_exp(e);
    };
    auto majorant = [&](int k) {
        double r_lo = k * dmin, r_hi = k * dmax;
        double e = -(nu / 2.0) * r_lo * r_lo + nu * reach * r_hi + zw.real();
        return 8.0 * k * nu * (r_hi + std::abs(w)) * std::exp(std::min(e, 700.0));
    };
    SumResult res = sum_over_shells(lat, term, majorant, opt);
    double pref = nu / M_PI;
    res.value *= pref;
    res.tail_bound *= pref;
    res.abs_mass *= pref;
    return res;
}

cplx kernel_eval_series(const ThetaFockSpace& sp, cplx z, cplx w, int M,
                        int N, double eps) {
    auto block = coeff_block(sp, M, N, eps);
    double nu = sp.nu();
    cplx wb = std::conj(w);
    KahanSum sum;
    cplx wm = 1.0; // conj(w)^m / m!
    for (int m = 0; m <= M; ++m) {
        cplx zn = 1.0; // z^n / n!
        for (int n = 0; n <= N; ++n) {
            cplx a = block[static_cast<std::size_t>(m) * (N + 1) + n].value;
            sum.add((m % 2 ? -1.0 : 1.0) * a * zn * wm);
            zn *= z / static_cast<double>(n + 1);
        }
        wm *= wb / static_cast<double>(m + 1);
    }
    return (nu / M_PI) * sum.value();
}

SumResult poincare_monomial(const ThetaFockSpace& sp, int m, cplx z,
                            double eps, int shell_cap) {
    const Lattice& lat = sp.lattice();
    double nu = sp.nu();
    double dmin = lat.shell_min_distance(), dmax = lat.shell_max_distance();
    double reach = std::abs(z) + std::sqrt((m + 1) / nu);

    ShellSumOptions opt{eps, kernel_min_shells(lat, reach), shell_cap};
    auto term = [&](const LatticePoint& p) {
        cplx e = -(nu / 2.0) * std::norm(p.value) + nu * z * std::conj(p.value);
        return sp.chi().evaluate(p) * ipow(z - p.value, m) * guarded_exp(e);
    };
    auto majorant = [&](int k) {
        double r_lo = k * dmin, r_hi = k * dmax;
        double e = -(nu / 2.0) * r_lo * r_lo + nu * std::abs(z) * r_hi;
        return 8.0 * k * std::pow(std::abs(z) + r_hi, m) * std::exp(std::min(e, 700.0));
    };
    return sum_over_shells(lat, term, majorant, opt);
}

cplx kernel_via_poincare(const ThetaFockSpace& sp, cplx z, cplx w, int M,
                         double eps) {
    double nu = sp.nu();
    cplx nw = nu * std::conj(w);
    KahanSum sum;
    cplx factor = 1.0; // (nu conj(w))^m / m!
    for (int m = 0; m <= M; ++m) {
        sum.add(poincare_monomial(sp, m, z, eps).value * factor);
        factor *= nw / static_cast<double>(m + 1);
    }
    return (nu / M_PI) * sum.value();
}

double bi_invariance_residual(const ThetaFockSpace& sp, cplx z, cplx w,
                              const LatticePoint& gamma,
                              const LatticePoint& gamma2, double eps) {
    double nu = sp.nu();
    cplx lhs = kernel_eval(sp, z + gamma.value, w + gamma2.value, eps).value;
    cplx factor_z = sp.chi().evaluate(gamma) *
                    guarded_exp((nu / 2.0) * std::norm(gamma.value) +
                                nu * z * std::conj(gamma.value));
    cplx factor_w = std::conj(sp.chi().evaluate(gamma2)) *
                    guarded_exp((nu / 2.0) * std::norm(gamma2.value) +
                                nu * std::conj(w) * gamma2.value);
    cplx rhs = factor_z * kernel_eval(sp, z, w, eps).value * factor_w;
    return std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs));
}

double reproducing_residual(const ThetaFockSpace& sp, int m, cplx z,
                            int quadN) {
    if (quadN < 8) throw std::invalid_argument("reproducing_residual: quadN must be >= 8");
    const Lattice& lat = sp.lattice();
    double nu = sp.nu();
    const QuadRule& rule = gauss_legendre_01(quadN);
    const double eps = 1e-12;

    // integrand is Gamma-periodic in w, so any cell gives the same value
    KahanSum quad;
    for (int i = 0; i < quadN; ++i) {
        for (int j = 0; j < quadN; ++j) {
            cplx w = rule.nodes[i] * lat.omega1() + rule.nodes[j] * lat.omega2();
            cplx K = kernel_eval(sp, z, w, eps).value;
            cplx f = poincare_monomial(sp, m, w, eps).value;
            quad.add(rule.weights[i] * rule.weights[j] * K * f *
                     std::exp(-nu * std::norm(w)));
        }
    }
    cplx integral = quad.value() * lat.cell_area();
    cplx fz = poincare_monomial(sp, m, z, eps).value;
    return std::abs(integral - fz) / std::max(1.0, std::abs(fz));
}

} // namespace thetafock
